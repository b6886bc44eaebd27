// Copyright 2026 The cyclo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Certified real root counting and isolation.
//
// The primary algorithm is Descartes-rule bisection (Vincent-Collins-Akritas)
// on the square-free factors of the input. Node polynomials are first carried
// in long double with a rigorous running error bound per coefficient; a node
// whose signs cannot be certified is recomputed exactly and its subtree
// continues in integer arithmetic. Sturm sequences are provided as an
// independent check.

#ifndef CYCLO_REALROOTS_HPP
#define CYCLO_REALROOTS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/bigpoly.hpp"

namespace cyclo::roots {

/// One isolated real root. Either lo == hi and the root is that rational,
/// or the open interval (lo, hi) holds exactly one distinct root and the
/// square-free factor owning it takes opposite nonzero signs at lo and hi.
struct RootInterval {
  Rat lo;
  Rat hi;
  unsigned multiplicity = 1;
  bool sign_change = true;

  bool exact() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct IsolationReport {
  /// Sorted ascending, pairwise disjoint.
  std::vector<RootInterval> intervals;
  // Counts with multiplicity.
  unsigned N = 0;
  unsigned N_neg = 0;
  unsigned N_zero = 0;
  unsigned N_pos = 0;
  unsigned distinct = 0;
  unsigned distinct_neg = 0;
  unsigned distinct_zero = 0;
  unsigned distinct_pos = 0;
  bool all_simple = true;
  long squarefree_part_degree = 0;
};

struct EngineStats {
  std::uint64_t float_nodes = 0;
  std::uint64_t exact_nodes = 0;
  std::uint64_t fallbacks = 0;
};

/// Smallest e >= 0 with 2^e strictly above the Cauchy bound 1 + max|a_i/a_d|.
unsigned root_bound_exponent(const IntPoly& a);

/// Isolates the roots of a square-free polynomial with a(0) != 0 lying in
/// (0, 2^e), where e = root_bound_exponent(a). Intervals ascending.
std::vector<RootInterval> isolate_positive(const IntPoly& sf, EngineStats* stats = nullptr);

/// All real roots of a square-free polynomial, ascending.
std::vector<RootInterval> isolate_squarefree(const IntPoly& sf, EngineStats* stats = nullptr);

/// Counts and isolating intervals for any nonzero a. Throws ZeroPolynomial.
IsolationReport count_real_roots(const IntPoly& a, EngineStats* stats = nullptr);

/// Counts of a derivative of a cyclotomic polynomial. Additionally asserts
/// that every nonzero root lies strictly inside (-1, 1), throwing
/// InvariantViolation otherwise. The zero root of Phi_n' has multiplicity
/// n / rad(n) - 1, so N_zero is not bounded by 1 for non-squarefree n.
IsolationReport count_critical_points(const IntPoly& dphi, EngineStats* stats = nullptr);

/// Sign of a at a rational point, filtered through a certified long double
/// Horner evaluation before falling back to exact arithmetic.
int sign_at_fast(const IntPoly& a, const Rat& x);

/// Bisects (lo, hi) until its width is at most 2^-bits. The polynomial must
/// take opposite nonzero signs at lo and hi, or lo == hi. A bisection point
/// that is a root collapses the interval onto it.
std::pair<Rat, Rat> refine_root(const IntPoly& a, const Rat& lo, const Rat& hi, unsigned bits);
RootInterval refine_root(const IntPoly& a, const RootInterval& r, unsigned bits);

/// True iff gcd(a, a') has no real roots.
bool is_simple_all(const IntPoly& a);

/// Sign changes of the coefficient sequence (zeros skipped).
unsigned sign_variations(const IntPoly& a);

/// Sturm sequence S0 = a, S1 = a', S_{i+1} = -pp(prem(S_{i-1}, S_i)) with
/// the pseudo-remainder sign corrected so each step is a positive multiple of
/// the true remainder.
std::vector<IntPoly> sturm_sequence(const IntPoly& a);

/// Number of distinct real roots in (lo, hi]. Throws EndpointRoot if a
/// vanishes at lo or hi.
unsigned sturm_count(const IntPoly& a, const Rat& lo, const Rat& hi);
unsigned sturm_count(const std::vector<IntPoly>& seq, const Rat& lo, const Rat& hi);

/// Distinct real roots over (-B, B] with B = 2^root_bound_exponent(a).
unsigned sturm_count_all(const IntPoly& a);

}  // namespace cyclo::roots

#endif  // CYCLO_REALROOTS_HPP
