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

// Shared machinery for the strip predicates: enclosure-valued quantities,
// certified comparisons, and the polynomials behind D and its derivatives.

#ifndef CYCLO_SRC_REGION_HPP
#define CYCLO_SRC_REGION_HPP

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "cyclo/algebraic.hpp"
#include "cyclo/interval.hpp"
#include "cyclo/proxy.hpp"

namespace cyclo::detail {

/// A real quantity known through enclosures that tighten as bits grows.
using Encl = std::function<RatInterval(unsigned bits)>;

Encl constant(const Rat& r);
Encl of(std::shared_ptr<const AlgebraicReal> a);
Encl of(const AlgebraicReal& a);

/// Pass if a < b, Fail if a >= b, Undecided when the enclosures still
/// overlap at opt.max_bits. The last enclosures seen are stored if asked.
proxy::Verdict less(const Encl& a, const Encl& b, const proxy::PredicateOptions& opt,
                    RatInterval* a_last = nullptr, RatInterval* b_last = nullptr);

/// Enclosures of the max / min over a nonempty finite list.
Encl max_of(std::vector<Encl> xs);
Encl min_of(std::vector<Encl> xs);

/// sign(y) |y|^(1/p) for odd p.
RatInterval signed_root(const RatInterval& y, unsigned long p, unsigned bits);

/// D = n[0] / q, D' = n[1] / q^2, D'' = n[2] / q^3, D''' = n[3] / q^4.
struct ProxyPolys {
  IntPoly q;
  std::array<IntPoly, 4> n;
  explicit ProxyPolys(const PrimeIndex& idx);
  /// Enclosure of D^(order) over y.
  RatInterval value(int order, const RatInterval& y, unsigned bits) const;
};

/// Everything about the strip |D| <= h that does not depend on p.
struct StripContext {
  ProxyPolys P;
  unsigned k = 0;
  Rat h;
  IntPoly g_plus;   // zero where D = h
  IntPoly g_minus;  // zero where D = -h
  std::vector<AlgebraicReal> boundary;  // roots of g_plus, g_minus in [-1, 1]
  std::vector<AlgebraicReal> crit[4];   // roots of n[i] in [-1, 1], i >= 1
  std::shared_ptr<AlgebraicReal> l;     // min |x| with |D(x)| >= h
  std::shared_ptr<AlgebraicReal> a;     // max |x| with D''(x) = 0 or |D(x)| <= h

  StripContext(const PrimeIndex& idx, const Rat& h);
  bool in_strip(const AlgebraicReal& x) const;     // |D(x)| <= h
  bool above_strip(const AlgebraicReal& x) const;  // |D(x)| >= h
};

/// |D^(order)| at an algebraic point.
Encl abs_value(const ProxyPolys& P, int order, const AlgebraicReal& x);

}  // namespace cyclo::detail

namespace cyclo::proxy {
NarrowCertificate check_narrow_in(const detail::StripContext& S, const PredicateOptions& opt);
}  // namespace cyclo::proxy

#endif  // CYCLO_SRC_REGION_HPP
