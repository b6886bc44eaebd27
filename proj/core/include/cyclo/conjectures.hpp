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

// Scanners for the counting, locating and irreducibility conjectures.

#ifndef CYCLO_CONJECTURES_HPP
#define CYCLO_CONJECTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/index.hpp"
#include "cyclo/interval.hpp"
#include "cyclo/realroots.hpp"

namespace cyclo::conjectures {

struct CountRow {
  PrimeIndex idx{{3}};
  unsigned k = 0;
  unsigned lower = 0;  // 2k - 1
  unsigned upper = 0;  // 2^k - 1
  unsigned N = 0;
  unsigned N_neg = 0;
  unsigned N_zero = 0;
  unsigned N_pos = 0;
  bool all_simple = true;
  bool within_bounds = true;
  /// n is the product of the k smallest odd primes.
  bool smallest_primes = false;
  double seconds = 0;
};

/// A pair of rows n p and n p' with p < p', both sharing the base n.
struct MonotoneCheck {
  std::uint64_t base = 0;
  std::uint64_t p = 0;
  std::uint64_t p_prime = 0;
  unsigned N_np = 0;
  unsigned N_np_prime = 0;
  bool holds() const { return N_np <= N_np_prime; }
};

CountRow count_row(const PrimeIndex& idx);
std::vector<CountRow> scan_counting(const std::vector<PrimeIndex>& indices);
/// Every pair of rows whose prime sets differ in exactly one prime each.
std::vector<MonotoneCheck> monotonicity(const std::vector<CountRow>& rows);

/// A named exact law checked on one index.
struct LawCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Squarefree odd n: no zero root, N_neg odd iff k odd, N_pos even iff k odd.
std::vector<LawCheck> parity_law(const PrimeIndex& idx, const roots::IsolationReport& rep);
/// Non-squarefree n: a single distinct zero root and N_pos equal to that of
/// the radical. Squarefree n = 2m: positive and negative counts swap with m.
/// Empty for squarefree odd n.
std::vector<LawCheck> reduction_law(const GeneralIndex& idx);

/// Enclosure of the unique real root of Phi_p' (exact for p = 3).
RatInterval gamma_root(std::uint64_t p, unsigned bits);

struct LocateRow {
  std::vector<unsigned> subset;  // 1-based, ascending
  RatInterval alpha;
  RatInterval beta;
  RatInterval ratio;  // beta / alpha
  bool sign_agrees = true;
  /// Enclosures of neighbouring |beta| overlapped, so the pairing order is not certified.
  bool order_ambiguous = false;
  /// "(1,2)"
  std::string subset_label() const;
};

/// Pairs the real roots of Phi_n' with the predictions by absolute value.
/// Throws CountMismatch unless N_n = 2^k - 1.
std::vector<LocateRow> locate_table(const PrimeIndex& idx, unsigned bits);

struct IrreducibilityVerdict {
  enum class Kind { IrreducibleCertified, Inconclusive };
  Kind kind = Kind::Inconclusive;
  /// The prime that completed the certificate.
  std::uint64_t q = 0;
  /// "irreducible mod q", "degree patterns" or "degree <= 1".
  std::string method;
  /// Good primes examined, with the factor degrees seen mod each.
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> patterns;
};

/// Searches primes q < q_bound not dividing the leading coefficient or the
/// discriminant. Phi_n' irreducible mod one such q, or factor-degree
/// patterns with no common proper subset sum, certify irreducibility over
/// Q. Throws UnsupportedIndex unless n is square-free.
IrreducibilityVerdict irreducibility_witness(const GeneralIndex& idx, std::uint64_t q_bound = 200);
IrreducibilityVerdict irreducibility_witness(const IntPoly& f, std::uint64_t q_bound = 200);

}  // namespace cyclo::conjectures

#endif  // CYCLO_CONJECTURES_HPP
