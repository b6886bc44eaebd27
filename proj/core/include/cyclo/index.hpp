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

// Indices of cyclotomic polynomials: general n >= 2 and squarefree odd n.

#ifndef CYCLO_INDEX_HPP
#define CYCLO_INDEX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Odd primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi);

struct PrimePower {
  std::uint64_t p;
  unsigned e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Any n >= 2 with its factorization.
class GeneralIndex {
 public:
  /// Throws UnsupportedIndex for n < 2.
  explicit GeneralIndex(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  /// Product of the distinct primes dividing n.
  std::uint64_t radical() const;
  bool is_squarefree() const;
  bool is_odd() const { return n_ % 2 == 1; }
  std::vector<std::uint64_t> distinct_primes() const;

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

/// A product of k >= 1 distinct odd primes, stored ascending.
class PrimeIndex {
 public:
  /// Validates primality, oddness and distinctness; sorts.
  explicit PrimeIndex(std::vector<std::uint64_t> primes);
  /// Throws UnsupportedIndex unless n is odd, squarefree and > 1.
  static PrimeIndex from_n(std::uint64_t n);
  /// Accepts "3,23,193", "3*23*193" or a plain integer.
  static PrimeIndex parse(std::string_view s);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::uint64_t n() const;
  unsigned k() const { return static_cast<unsigned>(primes_.size()); }
  /// "3*23*193".
  std::string to_string() const;
  GeneralIndex general() const { return GeneralIndex(n()); }
  /// This index times a new odd prime p; throws IndexNotCoprime if p | n.
  PrimeIndex times(std::uint64_t p) const;

  friend bool operator==(const PrimeIndex&, const PrimeIndex&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace cyclo

#endif  // CYCLO_INDEX_HPP
