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

// Exact cyclotomic polynomials and their elementary identities.

#ifndef CYCLO_CYCLOTOMIC_HPP
#define CYCLO_CYCLOTOMIC_HPP

#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "cyclo/bigpoly.hpp"
#include "cyclo/index.hpp"

namespace cyclo::cyclotomic {

/// Phi_n built prime by prime: Phi_{mp} = Phi_m(x^p) / Phi_m for each prime
/// of the radical, then x -> x^(n / radical). Each division is checked exact.
IntPoly phi_poly_uncached(const GeneralIndex& idx);

/// Cached phi_poly_uncached().
IntPoly phi_poly(const GeneralIndex& idx);
IntPoly phi_poly(std::uint64_t n);

/// d-th derivative of Phi_n.
IntPoly phi_derivative(std::uint64_t n, unsigned d = 1);

std::uint64_t totient(const GeneralIndex& idx);

bool check_palindrome(const GeneralIndex& idx);

/// Constant term 1 and x-coefficient (-1)^(k+1).
bool check_constant_and_linear_terms(const PrimeIndex& idx);

/// Closed-form value of Phi_p^(d)(x) for an odd prime p, d <= 3, x in {-1, 0, 1}.
Rat special_value(std::uint64_t p, unsigned d, int x);

/// The same quantity by differentiating and evaluating Phi_p.
Rat special_value_direct(std::uint64_t p, unsigned d, int x);

/// LRU cache of Phi_n keyed by n. Readers share a lock; insertion is
/// exclusive. With CYCLO_CACHE_DIR set, entries are also written to and read
/// from "<dir>/phi_<n>.txt".
class PhiCache {
 public:
  explicit PhiCache(std::size_t budget_terms = 1u << 22);

  std::optional<IntPoly> find(std::uint64_t n) const;
  void insert(std::uint64_t n, const IntPoly& phi);
  IntPoly get_or_build(const GeneralIndex& idx);

  /// Total number of coefficients held; eviction keeps this within budget.
  std::size_t size_terms() const;
  std::size_t entries() const;
  void set_budget(std::size_t budget_terms);
  void set_spill_dir(std::string dir);
  void clear();

 private:
  struct Entry {
    std::shared_ptr<const IntPoly> poly;
    std::list<std::uint64_t>::iterator lru;
  };
  void evict_locked();
  std::optional<IntPoly> load_spill(std::uint64_t n) const;
  void store_spill(std::uint64_t n, const IntPoly& phi) const;

  mutable std::shared_mutex mu_;
  mutable std::mutex lru_mu_;
  std::unordered_map<std::uint64_t, Entry> map_;
  mutable std::list<std::uint64_t> lru_;
  std::size_t terms_ = 0;
  std::size_t budget_;
  std::string spill_dir_;
};

/// Process-wide cache used by phi_poly(). Picks up CYCLO_CACHE_DIR on first use.
PhiCache& phi_cache();

}  // namespace cyclo::cyclotomic

#endif  // CYCLO_CYCLOTOMIC_HPP
