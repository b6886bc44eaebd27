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

#include "cyclo/cyclotomic.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"

namespace cyclo::cyclotomic {

IntPoly phi_poly_uncached(const GeneralIndex& idx) {
  auto primes = idx.distinct_primes();
  // Phi_{p1} = 1 + x + ... + x^(p1 - 1).
  IntPoly phi(std::vector<Int>(primes[0], Int(1)));
  for (std::size_t i = 1; i < primes.size(); ++i) {
    try {
      phi = div_exact(compose_power(phi, primes[i]), phi);
    } catch (const NonExactDivision& e) {
      throw InvariantViolation("Phi_m(x^p) / Phi_m not exact for p = " + std::to_string(primes[i]) +
                               ": " + e.what());
    }
  }
  std::uint64_t r = idx.radical();
  if (idx.n() != r) phi = compose_power(phi, idx.n() / r);
  return phi;
}

IntPoly phi_poly(const GeneralIndex& idx) { return phi_cache().get_or_build(idx); }

IntPoly phi_poly(std::uint64_t n) { return phi_poly(GeneralIndex(n)); }

IntPoly phi_derivative(std::uint64_t n, unsigned d) { return derivative(phi_poly(n), d); }

std::uint64_t totient(const GeneralIndex& idx) {
  std::uint64_t t = 1;
  for (const auto& f : idx.factors()) {
    t *= f.p - 1;
    for (unsigned i = 1; i < f.e; ++i) t *= f.p;
  }
  return t;
}

bool check_palindrome(const GeneralIndex& idx) {
  IntPoly phi = phi_poly(idx);
  return phi == reverse(phi);
}

bool check_constant_and_linear_terms(const PrimeIndex& idx) {
  IntPoly phi = phi_poly(idx.n());
  int expected = idx.k() % 2 == 1 ? 1 : -1;
  return phi.coeff(0) == 1 && phi.coeff(1) == expected;
}

Rat special_value(std::uint64_t p, unsigned d, int x) {
  if (p < 3 || !is_prime(p)) throw UnsupportedIndex("special_value needs an odd prime");
  if (d > 3 || x < -1 || x > 1) throw UnsupportedIndex("special_value covers d <= 3, x in {-1, 0, 1}");
  Rat P(static_cast<unsigned long>(p));
  if (x == 0) {
    // d! times the x^d coefficient, which is 1 while d <= deg Phi_p = p - 1.
    static const long fact[] = {1, 1, 2, 6};
    return d <= p - 1 ? Rat(fact[d]) : Rat(0);
  }
  if (x == 1) {
    switch (d) {
      case 0: return P;
      case 1: return P * (P - 1) / 2;
      case 2: return P * (P - 1) * (P - 2) / 3;
      default: return P * (P - 1) * (P - 2) * (P - 3) / 4;
    }
  }
  switch (d) {
    case 0: return 1;
    case 1: return -(P - 1) / 2;
    case 2: return (P - 1) * (P - 1) / 2;
    default: return -(P - 1) * (P - 3) * (2 * P - 1) / 4;
  }
}

Rat special_value_direct(std::uint64_t p, unsigned d, int x) {
  return eval_rat(derivative(phi_poly(p), d), Rat(x));
}

PhiCache::PhiCache(std::size_t budget_terms) : budget_(budget_terms) {}

std::optional<IntPoly> PhiCache::find(std::uint64_t n) const {
  std::shared_lock lock(mu_);
  auto it = map_.find(n);
  if (it == map_.end()) return std::nullopt;
  {
    std::lock_guard g(lru_mu_);
    lru_.splice(lru_.begin(), lru_, it->second.lru);
  }
  return *it->second.poly;
}

void PhiCache::insert(std::uint64_t n, const IntPoly& phi) {
  std::unique_lock lock(mu_);
  if (map_.count(n)) return;
  lru_.push_front(n);
  map_.emplace(n, Entry{std::make_shared<const IntPoly>(phi), lru_.begin()});
  terms_ += phi.size();
  evict_locked();
}

void PhiCache::evict_locked() {
  // The newest entry is kept even when it alone exceeds the budget.
  while (terms_ > budget_ && lru_.size() > 1) {
    std::uint64_t victim = lru_.back();
    lru_.pop_back();
    auto it = map_.find(victim);
    terms_ -= it->second.poly->size();
    map_.erase(it);
  }
}

IntPoly PhiCache::get_or_build(const GeneralIndex& idx) {
  if (auto hit = find(idx.n())) return *hit;
  std::optional<IntPoly> phi = load_spill(idx.n());
  if (!phi) {
    phi = phi_poly_uncached(idx);
    store_spill(idx.n(), *phi);
  }
  insert(idx.n(), *phi);
  return *phi;
}

std::size_t PhiCache::size_terms() const {
  std::shared_lock lock(mu_);
  return terms_;
}

std::size_t PhiCache::entries() const {
  std::shared_lock lock(mu_);
  return map_.size();
}

void PhiCache::set_budget(std::size_t budget_terms) {
  std::unique_lock lock(mu_);
  budget_ = budget_terms;
  evict_locked();
}

void PhiCache::set_spill_dir(std::string dir) {
  std::unique_lock lock(mu_);
  spill_dir_ = std::move(dir);
}

void PhiCache::clear() {
  std::unique_lock lock(mu_);
  map_.clear();
  lru_.clear();
  terms_ = 0;
}

std::optional<IntPoly> PhiCache::load_spill(std::uint64_t n) const {
  std::string dir;
  {
    std::shared_lock lock(mu_);
    dir = spill_dir_;
  }
  if (dir.empty()) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / ("phi_" + std::to_string(n) + ".txt"));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    IntPoly phi = parse_text(ss.str());
    // A damaged spill file is ignored, never trusted.
    if (static_cast<std::uint64_t>(phi.degree()) != totient(GeneralIndex(n)) || phi.leading() != 1)
      return std::nullopt;
    return phi;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void PhiCache::store_spill(std::uint64_t n, const IntPoly& phi) const {
  std::string dir;
  {
    std::shared_lock lock(mu_);
    dir = spill_dir_;
  }
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto path = std::filesystem::path(dir) / ("phi_" + std::to_string(n) + ".txt");
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_text(phi) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

PhiCache& phi_cache() {
  static PhiCache cache;
  static std::once_flag once;
  std::call_once(once, [] {
    if (const char* dir = std::getenv("CYCLO_CACHE_DIR"); dir && *dir) cache.set_spill_dir(dir);
  });
  return cache;
}

}  // namespace cyclo::cyclotomic
