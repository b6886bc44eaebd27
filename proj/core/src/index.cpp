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

#include "cyclo/index.hpp"

#include <algorithm>
#include <cctype>

#include "cyclo/errors.hpp"

namespace cyclo {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> odd_primes(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p)
    if (p % 2 == 1 && is_prime(p)) out.push_back(p);
  return out;
}

GeneralIndex::GeneralIndex(std::uint64_t n) : n_(n) {
  if (n < 2) throw UnsupportedIndex("index must be at least 2, got " + std::to_string(n));
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) factors_.push_back({p, e});
  }
  if (m > 1) factors_.push_back({m, 1});
}

std::uint64_t GeneralIndex::radical() const {
  std::uint64_t r = 1;
  for (const auto& f : factors_) r *= f.p;
  return r;
}

bool GeneralIndex::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.e == 1; });
}

std::vector<std::uint64_t> GeneralIndex::distinct_primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& f : factors_) out.push_back(f.p);
  return out;
}

PrimeIndex::PrimeIndex(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw UnsupportedIndex("empty prime list");
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    std::uint64_t p = primes_[i];
    if (p == 2 || !is_prime(p)) throw UnsupportedIndex(std::to_string(p) + " is not an odd prime");
    if (i && primes_[i - 1] == p) throw UnsupportedIndex("repeated prime " + std::to_string(p));
  }
}

PrimeIndex PrimeIndex::from_n(std::uint64_t n) {
  GeneralIndex g(n);
  if (!g.is_odd() || !g.is_squarefree())
    throw UnsupportedIndex(std::to_string(n) + " is not a squarefree odd index");
  return PrimeIndex(g.distinct_primes());
}

PrimeIndex PrimeIndex::parse(std::string_view s) {
  std::vector<std::uint64_t> nums;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::uint64_t v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        ++i;
      }
      nums.push_back(v);
    } else if (s[i] == ',' || s[i] == '*' || s[i] == 'x' || std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else {
      throw ParseError("bad index '" + std::string(s) + "'");
    }
  }
  if (nums.empty()) throw ParseError("empty index");
  if (nums.size() == 1) return from_n(nums[0]);
  return PrimeIndex(nums);
}

std::uint64_t PrimeIndex::n() const {
  std::uint64_t n = 1;
  for (auto p : primes_) n *= p;
  return n;
}

std::string PrimeIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(primes_[i]);
  }
  return out;
}

PrimeIndex PrimeIndex::times(std::uint64_t p) const {
  if (std::find(primes_.begin(), primes_.end(), p) != primes_.end())
    throw IndexNotCoprime(std::to_string(p) + " divides " + std::to_string(n()));
  auto v = primes_;
  v.push_back(p);
  return PrimeIndex(v);
}

}  // namespace cyclo
