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

#include "cyclo/modpoly.hpp"

#include <utility>

#include "cyclo/errors.hpp"

namespace cyclo::modp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) { return a * b % q; }

void make_monic(Poly& a, std::uint64_t q) {
  if (a.empty() || a.back() == 1) return;
  std::uint64_t inv = inverse(a.back(), q);
  for (auto& c : a) c = mulmod(c, inv, q);
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly x_poly() { return Poly{0, 1}; }

}  // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const IntPoly& a, std::uint64_t q) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), q);
  trim(r);
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t q) {
  // Fermat: a^(q-2).
  std::uint64_t r = 1, b = a % q, e = q - 2;
  if (b == 0) throw InvariantViolation("inverse of zero mod q");
  while (e) {
    if (e & 1) r = mulmod(r, b, q);
    b = mulmod(b, b, q);
    e >>= 1;
  }
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t q) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + q - y;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  trim(r);
  return r;
}

Poly rem(Poly a, const Poly& f, std::uint64_t q) {
  if (f.empty()) throw ZeroPolynomial("reduction modulo the zero polynomial");
  trim(a);
  std::size_t df = f.size() - 1;
  std::uint64_t inv = inverse(f.back(), q);
  while (a.size() > df) {
    std::uint64_t c = mulmod(a.back(), inv, q);
    std::size_t k = a.size() - 1 - df;
    if (c)
      for (std::size_t j = 0; j <= df; ++j) a[k + j] = (a[k + j] + (q - mulmod(c, f[j], q))) % q;
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = rem(std::move(a), b, q);
    std::swap(a, b);
  }
  make_monic(a, q);
  return a;
}

Poly derivative(const Poly& a, std::uint64_t q) {
  if (a.size() < 2) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % q, q);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t q) {
  Poly r{1};
  Poly b = rem(base, f, q);
  while (e) {
    if (e & 1) r = rem(mul(r, b, q), f, q);
    e >>= 1;
    if (e) b = rem(mul(b, b, q), f, q);
  }
  return r;
}

bool is_squarefree(const Poly& f, std::uint64_t q) {
  if (f.size() < 2) return false;
  return gcd(f, derivative(f, q), q).size() == 1;
}

bool is_irreducible(const Poly& f0, std::uint64_t q) {
  Poly f = f0;
  trim(f);
  if (f.size() < 2) return false;
  unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  make_monic(f, q);
  // frob[k] = x^(q^k) mod f.
  std::vector<Poly> frob{rem(x_poly(), f, q)};
  for (unsigned k = 1; k <= d; ++k) frob.push_back(powmod(frob.back(), q, f, q));
  if (sub(frob[d], rem(x_poly(), f, q), q).size() != 0) return false;
  for (unsigned r : prime_divisors(d)) {
    Poly g = gcd(f, sub(frob[d / r], x_poly(), q), q);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<unsigned> factor_degrees(const Poly& f0, std::uint64_t q) {
  Poly f = f0;
  trim(f);
  make_monic(f, q);
  std::vector<unsigned> out;
  Poly h = rem(x_poly(), f, q);
  for (unsigned k = 1; f.size() > 1; ++k) {
    if (2 * k > f.size() - 1) {
      out.push_back(static_cast<unsigned>(f.size() - 1));
      break;
    }
    h = powmod(h, q, f, q);
    Poly g = gcd(f, sub(h, x_poly(), q), q);
    if (g.size() > 1) {
      for (std::size_t i = 0; i < (g.size() - 1) / k; ++i) out.push_back(k);
      // f <- f / g by long division.
      Poly a = f, quo(f.size() - g.size() + 1, 0);
      std::size_t dg = g.size() - 1;
      while (a.size() > dg) {
        std::uint64_t c = a.back();
        std::size_t s = a.size() - 1 - dg;
        quo[s] = c;
        for (std::size_t j = 0; j <= dg; ++j) a[s + j] = (a[s + j] + (q - mulmod(c, g[j], q))) % q;
        a.pop_back();
      }
      trim(quo);
      f = quo;
      h = rem(h, f, q);
    }
  }
  return out;
}

}  // namespace cyclo::modp
