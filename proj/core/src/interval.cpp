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

#include "cyclo/interval.hpp"

#include <algorithm>
#include <utility>

#include "cyclo/errors.hpp"

namespace cyclo {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InvariantViolation("interval with hi < lo");
}

int RatInterval::sign() const {
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  return 0;
}

Rat RatInterval::mag_lo() const {
  if (contains_zero()) return 0;
  return sgn(lo) > 0 ? lo : Rat(-hi);
}

Rat RatInterval::mag_hi() const { return std::max(Rat(::abs(lo)), Rat(::abs(hi))); }

RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  if (a.is_point() && b.is_point()) return RatInterval::point(a.lo * b.lo);
  Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(c, c + 4);
  return {*mn, *mx};
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
  if (b.contains_zero()) throw InvariantViolation("interval division by an interval containing zero");
  Rat inv_lo = 1 / b.hi;
  Rat inv_hi = 1 / b.lo;
  return a * RatInterval(inv_lo, inv_hi);
}

RatInterval abs(const RatInterval& a) { return {a.mag_lo(), a.mag_hi()}; }

RatInterval pow(const RatInterval& a, unsigned long n) {
  if (n == 0) return RatInterval::point(1);
  auto rpow = [](const Rat& r, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
    return out;
  };
  if (n % 2 == 1) return {rpow(a.lo, n), rpow(a.hi, n)};
  RatInterval m = abs(a);
  return {rpow(m.lo, n), rpow(m.hi, n)};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Rat floor_dyadic(const Rat& r, unsigned bits) {
  Int t = r.get_num();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), bits);
  mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), r.get_den_mpz_t());
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rat out(t, den);
  out.canonicalize();
  return out;
}

Rat ceil_dyadic(const Rat& r, unsigned bits) {
  Int t = r.get_num();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), bits);
  mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), r.get_den_mpz_t());
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rat out(t, den);
  out.canonicalize();
  return out;
}

RatInterval round_outward(const RatInterval& a, unsigned bits) {
  return {floor_dyadic(a.lo, bits), ceil_dyadic(a.hi, bits)};
}

RatInterval eval(const IntPoly& a, const RatInterval& x, unsigned bits) {
  if (a.is_zero()) return RatInterval::point(0);
  if (x.is_point()) {
    Rat v = eval_rat(a, x.lo);
    return bits ? round_outward(RatInterval::point(v), bits) : RatInterval::point(v);
  }
  RatInterval s = RatInterval::point(Rat(a.leading()));
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    s = s * x + RatInterval::point(Rat(a.coeffs()[i]));
    if (bits) s = round_outward(s, bits);
  }
  return s;
}

namespace {

// floor(r^(1/n) * 2^bits) for r >= 0, exactly.
Int root_floor_scaled(const Rat& r, unsigned long n, unsigned bits) {
  // floor((num * 2^(bits n) / den)^(1/n)) = floor(r^(1/n) 2^bits).
  Int t = r.get_num();
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(bits) * n);
  mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), r.get_den_mpz_t());
  Int out;
  mpz_root(out.get_mpz_t(), t.get_mpz_t(), n);
  return out;
}

}  // namespace

RatInterval nth_root(const RatInterval& a, unsigned long n, unsigned bits) {
  if (sgn(a.lo) < 0) throw InvariantViolation("nth_root of an interval reaching below zero");
  if (n == 0) throw InvariantViolation("zeroth root");
  if (n == 1) return round_outward(a, bits);
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Int lo = root_floor_scaled(a.lo, n, bits);
  Int hi = root_floor_scaled(a.hi, n, bits);
  // hi/2^bits <= hi^(1/n); bump unless it is already exact.
  Rat hi_r(hi, den);
  hi_r.canonicalize();
  RatInterval hp = pow(RatInterval::point(hi_r), n);
  if (hp.lo < a.hi) hi += 1;
  Rat l(lo, den), h(hi, den);
  l.canonicalize();
  h.canonicalize();
  return {l, h};
}

}  // namespace cyclo
