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

#include "cyclo/algebraic.hpp"

#include <algorithm>

#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/realroots.hpp"

namespace cyclo {

AlgebraicReal::AlgebraicReal(const Rat& r) : lo_(r), hi_(r) {
  // x * den - num
  poly_ = IntPoly(std::vector<Int>{-r.get_num(), r.get_den()});
}

AlgebraicReal::AlgebraicReal(IntPoly sf, Rat lo, Rat hi) : poly_(std::move(sf)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw InvariantViolation("algebraic number needs a nonconstant polynomial");
  if (lo_ == hi_) return;
  if (poly_.degree() == 1) {
    lo_ = hi_ = Rat(-poly_.coeff(0), poly_.coeff(1));
    lo_.canonicalize();
    hi_ = lo_;
    return;
  }
  slo_ = roots::sign_at_fast(poly_, lo_);
  int shi = roots::sign_at_fast(poly_, hi_);
  if (slo_ == 0 || shi == 0 || slo_ == shi)
    throw InvariantViolation("algebraic number interval lacks a sign change");
}

void AlgebraicReal::bisect() const {
  if (is_rational()) return;
  Rat m = (lo_ + hi_) / 2;
  int s = roots::sign_at_fast(poly_, m);
  if (s == 0) {
    lo_ = hi_ = m;
  } else if (s == slo_) {
    lo_ = m;
  } else {
    hi_ = m;
  }
}

void AlgebraicReal::refine(unsigned bits) const {
  Rat target(1);
  mpz_mul_2exp(target.get_den_mpz_t(), target.get_den_mpz_t(), bits);
  while (!is_rational() && hi_ - lo_ > target) bisect();
}

int AlgebraicReal::sign_of(const IntPoly& g) const {
  if (g.is_zero()) return 0;
  if (is_rational()) return sign_at(g, lo_);
  IntPoly c = gcd(poly_, g);
  if (c.degree() >= 1) {
    // c divides the square-free poly_, so it has at most one root here and
    // changes sign across it.
    int a = sign_at(c, lo_);
    int b = sign_at(c, hi_);
    if (a * b < 0) return 0;
  }
  unsigned bits = 64;
  for (;;) {
    RatInterval v = eval(g, enclosure(), bits);
    if (int s = v.sign()) return s;
    bisect();
    if (is_rational()) return sign_at(g, lo_);
    bits += 32;
  }
}

AlgebraicReal AlgebraicReal::operator-() const {
  if (is_rational()) return AlgebraicReal(Rat(-lo_));
  return AlgebraicReal(reflect(poly_), -hi_, -lo_);
}

int AlgebraicReal::sign() const { return compare(*this, Rat(0)); }

AlgebraicReal AlgebraicReal::abs() const { return sign() < 0 ? -*this : *this; }

std::string AlgebraicReal::to_decimal(unsigned digits) const {
  if (is_rational()) return to_decimal_truncated(lo_, digits);
  unsigned bits = digits * 4 + 8;
  std::string s;
  for (int round = 0; round < 40; ++round) {
    refine(bits);
    if (is_rational()) return to_decimal_truncated(lo_, digits);
    s = certified_decimal(lo_, hi_, digits);
    std::size_t dot = s.find('.');
    if (dot != std::string::npos && s.size() - dot - 1 >= digits) return s;
    bits += 16;
  }
  // A value sitting on a decimal boundary; the shorter prefix is still certified.
  return s;
}

long double AlgebraicReal::approx() const {
  refine(70);
  Rat m = (lo_ + hi_) / 2;
  return static_cast<long double>(m.get_d());
}

int compare(const AlgebraicReal& a, const Rat& r) {
  if (a.is_rational()) return cmp(a.rational(), r);
  if (r <= a.lo()) return 1;
  if (r >= a.hi()) return -1;
  int s = sign_at(a.poly(), r);
  if (s == 0) return 0;
  return s == sign_at(a.poly(), a.lo()) ? 1 : -1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.is_rational()) return compare(a, b.rational());
  if (a.is_rational()) return -compare(b, a.rational());
  bool tried_equal = false;
  for (;;) {
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (!tried_equal) {
      tried_equal = true;
      IntPoly g = gcd(a.poly(), b.poly());
      // A root of g inside b's interval is a root of b.poly() there, hence b.
      if (g.degree() >= 1 && a.sign_of(g) == 0) {
        if (a.is_rational()) return compare(a, b);
        if (compare(a, b.lo()) > 0 && compare(a, b.hi()) < 0) return 0;
      }
    }
    a.bisect();
    b.bisect();
    if (a.is_rational() || b.is_rational()) return compare(a, b);
  }
}

std::vector<AlgebraicReal> real_roots(const IntPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("real_roots of zero");
  std::vector<AlgebraicReal> out;
  if (a.degree() < 1) return out;
  IntPoly sf = squarefree_part(a);
  for (const auto& r : roots::isolate_squarefree(sf)) {
    if (r.exact())
      out.emplace_back(r.lo);
    else
      out.emplace_back(sf, r.lo, r.hi);
  }
  return out;
}

std::vector<AlgebraicReal> real_roots_in(const IntPoly& a, const Rat& lo, const Rat& hi) {
  std::vector<AlgebraicReal> out;
  for (auto& r : real_roots(a))
    if (compare(r, lo) >= 0 && compare(r, hi) <= 0) out.push_back(std::move(r));
  return out;
}

std::vector<AlgebraicReal> real_roots_in(const IntPoly& a, const AlgebraicReal& lo, const AlgebraicReal& hi) {
  std::vector<AlgebraicReal> out;
  for (auto& r : real_roots(a))
    if (compare(r, lo) >= 0 && compare(r, hi) <= 0) out.push_back(std::move(r));
  return out;
}

}  // namespace cyclo
