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

#include "cyclo/ratfun.hpp"

#include "cyclo/errors.hpp"

namespace cyclo {

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  normalize_content();
}

RatFun RatFun::power_form(IntPoly num, IntPoly base, unsigned power) {
  if (power == 0) return RatFun(std::move(num), IntPoly{1});
  if (base.is_zero() || sgn(base.leading()) < 0 || content(base) != 1)
    throw InvariantViolation("power_form base must be primitive with positive leading coefficient");
  IntPoly den = base;
  for (unsigned i = 1; i < power; ++i) den = mul(den, base);
  RatFun f(Raw{}, std::move(num), std::move(den));
  if (f.num_.is_zero()) return RatFun();
  f.base_ = std::move(base);
  f.power_ = power;
  return f;
}

void RatFun::normalize_content() {
  if (sgn(den_.leading()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) return;
  Int c;
  mpz_gcd(c.get_mpz_t(), content(num_).get_mpz_t(), content(den_).get_mpz_t());
  if (c != 1) {
    num_ = div_exact(num_, c);
    den_ = div_exact(den_, c);
  }
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = eval_rat(den_, x);
  if (sgn(d) == 0) throw InvariantViolation("rational function evaluated at a pole");
  return eval_rat(num_, x) / d;
}

int RatFun::sign_at(const Rat& x) const {
  int d = cyclo::sign_at(den_, x);
  if (d == 0) throw InvariantViolation("rational function evaluated at a pole");
  return cyclo::sign_at(num_, x) * d;
}

RatFun RatFun::derivative(unsigned order) const {
  RatFun f = *this;
  for (unsigned i = 0; i < order; ++i) {
    if (f.num_.is_zero()) return f;
    if (f.has_power_form()) {
      IntPoly n = mul(cyclo::derivative(f.num_), f.base_) -
                  mul(f.num_, cyclo::derivative(f.base_)) * Int(f.power_);
      RatFun g(Raw{}, std::move(n), mul(f.den_, f.base_));
      if (g.num_.is_zero()) return RatFun();
      g.base_ = f.base_;
      g.power_ = f.power_ + 1;
      f = std::move(g);
    } else {
      IntPoly n = mul(cyclo::derivative(f.num_), f.den_) - mul(f.num_, cyclo::derivative(f.den_));
      f = RatFun(std::move(n), mul(f.den_, f.den_));
    }
  }
  return f;
}

RatFun RatFun::compose_power(unsigned long p) const {
  RatFun g(Raw{}, cyclo::compose_power(num_, p), cyclo::compose_power(den_, p));
  if (has_power_form()) {
    g.base_ = cyclo::compose_power(base_, p);
    g.power_ = power_;
  }
  return g;
}

RatFun RatFun::operator-() const {
  RatFun g = *this;
  g.num_ = -g.num_;
  return g;
}

RatFun operator*(const Int& c, const RatFun& f) {
  if (sgn(c) == 0) return RatFun();
  RatFun g = f;
  g.num_ *= c;
  g.normalize_content();
  return g;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(mul(a.num_, b.den_) + mul(b.num_, a.den_), mul(a.den_, b.den_));
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

bool RatFun::verify_power_form() const {
  if (!has_power_form()) return true;
  if (base_.degree() > 0 && gcd(base_, cyclo::derivative(base_)).degree() > 0) return false;
  return num_.is_zero() || coprime(num_, base_);
}

bool same_function(const RatFun& a, const RatFun& b) {
  return mul(a.num(), b.den()) == mul(b.num(), a.den());
}

}  // namespace cyclo
