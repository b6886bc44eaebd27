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

#include <gtest/gtest.h>

#include "cyclo/algebraic.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/interval.hpp"
#include "cyclo/modpoly.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/ratfun.hpp"

using namespace cyclo;

TEST(Algebraic, SqrtTwo) {
  AlgebraicReal s(IntPoly{-2, 0, 1}, Rat(1), Rat(2));
  EXPECT_FALSE(s.is_rational());
  EXPECT_EQ(s.sign(), 1);
  EXPECT_EQ(s.to_decimal(10), "1.4142135623");
  EXPECT_EQ((-s).to_decimal(5), "-1.41421");
  EXPECT_EQ(compare(s, Rat(7, 5)), 1);
  EXPECT_EQ(compare(s, Rat(3, 2)), -1);
  s.refine(40);
  EXPECT_LE(s.hi() - s.lo(), Rat(1) / Rat(Int(1) << 40));
}

TEST(Algebraic, CompareDistinctPolynomials) {
  AlgebraicReal s2(IntPoly{-2, 0, 1}, Rat(1), Rat(2));
  AlgebraicReal s3(IntPoly{-3, 0, 1}, Rat(1), Rat(2));
  EXPECT_TRUE(s2 < s3);
  EXPECT_FALSE(s3 < s2);
  // The same number described by x^2 - 2 and x^4 - 4 (square-free: (x^2-2)(x^2+2)).
  AlgebraicReal t(IntPoly{-4, 0, 0, 0, 1}, Rat(1), Rat(3, 2));
  EXPECT_TRUE(s2 == t);
}

TEST(Algebraic, Rational) {
  AlgebraicReal r(Rat(-3, 4));
  EXPECT_TRUE(r.is_rational());
  EXPECT_EQ(r.rational(), Rat(-3, 4));
  EXPECT_EQ(r.abs().rational(), Rat(3, 4));
  EXPECT_EQ(r.sign_of(IntPoly{3, 4}), 0);
  EXPECT_EQ(r.sign_of(IntPoly{0, 1}), -1);
}

TEST(Algebraic, SignOfAtIrrational) {
  AlgebraicReal s(IntPoly{-2, 0, 1}, Rat(1), Rat(2));
  EXPECT_EQ(s.sign_of(IntPoly{-2, 0, 1}), 0);
  EXPECT_EQ(s.sign_of(IntPoly{-3, 2}), -1);  // 2 sqrt2 < 3
  EXPECT_EQ(s.sign_of(IntPoly{-2, 0, 0, 1}), 1);  // 2 sqrt2 > 2
}

TEST(Algebraic, RealRoots) {
  auto rs = real_roots(IntPoly{-1, 1} * IntPoly{-2, 0, 1});
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_NEAR(static_cast<double>(rs[0].approx()), -1.4142135623730951, 1e-12);
  EXPECT_NEAR(static_cast<double>(rs[1].approx()), 1.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(rs[2].approx()), 1.4142135623730951, 1e-12);
  auto in = real_roots_in(IntPoly{-1, 1} * IntPoly{-2, 0, 1}, Rat(1), Rat(2));
  EXPECT_EQ(in.size(), 2u);  // closed interval keeps 1
  auto alg = real_roots_in(IntPoly{-1, 1} * IntPoly{-2, 0, 1}, rs[0], rs[1]);
  EXPECT_EQ(alg.size(), 2u);
}

TEST(RatFun, LowestTerms) {
  RatFun f(IntPoly{-1, 0, 1}, IntPoly{-2, 2});
  EXPECT_EQ(f.num(), (IntPoly{1, 1}));
  EXPECT_EQ(f.den(), (IntPoly{2}));
  RatFun g(IntPoly{1}, IntPoly{0, -1});
  EXPECT_EQ(g.num(), (IntPoly{-1}));
  EXPECT_EQ(g.den(), (IntPoly{0, 1}));
  EXPECT_THROW(RatFun(IntPoly{1}, IntPoly()), ZeroPolynomial);
}

TEST(RatFun, EvalAndPole) {
  RatFun f(IntPoly{1}, IntPoly{-1, 1});
  EXPECT_EQ(f.eval(Rat(3)), Rat(1, 2));
  EXPECT_EQ(f.sign_at(Rat(0)), -1);
  EXPECT_THROW(f.eval(Rat(1)), InvariantViolation);
}

TEST(RatFun, DerivativeMatchesQuotientRule) {
  // d/dx (x / (x^2 + x + 1)) = (1 - x^2) / (x^2 + x + 1)^2.
  IntPoly q{1, 1, 1};
  RatFun f = RatFun::power_form(IntPoly{0, 1}, q, 1);
  EXPECT_TRUE(f.verify_power_form());
  RatFun d = f.derivative();
  EXPECT_TRUE(d.has_power_form());
  EXPECT_EQ(d.power(), 2u);
  EXPECT_TRUE(same_function(d, RatFun(IntPoly{1, 0, -1}, q * q)));
  RatFun plain(IntPoly{0, 1}, q);
  EXPECT_TRUE(same_function(plain.derivative(2), f.derivative(2)));
}

TEST(RatFun, ComposePowerAndArithmetic) {
  RatFun f(IntPoly{0, 1}, IntPoly{1, 1});
  RatFun g = f.compose_power(3);
  EXPECT_TRUE(same_function(g, RatFun(IntPoly{0, 0, 0, 1}, IntPoly{1, 0, 0, 1})));
  EXPECT_EQ(g.eval(Rat(2)), Rat(8, 9));
  EXPECT_TRUE(same_function(f - f, RatFun()));
  EXPECT_TRUE(same_function(f + (-f), RatFun()));
  EXPECT_EQ((Int(3) * f).eval(Rat(1)), Rat(3, 2));
}

TEST(Interval, Arithmetic) {
  RatInterval a(Rat(-1), Rat(2)), b(Rat(3), Rat(4));
  EXPECT_EQ(a + b, RatInterval(Rat(2), Rat(6)));
  EXPECT_EQ(a - b, RatInterval(Rat(-5), Rat(-1)));
  EXPECT_EQ(a * b, RatInterval(Rat(-4), Rat(8)));
  EXPECT_EQ(a / b, RatInterval(Rat(-1, 3), Rat(2, 3)));
  EXPECT_THROW(b / a, InvariantViolation);
  EXPECT_EQ(abs(a), RatInterval(Rat(0), Rat(2)));
  EXPECT_EQ(pow(a, 2), RatInterval(Rat(0), Rat(4)));
  EXPECT_EQ(a.sign(), 0);
  EXPECT_EQ(b.sign(), 1);
  EXPECT_EQ(a.mag_lo(), 0);
  EXPECT_EQ(a.mag_hi(), 2);
}

TEST(Interval, RoundOutwardEncloses) {
  RatInterval a(Rat(1, 3), Rat(2, 3));
  RatInterval r = round_outward(a, 8);
  EXPECT_LE(r.lo, a.lo);
  EXPECT_GE(r.hi, a.hi);
  EXPECT_LE(r.width() - a.width(), Rat(1, 128));
  EXPECT_EQ(floor_dyadic(Rat(-1, 3), 2), Rat(-1, 2));
  EXPECT_EQ(ceil_dyadic(Rat(-1, 3), 2), Rat(-1, 4));
}

TEST(Interval, PolynomialEnclosure) {
  IntPoly p{1, -3, 0, 2};
  RatInterval x(Rat(1, 5), Rat(2, 5));
  for (unsigned bits : {0u, 20u}) {
    RatInterval e = eval(p, x, bits);
    for (int i = 0; i <= 10; ++i) {
      Rat t = x.lo + (x.hi - x.lo) * Rat(i, 10);
      EXPECT_TRUE(e.contains(eval_rat(p, t))) << bits;
    }
  }
}

TEST(Interval, NthRoot) {
  RatInterval r = nth_root(RatInterval::point(Rat(2)), 2, 30);
  EXPECT_LE(r.lo * r.lo, 2);
  EXPECT_GE(r.hi * r.hi, 2);
  EXPECT_LE(r.width(), Rat(2) / Rat(Int(1) << 30));
}

TEST(ModPoly, IrreducibilityAndFactorDegrees) {
  const std::uint64_t q = 7;
  // x^2 + 1 is irreducible mod 7 (7 = 3 mod 4); x^2 - 1 splits.
  EXPECT_TRUE(modp::is_irreducible(modp::reduce(IntPoly{1, 0, 1}, q), q));
  EXPECT_FALSE(modp::is_irreducible(modp::reduce(IntPoly{-1, 0, 1}, q), q));
  EXPECT_EQ(modp::factor_degrees(modp::reduce(IntPoly{-1, 0, 1}, q), q), (std::vector<unsigned>{1, 1}));
  // Phi_7 mod 2 splits into two cubics.
  EXPECT_EQ(modp::factor_degrees(modp::reduce(cyclotomic::phi_poly(7), 2), 2), (std::vector<unsigned>{3, 3}));
  EXPECT_FALSE(modp::is_squarefree(modp::reduce(IntPoly{1, 2, 1}, q), q));
}

TEST(ModPoly, GcdAndInverse) {
  const std::uint64_t q = modp::kWordPrimes[0];
  EXPECT_EQ(modp::inverse(3, q) * 3 % q, 1u);
  auto a = modp::reduce(IntPoly{-1, 1} * IntPoly{2, 1}, q);
  auto b = modp::reduce(IntPoly{-1, 1} * IntPoly{5, 1}, q);
  EXPECT_EQ(modp::gcd(a, b, q), modp::reduce(IntPoly{-1, 1}, q));
  // x^q = x mod (x^2 + 1) has no solution pattern issue: check Fermat on x - 2.
  auto f = modp::reduce(IntPoly{-2, 1}, q);
  EXPECT_EQ(modp::powmod(modp::reduce(IntPoly{0, 1}, q), q, f, q), modp::Poly{2});
}

TEST(PolyIo, RoundTrip) {
  IntPoly p{1, 0, -3, 0, 0, 7};
  EXPECT_EQ(to_text(p), "1 0 -3 0 0 7");
  EXPECT_EQ(parse_text(to_text(p)), p);
  EXPECT_EQ(to_text(IntPoly()), "0");
  EXPECT_EQ(to_pretty(p), "7*x^5 - 3*x^2 + 1");
  EXPECT_EQ(parse_pretty("7*x^5 - 3*x^2 + 1"), p);
  EXPECT_EQ(parse_pretty(to_pretty(cyclotomic::phi_poly(105))), cyclotomic::phi_poly(105));
  EXPECT_THROW(parse_text("1 x 2"), ParseError);
}

TEST(PolyIo, Rationals) {
  EXPECT_EQ(to_string(Rat(6) / 4), "3/2");
  EXPECT_EQ(to_string(Rat(-4) / 2), "-2");
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-10/4"), Rat(-5, 2));
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_EQ(to_decimal_truncated(Rat(-2, 3), 4), "-0.6666");
  EXPECT_EQ(to_decimal_truncated(Rat(1, 8), 2), "0.12");
  EXPECT_EQ(certified_decimal(Rat(2469, 2000), Rat(12349, 10000), 8), "1.234");
}
