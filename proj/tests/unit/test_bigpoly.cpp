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

#include "cyclo/bigpoly.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

IntPoly from_oracle(const oracle::Poly& p) { return IntPoly(std::vector<Int>(p.begin(), p.end())); }

IntPoly x_minus(long c, unsigned e = 1) {
  IntPoly f{1};
  for (unsigned i = 0; i < e; ++i) f = f * IntPoly{-c, 1};
  return f;
}

}  // namespace

TEST(BigPoly, AdditionCancelsToCanonicalZero) {
  EXPECT_EQ(IntPoly({1, 1}) + IntPoly({-1, 1}), IntPoly({0, 2}));
  IntPoly p{3, 0, 5};
  EXPECT_EQ(p + IntPoly(), p);
  IntPoly z = IntPoly({0, 0, 1}) + IntPoly({0, 0, -1});
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.coeffs().empty());
  EXPECT_EQ(z.degree(), -1);
}

TEST(BigPoly, Multiplication) {
  EXPECT_EQ(IntPoly({-1, 1}) * IntPoly({1, 1}), IntPoly({-1, 0, 1}));
  // Hand expansion: (x^2 + x + 1)(x - 1) = x^3 + x^2 + x - x^2 - x - 1.
  EXPECT_EQ(IntPoly({1, 1, 1}) * IntPoly({-1, 1}), IntPoly({-1, 0, 0, 1}));
  IntPoly p{4, -2, 7};
  EXPECT_EQ(p * IntPoly{1}, p);
}

TEST(BigPoly, KaratsubaMatchesSchoolbook) {
  std::vector<Int> a, b;
  for (int i = 0; i < 300; ++i) {
    a.push_back(Int((i * 7919) % 1013) - 500);
    b.push_back(Int((i * 104729) % 2003) - 1000);
  }
  IntPoly pa(a), pb(b);
  EXPECT_EQ(mul(pa, pb, 16), mul_schoolbook(pa, pb));
  EXPECT_EQ(mul(pa, pb), mul_schoolbook(pa, pb));
}

TEST(BigPoly, ExactDivision) {
  EXPECT_EQ(div_exact(IntPoly({-1, 0, 0, 1}), IntPoly({-1, 1})), IntPoly({1, 1, 1}));
  IntPoly x15 = IntPoly::monomial(1, 15) - IntPoly{1};
  IntPoly x3 = IntPoly::monomial(1, 3) - IntPoly{1};
  IntPoly x5 = IntPoly::monomial(1, 5) - IntPoly{1};
  IntPoly q = div_exact(x15 * IntPoly{-1, 1}, x3 * x5);
  EXPECT_EQ(q, from_oracle(oracle::mobius_phi(15)));
  EXPECT_THROW(div_exact(IntPoly({0, 0, 1}), IntPoly({1, 1})), NonExactDivision);
}

TEST(BigPoly, Derivative) {
  EXPECT_EQ(derivative(IntPoly({1, 1, 1})), IntPoly({1, 2}));
  EXPECT_TRUE(derivative(IntPoly{7}).is_zero());
  for (long p : {3, 5, 7, 11, 13}) {
    IntPoly phi = cyclotomic::phi_poly(static_cast<std::uint64_t>(p));
    EXPECT_EQ(eval_rat(derivative(phi), 1), Rat(p * (p - 1) / 2)) << p;
  }
  IntPoly d = derivative(x_minus(2, 5));
  EXPECT_EQ(d.degree(), 4);
  EXPECT_EQ(derivative(IntPoly({1, 2, 3}), 2), IntPoly({6}));
}

TEST(BigPoly, ComposePower) {
  EXPECT_EQ(compose_power(IntPoly({1, 1}), 3), IntPoly({1, 0, 0, 1}));
  IntPoly phi3{1, 1, 1};
  EXPECT_EQ(compose_power(phi3, 5), IntPoly({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(compose_power(phi3, 1), phi3);
}

TEST(BigPoly, Evaluation) {
  EXPECT_EQ(eval_rat(IntPoly({1, 1, 1}), 1), Rat(3));
  for (std::uint64_t p : {3, 5, 7, 23}) EXPECT_EQ(eval_rat(cyclotomic::phi_poly(p), -1), Rat(1));
  EXPECT_EQ(eval_rat(IntPoly(), Rat(5, 7)), Rat(0));
  EXPECT_EQ(sign_at(IntPoly({-1, 0, 2}), Rat(1, 2)), -1);
  EXPECT_EQ(sign_at(IntPoly({-1, 0, 2}), Rat(3, 4)), 1);
}

TEST(BigPoly, Gcd) {
  IntPoly g = gcd(IntPoly({-1, 0, 1}), IntPoly({-1, 1}));
  EXPECT_EQ(primitive_part(g) * Int(sgn(g.leading())), IntPoly({-1, 1}));
  IntPoly g2 = gcd(x_minus(1, 2), x_minus(1, 3));
  EXPECT_EQ(g2 * Int(sgn(g2.leading())), x_minus(1, 2));
}

TEST(BigPoly, GcdOfPhi15DerivativesIsOneByResultant) {
  IntPoly d1 = cyclotomic::phi_derivative(15, 1);
  IntPoly d2 = cyclotomic::phi_derivative(15, 2);
  oracle::Poly a(d1.coeffs().begin(), d1.coeffs().end()), b(d2.coeffs().begin(), d2.coeffs().end());
  EXPECT_NE(oracle::resultant(a, b), 0);
  EXPECT_EQ(gcd(d1, d2).degree(), 0);
  EXPECT_TRUE(coprime(d1, d2));
}

TEST(BigPoly, ResultantOracleDetectsCommonRoot) {
  // Sanity of the oracle itself: a shared factor forces a zero resultant.
  oracle::Poly a = oracle::mul({-1, 1}, {2, 1}), b = oracle::mul({-1, 1}, {5, 0, 1});
  EXPECT_EQ(oracle::resultant(a, b), 0);
  // res(x - 2, x - 5) = (2 - 5) up to sign.
  EXPECT_EQ(abs(oracle::resultant({-2, 1}, {-5, 1})), 3);
}

TEST(BigPoly, TaylorShift) {
  auto t = taylor_shift(IntPoly({0, 0, 1}), 1);
  EXPECT_EQ(t.poly, IntPoly({1, 2, 1}));
  EXPECT_EQ(t.scale, 1);
  auto h = taylor_shift(IntPoly({0, 1}), Rat(1, 2));
  EXPECT_EQ(h.poly, IntPoly({1, 2}));
  EXPECT_EQ(h.scale, 2);
  IntPoly p{5, -3, 0, 2};
  EXPECT_EQ(taylor_shift(p, 0).poly, p);
}

TEST(BigPoly, SquarefreeDecomposition) {
  IntPoly f = x_minus(1, 3) * x_minus(-2, 2) * IntPoly{1, 0, 1};
  auto parts = squarefree_decomposition(f);
  ASSERT_GE(parts.size(), 3u);
  EXPECT_EQ(parts[0].degree(), 2);  // x^2 + 1
  EXPECT_EQ(parts[1].degree(), 1);  // x + 2
  EXPECT_EQ(parts[2].degree(), 1);  // x - 1
  EXPECT_EQ(squarefree_part(f).degree(), 4);
}

TEST(BigPoly, TextRoundTrip) {
  IntPoly p{-1, 0, 3, 0, 0, -7};
  EXPECT_EQ(parse_text(to_text(p)), p);
  EXPECT_EQ(parse_pretty(to_pretty(p)), p);
  EXPECT_EQ(to_pretty(IntPoly({1, 1, 1})), "x^2 + x + 1");
}
