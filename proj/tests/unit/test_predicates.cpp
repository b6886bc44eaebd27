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

#include <algorithm>
#include <cmath>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/proxy.hpp"
#include "cyclo/realroots.hpp"
#include "oracles.hpp"

using namespace cyclo;
using proxy::Verdict;

namespace {

using ld = long double;

// D = N / Q with N = x Phi', Q = Phi, all taken from the Mobius product.
struct GridProxy {
  oracle::Poly N, N1, N2, Q, Q1, Q2;

  explicit GridProxy(std::uint64_t n) {
    Q = oracle::mobius_phi(n);
    Q1 = oracle::derivative(Q);
    Q2 = oracle::derivative(Q1);
    N = oracle::mul(oracle::Poly{0, 1}, Q1);
    N1 = oracle::derivative(N);
    N2 = oracle::derivative(N1);
  }

  ld d(ld x) const { return oracle::eval_ld(N, x) / oracle::eval_ld(Q, x); }
  ld d1(ld x) const {
    ld q = oracle::eval_ld(Q, x);
    return (oracle::eval_ld(N1, x) * q - oracle::eval_ld(N, x) * oracle::eval_ld(Q1, x)) / (q * q);
  }
  ld d2(ld x) const {
    ld q = oracle::eval_ld(Q, x), q1 = oracle::eval_ld(Q1, x);
    ld n = oracle::eval_ld(N, x), n1 = oracle::eval_ld(N1, x);
    ld top = (oracle::eval_ld(N2, x) * q - n * oracle::eval_ld(Q2, x)) * q - 2 * q1 * (n1 * q - n * q1);
    return top / (q * q * q);
  }

  // Bisection for a sign change of f on [lo, hi].
  template <class F>
  static ld refine(F f, ld lo, ld hi) {
    ld flo = f(lo);
    for (int i = 0; i < 80; ++i) {
      ld mid = (lo + hi) / 2;
      ld fm = f(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return (lo + hi) / 2;
  }

  // Roots of f on [-1, 1] located from a uniform grid.
  template <class F>
  static std::vector<ld> roots(F f, unsigned steps = 200000) {
    std::vector<ld> out;
    auto xs = oracle::grid(-1, 1, steps);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      ld a = f(xs[i - 1]), b = f(xs[i]);
      if ((a < 0) != (b < 0)) out.push_back(refine(f, xs[i - 1], xs[i]));
    }
    return out;
  }

  std::vector<ld> boundary(ld h) const {
    auto b = roots([&](ld x) { return std::fabs(d(x)) - h; });
    return b;
  }
  ld l(ld h) const {
    ld best = 2;
    for (ld b : boundary(h)) best = std::min(best, std::fabs(b));
    return best;
  }
  ld a(ld h) const {
    ld best = 0;
    for (ld b : boundary(h)) best = std::max(best, std::fabs(b));
    for (ld r : roots([&](ld x) { return d2(x); })) best = std::max(best, std::fabs(r));
    return best;
  }
};

ld mid(const RatInterval& r) { return static_cast<ld>(r.midpoint().get_d()); }

}  // namespace

TEST(Narrow, FindsCertifiedHeight) {
  auto c3 = proxy::find_narrow_h(PrimeIndex({3}));
  EXPECT_TRUE(c3.passed());
  EXPECT_EQ(c3.h, Rat(1, 32));
  auto c15 = proxy::find_narrow_h(PrimeIndex({3, 5}));
  EXPECT_TRUE(c15.passed());
  EXPECT_EQ(c15.h, Rat(1, 2048));
  // Halving search: the next power of two up is not narrow.
  EXPECT_FALSE(proxy::check_narrow(PrimeIndex({3}), c3.h * 2).passed());
}

TEST(Narrow, GridOracleThree) {
  // Hand derivation: D_3 = (2x^2 + x) / Q, D_3' = (x^2 + 4x + 1) / Q^2, Q = x^2 + x + 1.
  GridProxy g(3);
  for (ld x : {-0.9L, -0.3L, 0.2L, 0.7L}) {
    ld q = x * x + x + 1;
    EXPECT_NEAR(static_cast<double>(g.d(x)), static_cast<double>((2 * x * x + x) / q), 1e-15);
    EXPECT_NEAR(static_cast<double>(g.d1(x)), static_cast<double>((x * x + 4 * x + 1) / (q * q)), 1e-14);
  }
  Rat h(1, 32);
  auto cert = proxy::check_narrow(PrimeIndex({3}), h);
  ASSERT_TRUE(cert.passed());
  ld hl = h.get_d();
  EXPECT_NEAR(static_cast<double>(mid(cert.l)), static_cast<double>(g.l(hl)), 1e-9);
  // Condition 2: the critical value nearest 0 is |D(-2 + sqrt 3)|.
  ld c = -2 + std::sqrt(3.0L);
  ASSERT_TRUE(cert.conditions[1].rhs.has_value());
  EXPECT_NEAR(static_cast<double>(mid(*cert.conditions[1].rhs)), static_cast<double>(std::fabs(g.d(c))), 1e-8);
  EXPECT_GT(std::fabs(g.d(c)), hl);
  // Condition 4: max |D''| on [-1, 1] below 1 / (3 l).
  ld m = 0;
  for (ld x : oracle::grid(-1, 1, 20000)) m = std::max(m, std::fabs(g.d2(x)));
  EXPECT_LT(m, 1 / (3 * g.l(hl)));
}

TEST(Narrow, GridOracleFifteen) {
  GridProxy g(15);
  Rat h(1, 2048);
  auto cert = proxy::check_narrow(PrimeIndex({3, 5}), h);
  ASSERT_TRUE(cert.passed());
  ld hl = h.get_d();
  ld l = g.l(hl);
  EXPECT_NEAR(static_cast<double>(mid(cert.l)), static_cast<double>(l), 1e-9);
  // Every root of D'' lies outside |x| <= l.
  for (ld r : GridProxy::roots([&](ld x) { return g.d2(x); })) EXPECT_GT(std::fabs(r), l);
  // Every critical point of D has |D| > h.
  for (ld r : GridProxy::roots([&](ld x) { return g.d1(x); })) EXPECT_GT(std::fabs(g.d(r)), hl);
}

TEST(Narrow, ConditionOneBoundary) {
  // D_3(1) = 1, so h = 1 is rejected at condition 1, as is h <= 0.
  auto cert = proxy::check_narrow(PrimeIndex({3}), Rat(1));
  EXPECT_FALSE(cert.passed());
  EXPECT_EQ(cert.conditions[0].verdict, Verdict::Fail);
  EXPECT_EQ(proxy::check_narrow(PrimeIndex({3}), Rat(0)).conditions[0].verdict, Verdict::Fail);
  EXPECT_EQ(proxy::check_narrow(PrimeIndex({3}), Rat(-1, 4)).conditions[0].verdict, Verdict::Fail);
  EXPECT_EQ(proxy::check_narrow(PrimeIndex({3}), Rat(99, 100)).conditions[0].verdict, Verdict::Pass);
}

TEST(Narrow, ConditionsOneAndTwoMonotoneInH) {
  // Shrinking h only shrinks the strip, so conditions 1 and 2 never start failing.
  bool seen_pass = false;
  for (Rat h(1, 2); h > Rat(1, 1 << 12); h /= 2) {
    auto c = proxy::check_narrow(PrimeIndex({3, 5}), h);
    bool ok12 = c.conditions[0].verdict == Verdict::Pass && c.conditions[1].verdict == Verdict::Pass;
    if (seen_pass) EXPECT_TRUE(ok12) << h;
    seen_pass = seen_pass || ok12;
  }
  EXPECT_TRUE(seen_pass);
}

TEST(WellConfigured, GridOracleThreeAtThirtySeven) {
  const std::uint64_t p = 37;
  GridProxy g(3);
  Rat h(1, 32);
  ld hl = h.get_d();
  auto cert = proxy::check_well_configured(PrimeIndex({3}), h, p);
  ASSERT_TRUE(cert.passed()) << cert.first_failure();
  EXPECT_EQ(cert.first_failure(), 0);

  ld l = g.l(hl), a = g.a(hl), b = std::pow(l, 1.0L / p);
  EXPECT_NEAR(static_cast<double>(mid(cert.a)), static_cast<double>(a), 1e-9);
  EXPECT_NEAR(static_cast<double>(mid(cert.b)), static_cast<double>(b), 1e-9);
  // 1: a < b
  EXPECT_LT(a, b);
  auto H = [&](ld x) { return p * g.d(std::pow(x, static_cast<ld>(p))); };
  auto ypow = [&](ld x) { return std::pow(std::fabs(x), static_cast<ld>(p)) * (x < 0 ? -1 : 1); };
  auto H1 = [&](ld x) { return static_cast<ld>(p * p) * std::pow(x, static_cast<ld>(p - 1)) * g.d1(ypow(x)); };
  auto H2 = [&](ld x) {
    ld y = ypow(x);
    return static_cast<ld>(p * p) * ((p - 1) * std::pow(x, static_cast<ld>(p - 2)) * g.d1(y) +
                                     p * std::pow(x, static_cast<ld>(2 * p - 2)) * g.d2(y));
  };
  // 2: |H| < h on |x| <= a
  ld hmax = 0;
  for (ld x : oracle::grid(-a, a, 20000)) hmax = std::max(hmax, std::fabs(H(x)));
  EXPECT_LT(hmax, hl);
  // 3: |H'| < |D'| where |x| <= a and |D(x)| <= h
  ld h1max = 0, d1min = 1e30L;
  for (ld x : oracle::grid(-a, a, 20000)) {
    if (std::fabs(g.d(x)) > hl) continue;
    h1max = std::max(h1max, std::fabs(H1(x)));
    d1min = std::min(d1min, std::fabs(g.d1(x)));
  }
  EXPECT_LT(h1max, d1min);
  // 4: k = 1 is odd, so H'' > 0 on [a, b].
  for (ld x : oracle::grid(a, b, 5000)) EXPECT_GT(H2(x), 0) << static_cast<double>(x);
  // 6: |H| > max |D| where b <= |x| <= 1 and |D(x^p)| >= h.
  ld dmax = 0;
  for (ld x : oracle::grid(-1, 1, 20000)) dmax = std::max(dmax, std::fabs(g.d(x)));
  ld hmin6 = 1e30L;
  for (ld x : oracle::grid(b, 1, 20000))
    for (ld s : {x, -x})
      if (std::fabs(g.d(ypow(s))) >= hl) hmin6 = std::min(hmin6, std::fabs(H(s)));
  EXPECT_GT(hmin6, dmax);
  // 7: |H'| > max |D'| on the part of the strip with b <= |x| <= 1; here only x = +-b.
  ld d1max = 0;
  for (ld x : oracle::grid(-1, 1, 20000)) d1max = std::max(d1max, std::fabs(g.d1(x)));
  EXPECT_GT(std::fabs(H1(b)), d1max);
  EXPECT_GT(std::fabs(H1(-b)), d1max);
}

TEST(WellConfigured, FailsAtConditionOneForSmallP) {
  GridProxy g(3);
  Rat h(1, 32);
  auto cert = proxy::check_well_configured(PrimeIndex({3}), h, 5);
  EXPECT_FALSE(cert.passed());
  EXPECT_EQ(cert.first_failure(), 1);
  ld l = g.l(h.get_d());
  EXPECT_GT(g.a(h.get_d()), std::pow(l, 1.0L / 5));
}

TEST(WellConfigured, SmallestPassingPrimeForThree) {
  auto p = proxy::smallest_passing_p(PrimeIndex({3}), Rat(1, 32), 200);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, 37u);
  auto rows = proxy::sweep_well_configured(PrimeIndex({3}), Rat(1, 32), 37);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front().p, 5u);
  EXPECT_EQ(rows.back().p, 37u);
  for (const auto& r : rows) EXPECT_EQ(r.cert.passed(), r.p == 37) << r.p;
}

TEST(WellConfigured, PassingImpliesCountRecurrence) {
  auto idx = PrimeIndex({3});
  auto n_count = roots::count_critical_points(cyclotomic::phi_derivative(3));
  for (const auto& row : proxy::sweep_well_configured(idx, Rat(1, 32), 101)) {
    if (!row.cert.passed()) continue;
    auto rep = roots::count_critical_points(cyclotomic::phi_derivative(3 * row.p));
    EXPECT_EQ(rep.N, 2 * n_count.N + 1) << row.p;
    EXPECT_TRUE(rep.all_simple) << row.p;
  }
}

TEST(WellConfigured, Preconditions) {
  EXPECT_THROW(proxy::check_well_configured(PrimeIndex({3}), Rat(1, 32), 3), IndexNotCoprime);
  EXPECT_THROW(proxy::check_well_configured(PrimeIndex({3}), Rat(1), 37), NotNarrow);
  EXPECT_THROW(proxy::check_well_configured(PrimeIndex({3}), Rat(1, 32), 9), UnsupportedIndex);
}
