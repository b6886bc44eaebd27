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
#include "cyclo/proxy.hpp"
#include "cyclo/realroots.hpp"
#include "oracles.hpp"

using namespace cyclo;
using proxy::proxy_d;
using proxy::proxy_h;

namespace {

oracle::Poly to_oracle(const IntPoly& p) { return oracle::Poly(p.coeffs().begin(), p.coeffs().end()); }

// D_n(x) = x Phi_n'(x) / Phi_n(x), evaluated from the Mobius-product Phi_n.
Rat oracle_d(std::uint64_t n, const Rat& x) {
  auto phi = oracle::mobius_phi(n);
  return x * oracle::eval(oracle::derivative(phi), x) / oracle::eval(phi, x);
}

}  // namespace

TEST(Proxy, DForThree) {
  RatFun d = proxy_d(PrimeIndex({3}));
  EXPECT_EQ(d.num(), (IntPoly{0, 1, 2}));
  EXPECT_EQ(d.den(), (IntPoly{1, 1, 1}));
}

TEST(Proxy, HForThreeAndFive) {
  RatFun h = proxy_h(PrimeIndex({3}), 5);
  RatFun expected(IntPoly::monomial(5, 5) + IntPoly::monomial(10, 10),
                  IntPoly::monomial(1, 0) + IntPoly::monomial(1, 5) + IntPoly::monomial(1, 10));
  EXPECT_TRUE(same_function(h, expected));
}

TEST(Proxy, DAgreesWithOracleAtRationals) {
  for (std::uint64_t n : {3u, 15u, 105u, 69u}) {
    RatFun d = proxy_d(PrimeIndex::from_n(n));
    for (Rat x : {Rat(-9, 10), Rat(-1, 3), Rat(0), Rat(1, 7), Rat(2, 3), Rat(1)})
      EXPECT_EQ(d.eval(x), oracle_d(n, x)) << n << " at " << x;
  }
}

TEST(Proxy, HIsDilatedD) {
  PrimeIndex idx({3, 5});
  RatFun h = proxy_h(idx, 7);
  for (Rat x : {Rat(-1), Rat(-1, 2), Rat(1, 3), Rat(9, 10)}) {
    Rat y = x * x * x * x * x * x * x;
    EXPECT_EQ(h.eval(x), 7 * oracle_d(15, y));
  }
}

TEST(Proxy, DhRecurrence) {
  for (std::uint64_t n : {3u, 15u, 105u, 69u})
    for (std::uint64_t p : {7u, 11u, 13u, 23u, 193u}) {
      if (n % p == 0) continue;
      EXPECT_TRUE(proxy::check_dh_recurrence(PrimeIndex::from_n(n), p)) << n << " " << p;
    }
}

TEST(Proxy, DhRecurrenceAgainstOracle) {
  // D_{np}(x) = H_{n,p}(x) - D_n(x), checked pointwise with the Mobius oracle.
  for (Rat x : {Rat(-3, 4), Rat(1, 5), Rat(4, 5)}) {
    Rat x7 = x * x * x * x * x * x * x;
    EXPECT_EQ(oracle_d(21, x), 7 * oracle_d(3, x7) - oracle_d(3, x));
  }
}

TEST(Proxy, RejectsDivisor) {
  EXPECT_THROW(proxy_h(PrimeIndex({3}), 3), IndexNotCoprime);
  EXPECT_THROW(proxy::check_dh_recurrence(PrimeIndex({3, 5}), 5), IndexNotCoprime);
}

TEST(Proxy, Shapes) {
  for (std::uint64_t n : {3u, 15u, 105u, 69u})
    for (std::uint64_t p : {7u, 11u, 13u, 23u, 193u}) {
      if (n % p == 0) continue;
      auto rep = proxy::shapes_table(PrimeIndex::from_n(n), p);
      EXPECT_TRUE(rep.ok()) << n << " " << p << ": " << rep.mismatches();
      EXPECT_TRUE(rep.mismatches().empty());
      EXPECT_TRUE(proxy::check_shapes_table(PrimeIndex::from_n(n), p));
      // D(0) = 0 and H(0) = 0.
      EXPECT_EQ(rep.d_observed[0][1], 0);
      EXPECT_EQ(rep.h_observed[0][1], 0);
    }
}

TEST(Proxy, GraphCorrespondence) {
  std::vector<Rat> samples;
  for (int i = -10; i <= 10; ++i) samples.emplace_back(i, 10);
  EXPECT_TRUE(proxy::check_graph_correspondence(PrimeIndex({3}), 5, samples));
  EXPECT_TRUE(proxy::check_graph_correspondence(PrimeIndex({3, 5, 7}), 11, samples));
}

TEST(Proxy, PredictCountRecurrence) {
  EXPECT_EQ(proxy::predict_count_recurrence(1u), (proxy::CountPrediction{1, 1, 0}));
  EXPECT_EQ(proxy::predict_count_recurrence(2u), (proxy::CountPrediction{3, 2, 1}));
  EXPECT_EQ(proxy::predict_count_recurrence(3u), (proxy::CountPrediction{7, 5, 2}));
}

TEST(Proxy, PredictionMatchesCountsForSmallestPrimes) {
  // The unrolled recurrence gives 2^k - 1; it needs separated primes, so 105 (N = 5) is left out.
  for (std::uint64_t n : {3u, 15u, 69u}) {
    auto idx = PrimeIndex::from_n(n);
    auto pred = proxy::predict_count_recurrence(idx);
    auto rep = roots::count_critical_points(cyclotomic::phi_derivative(n));
    EXPECT_EQ(pred.N, rep.N) << n;
    EXPECT_EQ(pred.N_neg, rep.N_neg) << n;
    EXPECT_EQ(pred.N_pos, rep.N_pos) << n;
  }
}

TEST(Proxy, RootsOfDNumeratorAreCriticalPoints) {
  // num(D) = x Phi_n' up to content, so its nonzero roots are those of Phi_n'.
  for (std::uint64_t n : {3u, 15u, 105u}) {
    IntPoly num = proxy_d(PrimeIndex::from_n(n)).num();
    IntPoly dphi = cyclotomic::phi_derivative(n);
    EXPECT_EQ(num.coeff(0), 0);
    auto a = real_roots(div_exact(num, IntPoly{0, 1}));
    auto b = real_roots(dphi);
    ASSERT_EQ(a.size(), b.size()) << n;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i] == b[i]) << n;
  }
}

TEST(Proxy, PowerFormDerivatives) {
  RatFun d = proxy_d(PrimeIndex({3, 5}));
  for (unsigned order = 1; order <= 2; ++order) {
    RatFun dd = d.derivative(order);
    EXPECT_TRUE(dd.verify_power_form()) << order;
  }
  // Symmetric difference quotient at a rational point.
  Rat x(1, 3);
  RatFun d1 = d.derivative();
  Rat eps(1, 1000000);
  Rat fd = (d.eval(x + eps) - d.eval(x - eps)) / (2 * eps);
  EXPECT_NEAR(d1.eval(x).get_d(), fd.get_d(), 1e-6);
}
