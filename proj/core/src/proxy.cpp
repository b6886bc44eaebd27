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

#include "cyclo/proxy.hpp"

#include <sstream>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"

namespace cyclo::proxy {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw UnsupportedIndex("expected an odd prime, got " + std::to_string(p));
}

}  // namespace

RatFun proxy_d(const PrimeIndex& idx) {
  IntPoly phi = cyclotomic::phi_poly(idx.n());
  IntPoly num = shift_up(derivative(phi), 1);
  // Phi_n is irreducible and cannot divide x Phi_n'; a common factor means
  // the construction upstream is broken.
  if (!coprime(num, phi)) throw InvariantViolation("x Phi_n' and Phi_n share a factor for n = " + idx.to_string());
  return RatFun::power_form(std::move(num), std::move(phi), 1);
}

RatFun proxy_h(const PrimeIndex& idx, std::uint64_t p) {
  require_odd_prime(p);
  if (idx.n() % p == 0) throw IndexNotCoprime(std::to_string(p) + " divides " + std::to_string(idx.n()));
  return Int(p) * proxy_d(idx).compose_power(p);
}

bool check_dh_recurrence(const PrimeIndex& idx, std::uint64_t p) {
  RatFun dnp = proxy_d(idx.times(p));
  RatFun h = proxy_h(idx, p);
  RatFun d = proxy_d(idx);
  // dnp.num / dnp.den == (h.num d.den - d.num h.den) / (h.den d.den)
  IntPoly lhs = mul(dnp.num(), mul(h.den(), d.den()));
  IntPoly rhs = mul(mul(h.num(), d.den()) - mul(d.num(), h.den()), dnp.den());
  return lhs == rhs;
}

std::string ShapesReport::mismatches() const {
  std::ostringstream os;
  const char* xs[3] = {"-1", "0", "+1"};
  for (int d = 0; d < 3; ++d)
    for (int x = 0; x < 3; ++x) {
      if (d_observed[d][x] != d_expected[d][x])
        os << "D^(" << d << ")(" << xs[x] << ") sign " << d_observed[d][x] << " expected " << d_expected[d][x]
           << "; ";
      if (h_observed[d][x] != h_expected[d][x])
        os << "H^(" << d << ")(" << xs[x] << ") sign " << h_observed[d][x] << " expected " << h_expected[d][x]
           << "; ";
    }
  return os.str();
}

ShapesReport shapes_table(const PrimeIndex& idx, std::uint64_t p) {
  ShapesReport r;
  int s = idx.k() % 2 == 1 ? 1 : -1;  // (-1)^(k+1)
  r.d_expected = {{{1, 0, 1}, {-1, s, 1}, {-1, s, -1}}};
  r.h_expected = {{{1, 0, 1}, {-1, 0, 1}, {-1, 0, -1}}};
  RatFun d = proxy_d(idx);
  RatFun h = proxy_h(idx, p);
  for (int order = 0; order < 3; ++order) {
    for (int x = -1; x <= 1; ++x) {
      r.d_observed[order][x + 1] = d.sign_at(Rat(x));
      r.h_observed[order][x + 1] = h.sign_at(Rat(x));
    }
    if (order < 2) {
      d = d.derivative();
      h = h.derivative();
    }
  }
  return r;
}

bool check_shapes_table(const PrimeIndex& idx, std::uint64_t p) { return shapes_table(idx, p).ok(); }

bool check_graph_correspondence(const PrimeIndex& idx, std::uint64_t p, const std::vector<Rat>& samples) {
  RatFun d = proxy_d(idx);
  RatFun h = proxy_h(idx, p);
  for (const auto& x : samples) {
    Rat xp;
    mpz_pow_ui(xp.get_num_mpz_t(), x.get_num_mpz_t(), p);
    mpz_pow_ui(xp.get_den_mpz_t(), x.get_den_mpz_t(), p);
    if (h.eval(x) != Rat(p) * d.eval(xp)) return false;
  }
  return true;
}

CountPrediction predict_count_recurrence(unsigned k) {
  if (k == 0) throw UnsupportedIndex("index needs at least one prime");
  CountPrediction c{1, 1, 0};
  for (unsigned j = 1; j < k; ++j) {
    c.N = 2 * c.N + 1;
    c.N_pos = 2 * c.N_pos + (j % 2 == 1 ? 1 : 0);
    c.N_neg = 2 * c.N_neg + (j % 2 == 1 ? 0 : 1);
  }
  return c;
}

CountPrediction predict_count_recurrence(const PrimeIndex& idx) { return predict_count_recurrence(idx.k()); }

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Undecided:
      return "undecided";
  }
  return "?";
}

bool NarrowCertificate::passed() const {
  for (const auto& c : conditions)
    if (c.verdict != Verdict::Pass) return false;
  return true;
}

bool WellConfiguredCertificate::passed() const { return first_failure() == 0; }

int WellConfiguredCertificate::first_failure() const {
  for (const auto& c : conditions)
    if (c.verdict != Verdict::Pass) return c.index;
  return 0;
}

}  // namespace cyclo::proxy
