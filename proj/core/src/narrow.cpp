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

#include <algorithm>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/proxy.hpp"
#include "cyclo/realroots.hpp"
#include "region.hpp"

namespace cyclo::proxy {

using detail::Encl;

namespace {

ConditionEvidence skipped(int index) {
  ConditionEvidence e;
  e.index = index;
  e.verdict = Verdict::Undecided;
  e.detail = "not evaluated: condition 1 fails";
  return e;
}

}  // namespace

// Shared with the well-configured check, which needs the same context.
NarrowCertificate check_narrow_in(const detail::StripContext& S, const PredicateOptions& opt) {
  const Rat& h = S.h;
  NarrowCertificate cert;
  cert.h = h;
  cert.l = RatInterval(0, 1);

  // 1. 0 < h < D(+-1)
  Rat dp = eval_rat(S.P.n[0], Rat(1)) / eval_rat(S.P.q, Rat(1));
  Rat dm = eval_rat(S.P.n[0], Rat(-1)) / eval_rat(S.P.q, Rat(-1));
  auto& c1 = cert.conditions[0];
  c1.index = 1;
  c1.lhs = RatInterval::point(h);
  c1.rhs = RatInterval::point(std::min(dp, dm));
  bool ok1 = sgn(h) > 0 && h < dp && h < dm;
  c1.verdict = ok1 ? Verdict::Pass : Verdict::Fail;
  c1.detail = "h = " + cyclo::to_string(h) + ", D(1) = " + cyclo::to_string(dp) + ", D(-1) = " + cyclo::to_string(dm);
  if (!ok1 || !S.l) {
    for (int i = 1; i < 4; ++i) cert.conditions[i] = skipped(i + 1);
    return cert;
  }
  S.l->refine(opt.start_bits);
  cert.l = S.l->enclosure();

  // 2. D' != 0 wherever |D| <= h: every critical point of D sits outside the strip.
  auto& c2 = cert.conditions[1];
  c2.index = 2;
  c2.lhs = RatInterval::point(h);
  c2.verdict = Verdict::Pass;
  std::vector<Encl> crit_values;
  for (const auto& c : S.crit[1]) {
    crit_values.push_back(detail::abs_value(S.P, 0, c));
    bool outside = c.sign_of(S.g_plus) > 0 || c.sign_of(S.g_minus) < 0;
    if (!outside) {
      c2.verdict = Verdict::Fail;
      c2.witness = c.enclosure();
    }
  }
  if (crit_values.empty()) {
    c2.detail = "D has no critical points in [-1, 1]";
  } else {
    RatInterval m = detail::min_of(crit_values)(opt.start_bits);
    c2.rhs = m;
    c2.detail = "min |D| over critical points in [" + to_decimal_truncated(m.lo, 8) + ", " +
                to_decimal_truncated(m.hi, 8) + "] vs h";
  }

  // 3. D'' != 0 on |x| <= l.
  auto& c3 = cert.conditions[2];
  c3.index = 3;
  c3.verdict = Verdict::Pass;
  c3.rhs = cert.l;
  const AlgebraicReal* nearest = nullptr;
  for (const auto& r : S.crit[2]) {
    if (!nearest || compare(r.abs(), nearest->abs()) < 0) nearest = &r;
    if (compare(r.abs(), *S.l) <= 0) c3.verdict = Verdict::Fail;
  }
  if (nearest) {
    AlgebraicReal m = nearest->abs();
    m.refine(opt.start_bits);
    c3.lhs = m.enclosure();
    c3.witness = nearest->enclosure();
    c3.detail = "smallest |root of D''| vs l";
  } else {
    c3.detail = "D'' has no roots in [-1, 1]";
  }

  // 4. |D''| < 1/(3l) on [-1, 1].
  auto& c4 = cert.conditions[3];
  c4.index = 4;
  std::vector<Encl> d2{detail::abs_value(S.P, 2, AlgebraicReal(Rat(1))),
                       detail::abs_value(S.P, 2, AlgebraicReal(Rat(-1)))};
  for (const auto& c : S.crit[3]) d2.push_back(detail::abs_value(S.P, 2, c));
  Encl lhs = detail::max_of(d2);
  Encl lenc = detail::of(std::shared_ptr<const AlgebraicReal>(S.l));
  Encl rhs = [lenc](unsigned bits) { return RatInterval::point(1) / (RatInterval::point(3) * lenc(bits)); };
  RatInterval a, b;
  c4.verdict = detail::less(lhs, rhs, opt, &a, &b);
  c4.lhs = a;
  c4.rhs = b;
  c4.detail = "max |D''| on [-1, 1] vs 1/(3l)";
  return cert;
}

NarrowCertificate check_narrow(const PrimeIndex& idx, const Rat& h, const PredicateOptions& opt) {
  detail::StripContext S(idx, h);
  return check_narrow_in(S, opt);
}

NarrowCertificate find_narrow_h(const PrimeIndex& idx, const PredicateOptions& opt) {
  IntPoly dphi = cyclotomic::phi_derivative(idx.n());
  if (!roots::is_simple_all(dphi))
    throw SimplicityViolated("Phi_n' has a repeated real root for n = " + idx.to_string());
  detail::ProxyPolys P(idx);
  Rat dp = eval_rat(P.n[0], Rat(1)) / eval_rat(P.q, Rat(1));
  Rat dm = eval_rat(P.n[0], Rat(-1)) / eval_rat(P.q, Rat(-1));
  Rat bound = std::min(dp, dm);
  // h-bar: the smallest |D| at a critical point of D in [-1, 1].
  std::vector<Encl> crit_values;
  for (const auto& c : real_roots_in(P.n[1], Rat(-1), Rat(1))) crit_values.push_back(detail::abs_value(P, 0, c));
  if (!crit_values.empty()) {
    Encl m = detail::min_of(crit_values);
    for (unsigned bits = opt.start_bits;; bits *= 2) {
      RatInterval v = m(bits);
      if (sgn(v.lo) > 0) {
        bound = std::min(bound, v.lo);
        break;
      }
      if (bits >= opt.max_bits) throw SimplicityViolated("a critical value of D is not separated from 0");
    }
  }
  if (sgn(bound) <= 0) throw InvariantViolation("D(+-1) is not positive for n = " + idx.to_string());
  // Largest power of two strictly below the bound.
  Rat h(1);
  while (h >= bound) h /= 2;
  while (h * 2 < bound) h *= 2;
  NarrowCertificate cert;
  for (int halvings = 0; halvings <= 64; ++halvings) {
    detail::StripContext S(idx, h);
    cert = check_narrow_in(S, opt);
    if (cert.passed()) return cert;
    h /= 2;
  }
  return cert;
}

}  // namespace cyclo::proxy
