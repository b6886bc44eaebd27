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

// The seven well-configured conditions. H(x) = p D(x^p), so every
// condition is pulled back to y = x^p where only D and its derivatives
// appear:
//   H'(x)  = p^2 x^(p-1) D'(y)
//   H''(x) = p^2 x^(p-2) E(y),  E = (p-1) D' + p y D''
// and E = En / q^3 with En = (p-1) n1 q + p x n2. Extrema over a region
// are taken over region endpoints plus interior critical points; a
// candidate whose membership cannot be decided is kept, which can only
// make a max larger or a min smaller.

#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/proxy.hpp"
#include "region.hpp"

namespace cyclo::proxy {

using detail::Encl;

namespace {

class Checker {
 public:
  Checker(const detail::StripContext& S, std::uint64_t p, const PredicateOptions& opt)
      : S_(S), P_(S.P), p_(p), opt_(opt), p2_(Rat(Int(p) * Int(p))) {
    En_ = mul(P_.n[1], P_.q) * Int(p - 1) + shift_up(P_.n[2], 1) * Int(p);
    a_ = detail::of(std::shared_ptr<const AlgebraicReal>(S.a));
    l_ = detail::of(std::shared_ptr<const AlgebraicReal>(S.l));
    unsigned extra = 8;
    for (std::uint64_t q = p; q; q >>= 1) ++extra;
    // a^p, kept exact so tiny values keep their relative precision.
    ap_ = [a = a_, p, extra](unsigned bits) { return pow(a(bits + extra), p); };
    b_ = [l = l_, p](unsigned bits) { return nth_root(l(bits + 8), p, bits); };
  }

  WellConfiguredCertificate run() {
    WellConfiguredCertificate c;
    c.p = p_;
    c.h = S_.h;
    c.a = a_(opt_.start_bits);
    c.b = b_(opt_.start_bits);
    c.conditions[0] = cond1();
    c.conditions[1] = cond2();
    c.conditions[2] = cond3();
    c.conditions[3] = cond45(true);
    c.conditions[4] = cond45(false);
    c.conditions[5] = cond6();
    c.conditions[6] = cond7();
    return c;
  }

 private:
  // |H'| at x, from an x-enclosure.
  Encl hprime_at_x(Encl X) const {
    return [this, X](unsigned bits) {
      RatInterval x = X(bits);
      RatInterval y = pow(x, p_);
      RatInterval v = RatInterval::point(p2_) * pow(abs(x), p_ - 1) * abs(P_.value(1, y, bits));
      return round_outward(v, bits);
    };
  }

  // |H'| at x = y^(1/p), from a y-enclosure.
  Encl hprime_at_y(Encl Y) const {
    return [this, Y](unsigned bits) {
      RatInterval y = Y(bits);
      RatInterval x = nth_root(abs(y), p_, bits);
      RatInterval v = RatInterval::point(p2_) * pow(x, p_ - 1) * abs(P_.value(1, y, bits));
      return round_outward(v, bits);
    };
  }

  Encl abs_d(int order, Encl Y, const Rat& scale = Rat(1)) const {
    return [this, order, Y, scale](unsigned bits) {
      return RatInterval::point(scale) * abs(P_.value(order, Y(bits), bits));
    };
  }

  bool certainly_less(const Encl& x, const Encl& y) const { return detail::less(x, y, opt_) == Verdict::Pass; }

  void decide(ConditionEvidence& e, const Encl& small, const Encl& big, bool small_is_lhs) {
    RatInterval s, b;
    e.verdict = detail::less(small, big, opt_, &s, &b);
    e.lhs = small_is_lhs ? s : b;
    e.rhs = small_is_lhs ? b : s;
  }

  ConditionEvidence cond1() {
    ConditionEvidence e;
    e.index = 1;
    decide(e, a_, b_, true);
    e.detail = "a vs b = l^(1/p)";
    return e;
  }

  ConditionEvidence cond2() {
    ConditionEvidence e;
    e.index = 2;
    Rat p(p_);
    Encl neg_ap = [ap = ap_](unsigned bits) { return -ap(bits); };
    std::vector<Encl> cands{abs_d(0, ap_, p), abs_d(0, neg_ap, p)};
    unsigned interior = 0;
    for (const auto& c : S_.crit[1]) {
      Encl ac = detail::of(c.abs());
      if (certainly_less(ap_, ac)) continue;
      cands.push_back(abs_d(0, detail::of(c), p));
      ++interior;
    }
    decide(e, detail::max_of(cands), detail::constant(S_.h), true);
    e.detail = "max |H| on |x| <= a (" + std::to_string(interior) + " interior critical points) vs h";
    return e;
  }

  ConditionEvidence cond3() {
    ConditionEvidence e;
    e.index = 3;
    std::vector<Encl> dmin;
    std::vector<Encl> hmax{detail::constant(Rat(0))};
    for (const auto& b : S_.boundary) {
      dmin.push_back(detail::abs_value(P_, 1, b));
      hmax.push_back(hprime_at_x(detail::of(b)));
    }
    for (const auto& c : S_.crit[2])
      if (S_.in_strip(c)) dmin.push_back(detail::abs_value(P_, 1, c));
    for (const auto& c : S_.crit[1])
      if (S_.in_strip(c)) dmin.push_back(detail::constant(Rat(0)));
    unsigned interior = 0;
    for (const auto& y : real_roots_in(En_, Rat(-1), Rat(1))) {
      auto py = std::make_shared<const AlgebraicReal>(y);
      Encl Y = detail::of(py);
      Encl X = [Y, p = p_](unsigned bits) { return detail::signed_root(Y(bits), p, bits); };
      // Drop x only when |D(x)| > h is certain.
      if (certainly_less(detail::constant(S_.h), abs_d(0, X))) continue;
      hmax.push_back(hprime_at_y(Y));
      ++interior;
    }
    decide(e, detail::max_of(hmax), detail::min_of(dmin), true);
    e.detail = "max |H'| vs min |D'| over |x| <= a, |D| <= h (" + std::to_string(interior) +
               " interior critical points of H')";
    return e;
  }

  // positive: k odd, H'' > 0 on [a, b]; otherwise k even, H'' > 0 on [-b, -a].
  ConditionEvidence cond45(bool positive) {
    ConditionEvidence e;
    e.index = positive ? 4 : 5;
    bool active = (S_.k % 2 == 1) == positive;
    if (!active) {
      e.verdict = Verdict::Pass;
      e.detail = std::string("vacuous: k is ") + (S_.k % 2 == 1 ? "odd" : "even");
      return e;
    }
    // On that side x^(p-2) has the sign of x, so the requirement is
    // En > 0 on [a^p, l] or En < 0 on [-l, -a^p].
    AlgebraicReal l = positive ? *S_.l : -*S_.l;
    e.verdict = Verdict::Pass;
    unsigned inside = 0;
    for (const auto& r : real_roots_in(En_, Rat(-1), Rat(1))) {
      if (r.sign() != (positive ? 1 : -1)) continue;
      if (compare(r.abs(), *S_.l) > 0) continue;
      Encl ar = detail::of(r.abs());
      Verdict v = detail::less(ar, ap_, opt_);
      if (v == Verdict::Pass) continue;
      ++inside;
      e.verdict = v == Verdict::Fail ? Verdict::Fail : Verdict::Undecided;
      e.witness = r.enclosure();
      if (v == Verdict::Fail) break;
    }
    int s = l.sign_of(En_);
    if (e.verdict == Verdict::Pass && s != (positive ? 1 : -1)) e.verdict = Verdict::Fail;
    e.detail = "E has " + std::to_string(inside) + " roots between a^p and l; sign of E at " +
               (positive ? "l" : "-l") + " is " + std::to_string(s);
    return e;
  }

  ConditionEvidence cond6() {
    ConditionEvidence e;
    e.index = 6;
    Rat p(p_);
    std::vector<Encl> dmax{detail::abs_value(P_, 0, AlgebraicReal(Rat(1))),
                           detail::abs_value(P_, 0, AlgebraicReal(Rat(-1)))};
    for (const auto& c : S_.crit[1]) dmax.push_back(detail::abs_value(P_, 0, c));
    std::vector<Encl> hmin{abs_d(0, detail::constant(Rat(1)), p), abs_d(0, detail::constant(Rat(-1)), p)};
    if (!S_.boundary.empty()) hmin.push_back(detail::constant(p * S_.h));
    for (const AlgebraicReal& y : {*S_.l, -*S_.l})
      if (S_.above_strip(y)) hmin.push_back(abs_d(0, detail::of(y), p));
    for (const auto& c : S_.crit[1])
      if (compare(c.abs(), *S_.l) >= 0 && S_.above_strip(c)) hmin.push_back(abs_d(0, detail::of(c), p));
    decide(e, detail::max_of(dmax), detail::min_of(hmin), false);
    e.detail = "min |H| over b <= |x| <= 1, |D(x^p)| >= h (lhs) vs max |D| on [-1, 1] (rhs)";
    return e;
  }

  ConditionEvidence cond7() {
    ConditionEvidence e;
    e.index = 7;
    std::vector<Encl> dmax{detail::abs_value(P_, 1, AlgebraicReal(Rat(1))),
                           detail::abs_value(P_, 1, AlgebraicReal(Rat(-1)))};
    for (const auto& c : S_.crit[2]) dmax.push_back(detail::abs_value(P_, 1, c));
    std::vector<Encl> hmin;
    for (const auto& b : S_.boundary) hmin.push_back(hprime_at_y(detail::of(b)));
    for (const AlgebraicReal& y : {*S_.l, -*S_.l})
      if (S_.in_strip(y)) hmin.push_back(hprime_at_y(detail::of(y)));
    for (const auto& r : real_roots_in(En_, Rat(-1), Rat(1)))
      if (compare(r.abs(), *S_.l) >= 0 && S_.in_strip(r)) hmin.push_back(hprime_at_y(detail::of(r)));
    for (const auto& c : S_.crit[1])
      if (compare(c.abs(), *S_.l) >= 0 && S_.in_strip(c)) hmin.push_back(detail::constant(Rat(0)));
    decide(e, detail::max_of(dmax), detail::min_of(hmin), false);
    e.detail = "min |H'| over b <= |x| <= 1, |D(x^p)| <= h (lhs) vs max |D'| on [-1, 1] (rhs)";
    return e;
  }

  const detail::StripContext& S_;
  const detail::ProxyPolys& P_;
  std::uint64_t p_;
  PredicateOptions opt_;
  Rat p2_;
  IntPoly En_;
  Encl a_, l_, ap_, b_;
};

void require_prime_coprime(const PrimeIndex& idx, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw UnsupportedIndex("expected an odd prime, got " + std::to_string(p));
  if (idx.n() % p == 0) throw IndexNotCoprime(std::to_string(p) + " divides " + std::to_string(idx.n()));
}

WellConfiguredCertificate run_checker(const PrimeIndex& idx, const detail::StripContext& S, std::uint64_t p,
                                      const PredicateOptions& opt) {
  WellConfiguredCertificate c = Checker(S, p, opt).run();
  c.n = idx.n();
  return c;
}

}  // namespace

WellConfiguredCertificate check_well_configured(const PrimeIndex& idx, const Rat& h, std::uint64_t p,
                                                const PredicateOptions& opt) {
  require_prime_coprime(idx, p);
  detail::StripContext S(idx, h);
  if (!check_narrow_in(S, opt).passed()) throw NotNarrow("h = " + cyclo::to_string(h) + " is not narrow for n = " + idx.to_string());
  return run_checker(idx, S, p, opt);
}

std::vector<PSweepRow> sweep_well_configured(const PrimeIndex& idx, const Rat& h, std::uint64_t p_max,
                                             bool stop_at_first, const PredicateOptions& opt) {
  detail::StripContext S(idx, h);
  if (!check_narrow_in(S, opt).passed()) throw NotNarrow("h = " + cyclo::to_string(h) + " is not narrow for n = " + idx.to_string());
  std::vector<PSweepRow> rows;
  for (std::uint64_t p : odd_primes(3, p_max)) {
    if (idx.n() % p == 0) continue;
    rows.push_back({p, run_checker(idx, S, p, opt)});
    if (stop_at_first && rows.back().cert.passed()) break;
  }
  return rows;
}

std::optional<std::uint64_t> smallest_passing_p(const PrimeIndex& idx, const Rat& h, std::uint64_t p_max,
                                                const PredicateOptions& opt) {
  auto rows = sweep_well_configured(idx, h, p_max, true, opt);
  if (!rows.empty() && rows.back().cert.passed()) return rows.back().p;
  return std::nullopt;
}

}  // namespace cyclo::proxy
