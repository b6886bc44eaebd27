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

#include "region.hpp"

#include <algorithm>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"

namespace cyclo::detail {

Encl constant(const Rat& r) {
  return [r](unsigned) { return RatInterval::point(r); };
}

Encl of(std::shared_ptr<const AlgebraicReal> a) {
  return [a](unsigned bits) {
    a->refine(bits);
    return a->enclosure();
  };
}

Encl of(const AlgebraicReal& a) { return of(std::make_shared<const AlgebraicReal>(a)); }

proxy::Verdict less(const Encl& a, const Encl& b, const proxy::PredicateOptions& opt, RatInterval* a_last,
                    RatInterval* b_last) {
  for (unsigned bits = opt.start_bits;; bits *= 2) {
    bits = std::min(bits, opt.max_bits);
    try {
      RatInterval x = a(bits);
      RatInterval y = b(bits);
      if (a_last) *a_last = x;
      if (b_last) *b_last = y;
      if (x.hi < y.lo) return proxy::Verdict::Pass;
      if (x.lo >= y.hi) return proxy::Verdict::Fail;
    } catch (const InvariantViolation&) {
      // An enclosure too wide to divide by; retry with more bits.
    }
    if (bits >= opt.max_bits) return proxy::Verdict::Undecided;
  }
}

Encl max_of(std::vector<Encl> xs) {
  if (xs.empty()) throw InvariantViolation("max over an empty set");
  return [xs = std::move(xs)](unsigned bits) {
    RatInterval m = xs[0](bits);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      RatInterval v = xs[i](bits);
      m = {std::max(m.lo, v.lo), std::max(m.hi, v.hi)};
    }
    return m;
  };
}

Encl min_of(std::vector<Encl> xs) {
  if (xs.empty()) throw InvariantViolation("min over an empty set");
  return [xs = std::move(xs)](unsigned bits) {
    RatInterval m = xs[0](bits);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      RatInterval v = xs[i](bits);
      m = {std::min(m.lo, v.lo), std::min(m.hi, v.hi)};
    }
    return m;
  };
}

RatInterval signed_root(const RatInterval& y, unsigned long p, unsigned bits) {
  if (sgn(y.lo) >= 0) return nth_root(y, p, bits);
  if (sgn(y.hi) <= 0) return -nth_root(-y, p, bits);
  RatInterval neg = nth_root(RatInterval(0, -y.lo), p, bits);
  RatInterval pos = nth_root(RatInterval(0, y.hi), p, bits);
  return {-neg.hi, pos.hi};
}

ProxyPolys::ProxyPolys(const PrimeIndex& idx) {
  RatFun d = proxy::proxy_d(idx);
  q = d.base();
  n[0] = d.num();
  for (int i = 1; i < 4; ++i) {
    d = d.derivative();
    n[i] = d.num();
  }
}

RatInterval ProxyPolys::value(int order, const RatInterval& y, unsigned bits) const {
  RatInterval num = eval(n[order], y, bits);
  RatInterval den = pow(eval(q, y, bits), static_cast<unsigned long>(order + 1));
  return round_outward(num / den, bits);
}

namespace {

std::vector<AlgebraicReal> roots_in_unit(const IntPoly& f) {
  if (f.is_zero()) throw InvariantViolation("strip polynomial vanishes identically");
  return real_roots_in(f, Rat(-1), Rat(1));
}

const AlgebraicReal& max_abs(const std::vector<const AlgebraicReal*>& xs) {
  const AlgebraicReal* best = xs.front();
  for (const auto* x : xs)
    if (compare(x->abs(), best->abs()) > 0) best = x;
  return *best;
}

}  // namespace

StripContext::StripContext(const PrimeIndex& idx, const Rat& h_) : P(idx), k(idx.k()), h(h_) {
  g_plus = P.n[0] * Int(h.get_den()) - P.q * Int(h.get_num());
  g_minus = P.n[0] * Int(h.get_den()) + P.q * Int(h.get_num());
  for (int i = 1; i < 4; ++i) crit[i] = roots_in_unit(P.n[i]);
  if (sgn(h) > 0) {
    boundary = roots_in_unit(g_plus);
    for (auto& r : roots_in_unit(g_minus)) boundary.push_back(std::move(r));
    std::sort(boundary.begin(), boundary.end());
  }
  if (!boundary.empty()) {
    const AlgebraicReal* best = &boundary.front();
    for (const auto& b : boundary)
      if (compare(b.abs(), best->abs()) < 0) best = &b;
    l = std::make_shared<AlgebraicReal>(best->abs());
  }
  std::vector<const AlgebraicReal*> pool;
  for (const auto& b : boundary) pool.push_back(&b);
  for (const auto& c : crit[2]) pool.push_back(&c);
  if (boundary.empty() && sgn(h) > 0)
    a = std::make_shared<AlgebraicReal>(Rat(1));
  else if (!pool.empty())
    a = std::make_shared<AlgebraicReal>(max_abs(pool).abs());
}

bool StripContext::in_strip(const AlgebraicReal& x) const {
  return x.sign_of(g_plus) <= 0 && x.sign_of(g_minus) >= 0;
}

bool StripContext::above_strip(const AlgebraicReal& x) const {
  return x.sign_of(g_plus) >= 0 || x.sign_of(g_minus) <= 0;
}

Encl abs_value(const ProxyPolys& P, int order, const AlgebraicReal& x) {
  auto px = std::make_shared<const AlgebraicReal>(x);
  return [&P, order, px](unsigned bits) {
    px->refine(bits);
    return abs(P.value(order, px->enclosure(), bits));
  };
}

}  // namespace cyclo::detail
