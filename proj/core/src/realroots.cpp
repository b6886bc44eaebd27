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

#include "cyclo/realroots.hpp"

#include <algorithm>
#include <cmath>

#include "cyclo/errors.hpp"
#include "float_poly.hpp"

namespace cyclo::roots {

using detail::FloatPoly;
using detail::LD;

namespace {

Rat dyadic(const Int& num, long exp2) {
  Rat r(num);
  if (exp2 >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp2));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp2));
  return r;
}

// Divides out the largest common power of two.
void strip_twos(std::vector<Int>& v) {
  mp_bitcnt_t m = ~mp_bitcnt_t(0);
  for (const auto& c : v)
    if (sgn(c) != 0) m = std::min(m, mpz_scan1(c.get_mpz_t(), 0));
  if (m == 0 || m == ~mp_bitcnt_t(0)) return;
  for (auto& c : v) mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), m);
}

unsigned exact_test(const std::vector<Int>& a) {
  std::vector<Int> t(a.rbegin(), a.rend());
  taylor_shift_int(t, 1);
  return cyclo::sign_variations(std::span<const Int>(t));
}

// Descartes bisection on (0, 1). A node (c, k) stands for the open interval
// (c / 2^k, (c + 1) / 2^k); roots come back in those coordinates.
class Bisector {
 public:
  Bisector(const IntPoly& f, EngineStats* stats) : f_(f), stats_(stats) {}

  std::vector<RootInterval> run() {
    FloatPoly root;
    if (float_root(root))
      float_node(std::move(root), 0, 0);
    else
      exact_node(0, 0);
    return out_;
  }

 private:
  bool float_root(FloatPoly& out) {
    out.v.resize(f_.size());
    out.e.resize(f_.size());
    for (std::size_t i = 0; i < f_.size(); ++i)
      if (!detail::to_ld(f_.coeffs()[i], out.v[i], out.e[i])) return false;
    return true;
  }

  void emit(const Int& c, unsigned k) {
    long shift = -static_cast<long>(k);
    out_.push_back({dyadic(c, shift), dyadic(c + 1, shift), 1, true});
  }

  void emit_exact(const Int& num, unsigned k) {
    Rat r = dyadic(num, -static_cast<long>(k));
    out_.push_back({r, r, 1, true});
  }

  void float_node(FloatPoly a, const Int& c, unsigned k) {
    if (stats_) ++stats_->float_nodes;
    FloatPoly t;
    t.v.assign(a.v.rbegin(), a.v.rend());
    t.e.assign(a.e.rbegin(), a.e.rend());
    detail::shift1(t);
    int var = detail::certified_variations(t);
    if (var < 0) return fallback(c, k);
    if (var == 0) return;
    if (var == 1) return emit(c, k);

    // Left child a(x/2): exact scaling by 2^-i, up to subnormal loss.
    FloatPoly l = std::move(a);
    for (std::size_t i = 0; i < l.v.size(); ++i) {
      int sh = -static_cast<int>(i);
      l.v[i] = std::ldexp(l.v[i], sh);
      l.e[i] = std::ldexp(l.e[i], sh) + detail::kEta;
    }
    FloatPoly r = l;
    detail::shift1(r);
    // The midpoint value r(0) must be certified nonzero to split here.
    if (!std::isfinite(r.v[0]) || std::fabs(r.v[0]) <= r.e[0]) return fallback(c, k);
    float_node(std::move(l), 2 * c, k + 1);
    float_node(std::move(r), 2 * c + 1, k + 1);
  }

  void fallback(const Int& c, unsigned k) {
    if (stats_) ++stats_->fallbacks;
    exact_node(c, k);
  }

  // 2^(k d) F((x + c) / 2^k), recomputed from scratch.
  void exact_node(const Int& c, unsigned k) {
    std::size_t d = static_cast<std::size_t>(f_.degree());
    std::vector<Int> a(f_.size());
    for (std::size_t i = 0; i <= d; ++i)
      mpz_mul_2exp(a[i].get_mpz_t(), f_.coeffs()[i].get_mpz_t(), k * (d - i));
    taylor_shift_int(a, c);
    strip_twos(a);
    exact_vca(std::move(a), c, k);
  }

  void exact_vca(std::vector<Int> a, const Int& c, unsigned k) {
    if (stats_) ++stats_->exact_nodes;
    unsigned var = exact_test(a);
    if (var == 0) return;
    if (var == 1) return emit(c, k);
    std::size_t d = a.size() - 1;
    // 2^d a(x/2) and its shift a((x+1)/2).
    for (std::size_t i = 0; i <= d; ++i) mpz_mul_2exp(a[i].get_mpz_t(), a[i].get_mpz_t(), d - i);
    std::vector<Int> r = a;
    taylor_shift_int(r, 1);
    if (sgn(r[0]) == 0) {
      emit_exact(2 * c + 1, k + 1);
      r.erase(r.begin());
    }
    strip_twos(a);
    strip_twos(r);
    exact_vca(std::move(a), 2 * c, k + 1);
    if (r.size() > 1) exact_vca(std::move(r), 2 * c + 1, k + 1);
  }

  const IntPoly& f_;
  EngineStats* stats_;
  std::vector<RootInterval> out_;
};

// Open intervals whose endpoint is itself a root (next to an exactly found
// midpoint root) are shrunk until both endpoint signs are nonzero.
void ensure_sign_change(const IntPoly& f, std::vector<RootInterval>& roots) {
  for (auto& r : roots) {
    if (r.exact()) continue;
    int slo = sign_at_fast(f, r.lo);
    int shi = sign_at_fast(f, r.hi);
    while (slo == 0 || shi == 0) {
      Rat m = (r.lo + r.hi) / 2;
      int sm = sign_at_fast(f, m);
      if (sm == 0) {
        r.lo = r.hi = m;
        break;
      }
      if (slo == 0) {
        if (sm == -shi) {
          r.lo = m;
          slo = sm;
        } else {
          r.hi = m;
          shi = sm;
        }
      } else {
        if (sm == -slo) {
          r.hi = m;
          shi = sm;
        } else {
          r.lo = m;
          slo = sm;
        }
      }
    }
  }
}

struct Tagged {
  RootInterval iv;
  std::size_t factor;
};

bool overlap(const RootInterval& a, const RootInterval& b) {
  const RootInterval& x = a.lo <= b.lo ? a : b;
  const RootInterval& y = a.lo <= b.lo ? b : a;
  if (x.hi > y.lo) return true;
  return x.hi == y.lo && x.exact() && y.exact();
}

void bisect_once(const IntPoly& f, RootInterval& r) {
  if (r.exact()) return;
  Rat m = (r.lo + r.hi) / 2;
  int sm = sign_at_fast(f, m);
  if (sm == 0) {
    r.lo = r.hi = m;
  } else if (sm == sign_at_fast(f, r.lo)) {
    r.lo = m;
  } else {
    r.hi = m;
  }
}

IsolationReport build_report(const IntPoly& a, EngineStats* stats, bool unit_check) {
  if (a.is_zero()) throw ZeroPolynomial("count_real_roots of the zero polynomial");
  IsolationReport rep;
  std::size_t zero_mult = 0;
  while (zero_mult < a.size() && sgn(a.coeffs()[zero_mult]) == 0) ++zero_mult;
  IntPoly a1(std::vector<Int>(a.coeffs().begin() + static_cast<long>(zero_mult), a.coeffs().end()));

  std::vector<IntPoly> factors = a1.degree() > 0 ? squarefree_decomposition(a1) : std::vector<IntPoly>{};
  std::vector<Tagged> all;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() <= 0) continue;
    rep.squarefree_part_degree += factors[i].degree();
    for (auto& iv : isolate_squarefree(factors[i], stats)) {
      iv.multiplicity = static_cast<unsigned>(i + 1);
      all.push_back({iv, i});
    }
  }

  // Roots of different factors are distinct; refine until disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        if (all[i].factor != all[j].factor && overlap(all[i].iv, all[j].iv)) {
          bisect_once(factors[all[i].factor], all[i].iv);
          bisect_once(factors[all[j].factor], all[j].iv);
          changed = true;
        }
  }

  if (unit_check) {
    for (auto& t : all) {
      const IntPoly& f = factors[t.factor];
      RootInterval& r = t.iv;
      if (r.exact()) {
        if (r.lo >= 1 || r.lo <= -1) throw InvariantViolation("critical point outside (-1, 1)");
        continue;
      }
      for (int side : {1, -1}) {
        Rat b(side);
        bool reaches = side == 1 ? r.hi >= b : r.lo <= b;
        if (!reaches) continue;
        int sb = sign_at(f, b);
        bool outside = sb == 0 || (side == 1 ? r.lo >= b : r.hi <= b);
        if (!outside) {
          int sin = sign_at(f, side == 1 ? r.lo : r.hi);
          outside = sin == sb;
        }
        if (outside) throw InvariantViolation("critical point outside (-1, 1)");
        (side == 1 ? r.hi : r.lo) = b;
      }
    }
  }

  if (zero_mult > 0) {
    RootInterval z{0, 0, static_cast<unsigned>(zero_mult), true};
    all.push_back({z, factors.size()});
    rep.squarefree_part_degree += 1;
  }

  std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) { return x.iv.lo < y.iv.lo; });
  for (auto& t : all) {
    const RootInterval& r = t.iv;
    rep.intervals.push_back(r);
    ++rep.distinct;
    rep.N += r.multiplicity;
    if (r.multiplicity > 1) rep.all_simple = false;
    if (r.exact() && sgn(r.lo) == 0) {
      rep.N_zero += r.multiplicity;
      ++rep.distinct_zero;
    } else if (sgn(r.hi) <= 0) {
      rep.N_neg += r.multiplicity;
      ++rep.distinct_neg;
    } else {
      rep.N_pos += r.multiplicity;
      ++rep.distinct_pos;
    }
  }
  return rep;
}

}  // namespace

unsigned root_bound_exponent(const IntPoly& a) {
  if (a.degree() <= 0) return 0;
  // 1 + max|a_i| / |a_d| < 2^e  <=>  max|a_i| < (2^e - 1) |a_d|.
  Int mx = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) mx = std::max(mx, Int(::abs(a.coeffs()[i])));
  Int lead = ::abs(a.leading());
  unsigned e = 0;
  Int p = 1;
  while (!(mx < (p - 1) * lead)) {
    ++e;
    p *= 2;
  }
  return e;
}

std::vector<RootInterval> isolate_positive(const IntPoly& sf, EngineStats* stats) {
  if (sf.is_zero()) throw ZeroPolynomial("isolate_positive of zero");
  if (sf.degree() <= 0) return {};
  if (sgn(sf.coeffs()[0]) == 0) throw InvariantViolation("isolate_positive needs a(0) != 0");
  // (0, B) with B = 2^e is split at 1: roots above 1 are roots of the
  // reciprocal polynomial inside (0, 1), so every bisection runs on (0, 1).
  Int bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, root_bound_exponent(sf));
  std::vector<RootInterval> out;
  IntPoly f = sf;
  if (sign_at(f, Rat(1)) == 0) {
    out.push_back({1, 1, 1, true});
    f = div_exact(f, IntPoly{-1, 1});
  }
  for (auto& r : Bisector(f, stats).run()) out.push_back(r);
  if (f.degree() > 0) {
    for (auto& r : Bisector(reverse(f), stats).run()) {
      Rat lo = r.hi == 0 ? Rat(0) : Rat(1 / r.hi);
      Rat hi = sgn(r.lo) == 0 ? Rat(bound) : Rat(1 / r.lo);
      out.push_back({lo, hi, 1, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  ensure_sign_change(sf, out);
  return out;
}

std::vector<RootInterval> isolate_squarefree(const IntPoly& sf, EngineStats* stats) {
  std::vector<RootInterval> out;
  std::size_t z = 0;
  while (z < sf.size() && sgn(sf.coeffs()[z]) == 0) ++z;
  if (z > 1) throw InvariantViolation("isolate_squarefree input has a repeated root at 0");
  IntPoly g(std::vector<Int>(sf.coeffs().begin() + static_cast<long>(z), sf.coeffs().end()));
  for (const auto& r : isolate_positive(reflect(g), stats))
    out.push_back({-r.hi, -r.lo, r.multiplicity, r.sign_change});
  if (z == 1) out.push_back({0, 0, 1, true});
  for (const auto& r : isolate_positive(g, stats)) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

IsolationReport count_real_roots(const IntPoly& a, EngineStats* stats) { return build_report(a, stats, false); }

IsolationReport count_critical_points(const IntPoly& dphi, EngineStats* stats) {
  return build_report(dphi, stats, true);
}

int sign_at_fast(const IntPoly& a, const Rat& x) {
  if (a.is_zero()) return 0;
  const Int& den = x.get_den();
  std::size_t twos = mpz_scan1(den.get_mpz_t(), 0);
  bool dyadic_den = mpz_sizeinbase(den.get_mpz_t(), 2) == twos + 1;
  if (dyadic_den && mpz_sizeinbase(x.get_num_mpz_t(), 2) <= 64 && twos < 16000) {
    LD xv, xe;
    detail::to_ld(x.get_num(), xv, xe);
    xv = std::ldexp(xv, -static_cast<int>(twos));
    if (xe == 0 && std::isfinite(xv)) {
      FloatPoly fp;
      fp.v.resize(a.size());
      fp.e.resize(a.size());
      bool ok = true;
      for (std::size_t i = 0; i < a.size() && ok; ++i) ok = detail::to_ld(a.coeffs()[i], fp.v[i], fp.e[i]);
      if (ok) {
        int s = detail::certified_sign(fp, xv);
        if (s != 2) return s;
      }
    }
  }
  return sign_at(a, x);
}

std::pair<Rat, Rat> refine_root(const IntPoly& a, const Rat& lo0, const Rat& hi0, unsigned bits) {
  Rat lo = lo0, hi = hi0;
  if (lo == hi) return {lo, hi};
  int slo = sign_at_fast(a, lo);
  int shi = sign_at_fast(a, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw InvariantViolation("refine_root needs opposite nonzero endpoint signs");
  Rat target = dyadic(1, -static_cast<long>(bits));
  while (hi - lo > target) {
    Rat m = (lo + hi) / 2;
    int sm = sign_at_fast(a, m);
    if (sm == 0) return {m, m};
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
  return {lo, hi};
}

RootInterval refine_root(const IntPoly& a, const RootInterval& r, unsigned bits) {
  auto [lo, hi] = refine_root(a, r.lo, r.hi, bits);
  return {lo, hi, r.multiplicity, r.sign_change};
}

bool is_simple_all(const IntPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("is_simple_all of zero");
  if (a.degree() <= 1) return true;
  IntPoly g = gcd(a, derivative(a));
  if (g.degree() == 0) return true;
  return count_real_roots(g).distinct == 0;
}

unsigned sign_variations(const IntPoly& a) { return cyclo::sign_variations(std::span<const Int>(a.coeffs())); }

}  // namespace cyclo::roots
