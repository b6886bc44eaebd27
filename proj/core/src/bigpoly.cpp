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

#include "cyclo/bigpoly.hpp"

#include <algorithm>
#include <utility>

#include "cyclo/errors.hpp"
#include "cyclo/modpoly.hpp"

namespace cyclo {

namespace {

const Int kZero = 0;

void trim(std::vector<Int>& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

// r[off + i] += a[i] * b[j] over the given ranges.
void school_acc(std::vector<Int>& r, std::size_t off, const Int* a, std::size_t na, const Int* b,
                std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < nb; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(r[off + i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

// Karatsuba product of two equal-length blocks, result written to r (size 2n-1, zeroed).
void karatsuba(const Int* a, const Int* b, std::size_t n, std::vector<Int>& r,
               std::size_t threshold) {
  if (n <= threshold) {
    school_acc(r, 0, a, n, b, n);
    return;
  }
  std::size_t h = n / 2;
  std::size_t hi = n - h;
  std::vector<Int> lo_prod(2 * h - 1), hi_prod(2 * hi - 1), mid(2 * hi - 1);
  karatsuba(a, b, h, lo_prod, threshold);
  karatsuba(a + h, b + h, hi, hi_prod, threshold);
  std::vector<Int> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
    if (i < h) {
      sa[i] += a[i];
      sb[i] += b[i];
    }
  }
  karatsuba(sa.data(), sb.data(), hi, mid, threshold);
  for (std::size_t i = 0; i < lo_prod.size(); ++i) mid[i] -= lo_prod[i];
  for (std::size_t i = 0; i < hi_prod.size(); ++i) mid[i] -= hi_prod[i];
  for (std::size_t i = 0; i < lo_prod.size(); ++i) r[i] += lo_prod[i];
  for (std::size_t i = 0; i < mid.size(); ++i) r[h + i] += mid[i];
  for (std::size_t i = 0; i < hi_prod.size(); ++i) r[2 * h + i] += hi_prod[i];
}

bool is_sparse(const IntPoly& a) { return a.term_count() * 4 < a.size(); }

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x() { return monomial(1, 1); }

const Int& IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Int& IntPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return sgn(c) != 0; }));
}

void IntPoly::canonicalize() { trim(coeffs_); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
IntPoly operator*(const IntPoly& a, const IntPoly& b) { return mul(a, b); }
IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return a - b; }

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.size() + b.size() - 1);
  school_acc(r, 0, a.coeffs().data(), a.size(), b.coeffs().data(), b.size());
  return IntPoly(std::move(r));
}

IntPoly mul(const IntPoly& a, const IntPoly& b, std::size_t karatsuba_threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t threshold = std::max<std::size_t>(karatsuba_threshold, 2);
  if (std::min(a.size(), b.size()) <= threshold || is_sparse(a) || is_sparse(b))
    return mul_schoolbook(a, b);

  // Cut the longer operand into blocks the length of the shorter one.
  const IntPoly& s = a.size() <= b.size() ? a : b;
  const IntPoly& l = a.size() <= b.size() ? b : a;
  std::size_t n = s.size();
  std::vector<Int> r(a.size() + b.size() - 1);
  std::vector<Int> block(n);
  std::vector<Int> prod(2 * n - 1);
  for (std::size_t off = 0; off < l.size(); off += n) {
    std::size_t len = std::min(n, l.size() - off);
    for (std::size_t i = 0; i < n; ++i) block[i] = i < len ? l.coeffs()[off + i] : kZero;
    for (auto& x : prod) x = 0;
    karatsuba(block.data(), s.coeffs().data(), n, prod, threshold);
    std::size_t used = std::min(prod.size(), r.size() - off);
    for (std::size_t i = 0; i < used; ++i) r[off + i] += prod[i];
  }
  return IntPoly(std::move(r));
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NonExactDivision("divisor degree exceeds dividend degree");
  std::size_t db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.leading();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < db; ++j)
    if (sgn(b.coeffs()[j]) != 0) support.push_back(j);

  std::vector<Int> r = a.coeffs();
  std::vector<Int> q(r.size() - db);
  Int c;
  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t()))
      throw NonExactDivision("leading coefficient does not divide");
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    std::size_t k = i - db;
    for (std::size_t j : support) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    r[i] = 0;
    q[k] = c;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) throw NonExactDivision("nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly div_exact(const IntPoly& a, const Int& c) {
  if (sgn(c) == 0) throw NonExactDivision("division by zero constant");
  std::vector<Int> r = a.coeffs();
  for (auto& x : r) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw NonExactDivision("coefficient not divisible by constant");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo-division by zero");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::size_t db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.leading();
  std::vector<Int> r = a.coeffs();
  std::vector<Int> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    Int c = r[i];
    for (auto& x : q) x *= lb;
    for (std::size_t j = 0; j < i; ++j) r[j] *= lb;
    std::size_t k = i - db;
    if (sgn(c) != 0)
      for (std::size_t j = 0; j < db; ++j)
        mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    q[k] = c;
    r.pop_back();
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::size_t db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.leading();
  std::vector<Int> r = a.coeffs();
  for (std::size_t i = r.size(); i-- > db;) {
    Int c = r[i];
    for (std::size_t j = 0; j < i; ++j) r[j] *= lb;
    std::size_t k = i - db;
    if (sgn(c) != 0)
      for (std::size_t j = 0; j < db; ++j)
        mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly derivative(const IntPoly& a, unsigned order) {
  if (order == 0) return a;
  if (a.size() <= order) return {};
  std::vector<Int> r(a.size() - order);
  for (std::size_t i = order; i < a.size(); ++i) {
    Int f = a.coeffs()[i];
    for (unsigned k = 0; k < order; ++k) f *= static_cast<unsigned long>(i - k);
    r[i - order] = std::move(f);
  }
  return IntPoly(std::move(r));
}

IntPoly compose_power(const IntPoly& a, unsigned long p) {
  if (p == 0) throw UnsupportedIndex("compose_power needs p >= 1");
  if (a.is_zero() || p == 1) return a;
  std::vector<Int> r((a.size() - 1) * p + 1);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * p] = a.coeffs()[i];
  return IntPoly(std::move(r));
}

IntPoly reflect(const IntPoly& a) {
  std::vector<Int> r = a.coeffs();
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPoly(std::move(r));
}

IntPoly reverse(const IntPoly& a) {
  std::vector<Int> r(a.coeffs().rbegin(), a.coeffs().rend());
  return IntPoly(std::move(r));
}

IntPoly shift_up(const IntPoly& a, std::size_t k) {
  if (a.is_zero()) return a;
  std::vector<Int> r(a.size() + k);
  std::copy(a.coeffs().begin(), a.coeffs().end(), r.begin() + static_cast<long>(k));
  return IntPoly(std::move(r));
}

namespace {

// Numerator of a(u/v) * v^deg, by Horner on integers.
Int homogeneous_eval(const IntPoly& a, const Int& u, const Int& v) {
  if (a.is_zero()) return 0;
  Int s = a.leading();
  Int vp = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    vp *= v;
    s *= u;
    if (sgn(a.coeffs()[i]) != 0) mpz_addmul(s.get_mpz_t(), a.coeffs()[i].get_mpz_t(), vp.get_mpz_t());
  }
  return s;
}

}  // namespace

Rat eval_rat(const IntPoly& a, const Rat& x) {
  if (a.is_zero()) return 0;
  Int den;
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(a.degree()));
  Rat r(homogeneous_eval(a, x.get_num(), x.get_den()), den);
  r.canonicalize();
  return r;
}

Int eval_int(const IntPoly& a, const Int& x) {
  Int s = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    s *= x;
    s += a.coeffs()[i];
  }
  return s;
}

int sign_at(const IntPoly& a, const Rat& x) {
  if (sgn(x.get_den()) == 1 && x.get_den() == 1) return sgn(eval_int(a, x.get_num()));
  return sgn(homogeneous_eval(a, x.get_num(), x.get_den()));
}

Int content(const IntPoly& a) {
  Int g = 0;
  for (const auto& c : a.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  Int g = content(a);
  if (sgn(a.leading()) < 0) g = -g;
  if (g == 1) return a;
  return div_exact(a, g);
}

IntPoly gcd_subresultant(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) throw ZeroPolynomial("gcd(0, 0) is undefined");
  if (b0.is_zero()) return primitive_part(a0);
  if (a0.is_zero()) return primitive_part(b0);
  IntPoly a = primitive_part(a0.degree() >= b0.degree() ? a0 : b0);
  IntPoly b = primitive_part(a0.degree() >= b0.degree() ? b0 : a0);
  Int g = 1, h = 1;
  while (true) {
    long delta = a.degree() - b.degree();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPoly{1};
    a = std::move(b);
    Int hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = div_exact(r, Int(g * hd));
    g = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) continue;
    Int gd, hd1;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
    mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
  }
}

bool coprime(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.degree() == 0 || b.degree() == 0;
  if (a.degree() == 0 || b.degree() == 0) return true;
  int tried = 0;
  for (std::uint64_t q : modp::kWordPrimes) {
    if (tried == 4) break;
    if (mpz_fdiv_ui(a.leading().get_mpz_t(), q) == 0 || mpz_fdiv_ui(b.leading().get_mpz_t(), q) == 0)
      continue;
    ++tried;
    modp::Poly g = modp::gcd(modp::reduce(a, q), modp::reduce(b, q), q);
    if (g.size() == 1) return true;
  }
  return gcd_subresultant(a, b).degree() == 0;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd(0, 0) is undefined");
  if (!a.is_zero() && !b.is_zero() && coprime(a, b)) return IntPoly{1};
  return gcd_subresultant(a, b);
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& a0) {
  if (a0.is_zero()) throw ZeroPolynomial("square-free decomposition of zero");
  std::vector<IntPoly> out;
  IntPoly a = primitive_part(a0);
  if (a.degree() == 0) return out;
  IntPoly b = derivative(a);
  IntPoly c = gcd(a, b);
  IntPoly w = div_exact(a, c);
  IntPoly y = div_exact(b, c);
  IntPoly z = y - derivative(w);
  while (w.degree() > 0) {
    IntPoly g = z.is_zero() ? primitive_part(w) : gcd(w, z);
    out.push_back(g);
    w = div_exact(w, g);
    y = div_exact(z, g);
    z = y - derivative(w);
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  for (auto& f : out)
    if (f.degree() == 0) f = IntPoly{1};
  return out;
}

IntPoly squarefree_part(const IntPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("square-free part of zero");
  if (a.degree() <= 0) return IntPoly{1};
  return primitive_part(div_exact(a, gcd(a, derivative(a))));
}

void taylor_shift_int(std::vector<Int>& v, const Int& c) {
  std::size_t n = v.size();
  if (n < 2 || sgn(c) == 0) return;
  bool one = c == 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      if (one)
        v[j] += v[j + 1];
      else
        mpz_addmul(v[j].get_mpz_t(), c.get_mpz_t(), v[j + 1].get_mpz_t());
    }
  }
}

TaylorShift taylor_shift(const IntPoly& a, const Rat& c) {
  if (a.is_zero()) return {a, 1};
  const Int& u = c.get_num();
  const Int& v = c.get_den();
  std::size_t d = static_cast<std::size_t>(a.degree());
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), v.get_mpz_t(), d);
  if (v == 1) {
    std::vector<Int> r = a.coeffs();
    taylor_shift_int(r, u);
    return {IntPoly(std::move(r)), scale};
  }
  std::vector<Int> r(d + 1);
  Int vp = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    r[i] = a.coeffs()[i] * vp;
    vp *= v;
  }
  taylor_shift_int(r, u);
  vp = 1;
  for (std::size_t j = 0; j <= d; ++j) {
    r[j] *= vp;
    vp *= v;
  }
  return {IntPoly(std::move(r)), scale};
}

unsigned sign_variations(std::span<const Int> coeffs) {
  unsigned v = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace cyclo
