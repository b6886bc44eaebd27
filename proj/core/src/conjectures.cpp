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

#include "cyclo/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <tuple>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/modpoly.hpp"

namespace cyclo::conjectures {

CountRow count_row(const PrimeIndex& idx) {
  auto t0 = std::chrono::steady_clock::now();
  CountRow row;
  row.idx = idx;
  row.k = idx.k();
  row.lower = 2 * row.k - 1;
  row.upper = (1u << row.k) - 1;
  auto rep = roots::count_critical_points(cyclotomic::phi_derivative(idx.n()));
  row.N = rep.N;
  row.N_neg = rep.N_neg;
  row.N_zero = rep.N_zero;
  row.N_pos = rep.N_pos;
  row.all_simple = rep.all_simple;
  row.within_bounds = row.lower <= row.N && row.N <= row.upper;
  std::vector<std::uint64_t> first;
  for (std::uint64_t p = 3; first.size() < row.k; p += 2)
    if (is_prime(p)) first.push_back(p);
  row.smallest_primes = first == idx.primes();
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<CountRow> scan_counting(const std::vector<PrimeIndex>& indices) {
  std::vector<CountRow> rows;
  rows.reserve(indices.size());
  for (const auto& idx : indices) rows.push_back(count_row(idx));
  return rows;
}

std::vector<MonotoneCheck> monotonicity(const std::vector<CountRow>& rows) {
  std::vector<MonotoneCheck> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j || rows[i].k != rows[j].k) continue;
      const auto& a = rows[i].idx.primes();
      const auto& b = rows[j].idx.primes();
      std::vector<std::uint64_t> only_a, only_b;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
      if (only_a.size() != 1 || only_b.size() != 1 || only_a[0] >= only_b[0]) continue;
      MonotoneCheck m;
      m.base = rows[i].idx.n() / only_a[0];
      m.p = only_a[0];
      m.p_prime = only_b[0];
      m.N_np = rows[i].N;
      m.N_np_prime = rows[j].N;
      out.push_back(m);
    }
  std::sort(out.begin(), out.end(), [](const MonotoneCheck& x, const MonotoneCheck& y) {
    return std::tie(x.base, x.p, x.p_prime) < std::tie(y.base, y.p, y.p_prime);
  });
  return out;
}

namespace {

LawCheck law(std::string name, bool holds, std::string detail) {
  return {std::move(name), holds, std::move(detail)};
}

std::string counts(const roots::IsolationReport& r) {
  return "N- = " + std::to_string(r.N_neg) + ", N0 = " + std::to_string(r.N_zero) + ", N+ = " + std::to_string(r.N_pos);
}

}  // namespace

std::vector<LawCheck> parity_law(const PrimeIndex& idx, const roots::IsolationReport& rep) {
  bool k_odd = idx.k() % 2 == 1;
  std::string c = "k = " + std::to_string(idx.k()) + ", " + counts(rep);
  return {law("parity.zero", rep.N_zero == 0, c), law("parity.neg", (rep.N_neg % 2 == 1) == k_odd, c),
          law("parity.pos", (rep.N_pos % 2 == 0) == k_odd, c)};
}

std::vector<LawCheck> reduction_law(const GeneralIndex& idx) {
  std::vector<LawCheck> out;
  auto rep = roots::count_critical_points(cyclotomic::phi_derivative(idx.n()));
  if (!idx.is_squarefree()) {
    std::uint64_t r = idx.radical();
    auto base = roots::count_critical_points(cyclotomic::phi_derivative(r));
    // Phi_n(x) = Phi_r(x^(n/r)) has a zero of order n/r - 1 at the origin; the law counts it once.
    out.push_back(law("reduction.zero", rep.distinct_zero == 1,
                      "distinct zero roots = " + std::to_string(rep.distinct_zero) +
                          ", multiplicity = " + std::to_string(rep.N_zero)));
    out.push_back(law("reduction.pos", rep.N_pos == base.N_pos,
                      "n = " + std::to_string(idx.n()) + ": " + counts(rep) + "; radical " + std::to_string(r) + ": " +
                          counts(base)));
  } else if (!idx.is_odd() && idx.n() > 2) {
    std::uint64_t m = idx.n() / 2;
    auto base = roots::count_critical_points(cyclotomic::phi_derivative(m));
    std::string d = "n = " + std::to_string(idx.n()) + ": " + counts(rep) + "; m = " + std::to_string(m) + ": " + counts(base);
    out.push_back(law("reduction.even.pos", rep.N_pos == base.N_neg, d));
    out.push_back(law("reduction.even.neg", rep.N_neg == base.N_pos, d));
  }
  return out;
}

RatInterval gamma_root(std::uint64_t p, unsigned bits) {
  if (p < 3 || !is_prime(p)) throw UnsupportedIndex("gamma_root needs an odd prime, got " + std::to_string(p));
  IntPoly f = cyclotomic::phi_derivative(p);
  auto rep = roots::count_real_roots(f);
  if (rep.distinct != 1 || rep.N_neg != 1 || !rep.all_simple)
    throw InvariantViolation("Phi_p' does not have a single simple negative root for p = " + std::to_string(p));
  auto [lo, hi] = roots::refine_root(f, rep.intervals[0].lo, rep.intervals[0].hi, bits);
  return {lo, hi};
}

std::string LocateRow::subset_label() const {
  std::string s = "(";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + ")";
}

namespace {

Rat abs_mid(const RatInterval& r) { return abs((r.lo + r.hi) / 2); }

}  // namespace

std::vector<LocateRow> locate_table(const PrimeIndex& idx, unsigned bits) {
  const auto& primes = idx.primes();
  unsigned k = idx.k();
  IntPoly f = cyclotomic::phi_derivative(idx.n());
  auto rep = roots::count_critical_points(f);
  unsigned expected = (1u << k) - 1;
  if (rep.N != expected || rep.distinct != expected)
    throw CountMismatch("n = " + idx.to_string() + " has " + std::to_string(rep.N) + " real critical points, not " +
                        std::to_string(expected));

  std::vector<RatInterval> alphas;
  for (const auto& r : rep.intervals) {
    auto [lo, hi] = roots::refine_root(f, r.lo, r.hi, bits);
    alphas.push_back({lo, hi});
  }
  std::vector<RatInterval> gammas;
  for (auto p : primes) gammas.push_back(gamma_root(p, bits + 16));

  std::vector<LocateRow> preds;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    LocateRow row;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1u << i)) row.subset.push_back(i + 1);
    unsigned i1 = row.subset[0];
    unsigned long m = 1;
    for (std::size_t j = 1; j < row.subset.size(); ++j) m *= primes[row.subset[j] - 1];
    RatInterval mag = nth_root(abs(gammas[i1 - 1]), m, bits + 8);
    row.beta = i1 % 2 == 1 ? -mag : mag;
    preds.push_back(std::move(row));
  }
  std::sort(preds.begin(), preds.end(),
            [](const LocateRow& a, const LocateRow& b) { return abs_mid(a.beta) < abs_mid(b.beta); });
  std::sort(alphas.begin(), alphas.end(),
            [](const RatInterval& a, const RatInterval& b) { return abs_mid(a) < abs_mid(b); });
  for (std::size_t i = 0; i < preds.size(); ++i) {
    auto& row = preds[i];
    row.alpha = alphas[i];
    row.ratio = row.beta / row.alpha;
    row.sign_agrees = row.alpha.sign() == row.beta.sign();
    if (i + 1 < preds.size() && abs(preds[i + 1].beta).lo <= abs(row.beta).hi) {
      row.order_ambiguous = true;
      preds[i + 1].order_ambiguous = true;
    }
  }
  return preds;
}

namespace {

// Subset sums of a multiset of degrees, as a bitmask over 0..d.
std::vector<bool> subset_sums(const std::vector<unsigned>& degs, unsigned d) {
  std::vector<bool> s(d + 1, false);
  s[0] = true;
  for (unsigned g : degs)
    for (unsigned v = d; v + 1 > g; --v)
      if (s[v - g]) s[v] = true;
  return s;
}

}  // namespace

IrreducibilityVerdict irreducibility_witness(const IntPoly& f, std::uint64_t q_bound) {
  IrreducibilityVerdict v;
  if (f.degree() < 1) throw InvariantViolation("irreducibility of a constant");
  auto d = static_cast<unsigned>(f.degree());
  if (d == 1) {
    v.kind = IrreducibilityVerdict::Kind::IrreducibleCertified;
    v.method = "degree <= 1";
    return v;
  }
  std::vector<bool> possible(d + 1, true);
  for (std::uint64_t q = 2; q < q_bound; ++q) {
    if (!is_prime(q)) continue;
    Int lc_mod = f.leading() % Int(q);
    if (sgn(lc_mod) == 0) continue;
    modp::Poly fq = modp::reduce(f, q);
    // q must not divide the discriminant.
    if (!modp::is_squarefree(fq, q)) continue;
    if (modp::is_irreducible(fq, q)) {
      v.patterns.push_back({q, {d}});
      v.kind = IrreducibilityVerdict::Kind::IrreducibleCertified;
      v.q = q;
      v.method = "irreducible mod q";
      return v;
    }
    auto degs = modp::factor_degrees(fq, q);
    v.patterns.push_back({q, degs});
    auto sums = subset_sums(degs, d);
    bool any = false;
    for (unsigned e = 1; e < d; ++e) {
      possible[e] = possible[e] && sums[e];
      any = any || possible[e];
    }
    if (!any) {
      v.kind = IrreducibilityVerdict::Kind::IrreducibleCertified;
      v.q = q;
      v.method = "degree patterns";
      return v;
    }
  }
  return v;
}

IrreducibilityVerdict irreducibility_witness(const GeneralIndex& idx, std::uint64_t q_bound) {
  if (!idx.is_squarefree())
    throw UnsupportedIndex("the irreducibility conjecture concerns square-free n; got " + std::to_string(idx.n()));
  return irreducibility_witness(cyclotomic::phi_derivative(idx.n()), q_bound);
}

}  // namespace cyclo::conjectures
