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

// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/bigpoly.hpp"
#include "cyclo/conjectures.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/index.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/proxy.hpp"
#include "cyclo/realroots.hpp"

#ifdef CYCLO_HAVE_CLI
#include "app.hpp"
#endif

using namespace cyclo;

namespace {

constexpr double kCountSmallBudget = 5.0;      // seconds, each n <= 1155
constexpr double kCount885Budget = 30.0;       // seconds
constexpr double kCountMediumBudget = 1800.0;  // seconds, each row
constexpr double kLocateBudget = 600.0;        // seconds
constexpr double kRatioTolerance = 1e-4;
constexpr unsigned kMinDecimals = 5;
constexpr std::uint64_t kPMax = 1000;
constexpr unsigned kTotientMax = 600;
constexpr int kRandomPolys = 200;
constexpr int kRandomDegree = 60;
constexpr long kRandomCoeff = 1000000;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << title << " (" << o.detail << ")" << std::endl;
}

#ifdef CYCLO_HAVE_CLI
struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}
#endif

// N_n from `cyclo count` when the CLI is built, from the library otherwise.
unsigned count_n(std::uint64_t n) {
#ifdef CYCLO_HAVE_CLI
  auto r = cli({"--csv", "count", std::to_string(n)});
  if (r.code != 0) throw std::runtime_error("cyclo count " + std::to_string(n) + " exited " + std::to_string(r.code));
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  return static_cast<unsigned>(std::stoul(split_csv(row).at(2)));
#else
  return roots::count_critical_points(cyclotomic::phi_derivative(n)).N;
#endif
}

unsigned decimals_after_point(const std::string& s) {
  auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<unsigned>(s.size() - dot - 1);
}

Outcome criterion1() {
  Outcome o;
  struct Row {
    std::uint64_t n;
    unsigned N;
    double budget;
  };
  for (const Row& r : {Row{3, 1, kCountSmallBudget}, Row{15, 3, kCountSmallBudget}, Row{105, 5, kCountSmallBudget},
                       Row{885, 7, kCount885Budget}, Row{1155, 7, kCountSmallBudget}}) {
    auto t0 = Clock::now();
    unsigned N = count_n(r.n);
    double s = since(t0);
    o.note("N_" + std::to_string(r.n) + "=" + std::to_string(N) + " in " + fmt(s));
    if (N != r.N) o.fail("N_" + std::to_string(r.n) + " expected " + std::to_string(r.N));
    if (s > r.budget) o.fail("n=" + std::to_string(r.n) + " over " + fmt(r.budget));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  struct Row {
    std::vector<std::uint64_t> primes;
    unsigned N;
  };
  for (const Row& r : {Row{{3, 5, 7, 61}, 9}, Row{{3, 5, 7, 107}, 11}}) {
    PrimeIndex idx(r.primes);
    auto t0 = Clock::now();
    auto rep = roots::count_critical_points(cyclotomic::phi_derivative(idx.n()));
    double s = since(t0);
    o.note("N_" + idx.to_string() + "=" + std::to_string(rep.N) + " in " + fmt(s));
    if (rep.N != r.N) o.fail("expected " + std::to_string(r.N));
    if (s > kCountMediumBudget) o.fail(idx.to_string() + " over " + fmt(kCountMediumBudget));
    for (const auto& law : conjectures::parity_law(idx, rep))
      if (!law.holds) o.fail(idx.to_string() + " " + law.name + ": " + law.detail);
    unsigned k = idx.k();
    if (rep.N < 2 * k - 1 || rep.N > (1u << k) - 1) o.fail(idx.to_string() + " outside [2k-1, 2^k-1]");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  struct Published {
    const char* i;
    double ratio;
  };
  const std::vector<Published> published{{"(1)", 1.00002},   {"(2)", 0.97308},   {"(3)", 0.99196},    {"(1,2)", 0.98967},
                                 {"(1,3)", 1.00091}, {"(2,3)", 0.99983}, {"(1,2,3)", 0.99999}};
  auto t0 = Clock::now();
  struct Got {
    std::string alpha, beta, i;
    double ratio;
  };
  std::vector<Got> got;
#ifdef CYCLO_HAVE_CLI
  auto r = cli({"conjecture", "locate", "3,23,193", "--bits", "64"});
  if (r.code != 0) {
    o.fail("cyclo conjecture locate exited " + std::to_string(r.code) + ": " + r.err);
    return o;
  }
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    auto f = split_csv(line);
    got.push_back({f.at(0), f.at(1), f.at(3), std::stod(f.at(2))});
  }
#else
  for (const auto& row : conjectures::locate_table(PrimeIndex({3, 23, 193}), 64))
    got.push_back({certified_decimal(row.alpha.lo, row.alpha.hi, 19), certified_decimal(row.beta.lo, row.beta.hi, 19),
                   row.subset_label(), row.ratio.midpoint().get_d()});
#endif
  double s = since(t0);
  if (got.size() != published.size()) o.fail(std::to_string(got.size()) + " rows");
  double worst = 0;
  unsigned min_dec = 99;
  for (const auto& p : published) {
    const Got* g = nullptr;
    for (const auto& x : got)
      if (x.i == p.i) g = &x;
    if (!g) {
      o.fail(std::string("missing row ") + p.i);
      continue;
    }
    double d = std::fabs(g->ratio - p.ratio);
    worst = std::max(worst, d);
    if (d > kRatioTolerance) o.fail(std::string(p.i) + " ratio " + std::to_string(g->ratio));
    min_dec = std::min({min_dec, decimals_after_point(g->alpha), decimals_after_point(g->beta)});
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |ratio diff| %.2e, min decimals %u, %s", worst, min_dec, fmt(s).c_str());
  o.note(buf);
  if (min_dec < kMinDecimals) o.fail("fewer than 5 certified decimals");
  if (s > kLocateBudget) o.fail("over " + fmt(kLocateBudget));
  return o;
}

const std::vector<std::uint64_t> kCorpusN{3, 15, 105, 69};
const std::vector<std::uint64_t> kCorpusP{7, 11, 13, 23, 193};

Outcome criterion4() {
  Outcome o;
  int pairs = 0;
  for (auto n : kCorpusN)
    for (auto p : kCorpusP) {
      if (n % p == 0) continue;
      ++pairs;
      if (!proxy::check_dh_recurrence(PrimeIndex::from_n(n), p))
        o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  o.note(std::to_string(pairs) + " pairs");
  return o;
}

Outcome criterion5() {
  Outcome o;
  int pairs = 0, values = 0;
  for (auto n : kCorpusN)
    for (auto p : kCorpusP) {
      if (n % p == 0) continue;
      ++pairs;
      if (!proxy::check_shapes_table(PrimeIndex::from_n(n), p))
        o.fail("shapes n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  for (std::uint64_t p : {3, 5, 7, 11, 13, 23})
    for (unsigned d = 0; d <= 3; ++d)
      for (int x = -1; x <= 1; ++x) {
        ++values;
        Rat a = cyclotomic::special_value(p, d, x), b = cyclotomic::special_value_direct(p, d, x);
        if (a != b)
          o.fail("p=" + std::to_string(p) + " d=" + std::to_string(d) + " x=" + std::to_string(x) + ": " +
                 to_string(a) + " vs " + to_string(b));
      }
  o.note(std::to_string(pairs) + " shape pairs, " + std::to_string(values) + " special values");
  return o;
}

Outcome criterion6() {
  Outcome o;
  int laws = 0;
  for (std::uint64_t n : {3, 5, 7, 15, 21, 35, 69, 105, 885, 1155, 4389}) {
    auto idx = PrimeIndex::from_n(n);
    auto rep = roots::count_critical_points(cyclotomic::phi_derivative(n));
    for (const auto& l : conjectures::parity_law(idx, rep)) {
      ++laws;
      if (!l.holds) o.fail(std::to_string(n) + " " + l.name + ": " + l.detail);
    }
  }
  for (std::uint64_t n : {45, 75, 30, 210}) {
    auto checks = conjectures::reduction_law(GeneralIndex(n));
    if (checks.empty()) o.fail(std::to_string(n) + " produced no reduction checks");
    for (const auto& l : checks) {
      ++laws;
      if (!l.holds) o.fail(std::to_string(n) + " " + l.name + ": " + l.detail);
    }
  }
  o.note(std::to_string(laws) + " law checks");
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::uint64_t n : {3, 15}) {
    auto idx = PrimeIndex::from_n(n);
    auto t0 = Clock::now();
    auto narrow = proxy::find_narrow_h(idx);
    if (!narrow.passed()) {
      o.fail("n=" + std::to_string(n) + ": no narrow h certified");
      continue;
    }
    unsigned Nn = roots::count_critical_points(cyclotomic::phi_derivative(n)).N;
    auto rows = proxy::sweep_well_configured(idx, narrow.h, kPMax);
    int passing = 0;
    std::uint64_t first = 0;
    int first_fail_hist[8] = {};
    for (const auto& row : rows) {
      if (!row.cert.passed()) {
        ++first_fail_hist[row.cert.first_failure()];
        continue;
      }
      ++passing;
      if (!first) first = row.p;
      auto rep = roots::count_critical_points(cyclotomic::phi_derivative(n * row.p));
      if (rep.N != 2 * Nn + 1 || !rep.all_simple)
        o.fail("n=" + std::to_string(n) + " p=" + std::to_string(row.p) + ": N=" + std::to_string(rep.N));
    }
    std::string hist;
    for (int c = 1; c <= 7; ++c)
      if (first_fail_hist[c]) hist += " c" + std::to_string(c) + ":" + std::to_string(first_fail_hist[c]);
    o.note("n=" + std::to_string(n) + " h=" + to_string(narrow.h) + " " + std::to_string(passing) + "/" +
           std::to_string(rows.size()) + " p pass" + (first ? ", first p=" + std::to_string(first) : "") +
           (hist.empty() ? "" : ", first failures" + hist) + ", " + fmt(since(t0)));
    if (passing == 0) o.fail("n=" + std::to_string(n) + ": no p <= " + std::to_string(kPMax) + " passes");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> deg(1, kRandomDegree);
  std::uniform_int_distribution<long> coef(-kRandomCoeff, kRandomCoeff);
  int random_done = 0;
  for (int t = 0; t < kRandomPolys; ++t) {
    std::vector<Int> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    IntPoly a(c);
    unsigned vca = roots::count_real_roots(a).distinct;
    unsigned sturm = roots::sturm_count_all(a);
    ++random_done;
    if (vca != sturm)
      o.fail("random #" + std::to_string(t) + ": " + std::to_string(vca) + " vs " + std::to_string(sturm));
  }
  // phi(n) >= sqrt(n / 2), so phi(n) <= 600 forces n <= 2 * 600^2.
  const std::uint64_t limit = 2ULL * kTotientMax * kTotientMax;
  std::vector<std::uint32_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (phi[i] == i)
      for (std::uint64_t j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  int phis = 0;
  std::uint64_t largest = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (phi[n] > kTotientMax) continue;
    if (cyclotomic::totient(GeneralIndex(n)) != phi[n]) o.fail("totient mismatch at " + std::to_string(n));
    IntPoly d = cyclotomic::phi_derivative(n);
    unsigned vca = roots::count_real_roots(d).distinct;
    unsigned sturm = roots::sturm_count_all(d);
    ++phis;
    largest = n;
    if (vca != sturm)
      o.fail("Phi'_" + std::to_string(n) + ": " + std::to_string(vca) + " vs " + std::to_string(sturm));
  }
  o.note(std::to_string(random_done) + " random, " + std::to_string(phis) + " Phi'_n (largest n " +
         std::to_string(largest) + ")");
  return o;
}

Outcome criterion9() {
  Outcome o;
  int primes = 0;
  for (std::uint64_t p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    ++primes;
    auto rep = roots::count_real_roots(cyclotomic::phi_derivative(p));
    if (rep.N != 1 || rep.N_neg != 1 || !rep.all_simple) o.fail("Phi'_" + std::to_string(p));
    // g(x) = (p - 1) x^p - p x^(p - 1) + 1
    std::vector<Int> c(p + 1, Int(0));
    c[0] = 1;
    c[p - 1] = -static_cast<long>(p);
    c[p] = static_cast<long>(p - 1);
    if (roots::sign_variations(reflect(IntPoly(c))) != 1) o.fail("sign variations for p=" + std::to_string(p));
  }
  o.note(std::to_string(primes) + " primes");
  return o;
}

}  // namespace

int main() {
  report(1, "counting table, small rows", criterion1);
  report(2, "counting table, medium rows", criterion2);
  report(3, "locating table for 3*23*193", criterion3);
  report(4, "recurrence identity suite", criterion4);
  report(5, "shapes and special values", criterion5);
  report(6, "parity and reduction laws", criterion6);
  report(7, "well-configured pipeline for n in {3, 15}", criterion7);
  report(8, "Descartes bisection equals Sturm", criterion8);
  report(9, "initial condition for odd p <= 101", criterion9);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " of 9 criteria failed" << std::endl;
  return failures ? 1 : 0;
}
