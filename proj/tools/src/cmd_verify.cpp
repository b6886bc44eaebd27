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

#include <fstream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/proxy.hpp"

namespace cyclo::cli {

namespace {

struct Entry {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> primes;  // for the recurrence and sign-table checks
};

// Conjecture rows are reported but never fail the run.
struct Check {
  std::string name;
  std::uint64_t n = 0;
  bool passed = false;
  bool conjecture = false;
  std::string detail;
};

constexpr const char* kDefaultCorpus = R"(# n  [primes p for the D/H checks]
3    7 11 13 23 193
5
7
15   7 11 13 23 193
21
35
69   7 11 13 193
105  11 13 23 193
385
885
1155
45
75
30
210
)";

// Rows of the published counting table that are feasible here.
const std::map<std::uint64_t, unsigned> kCountingTable = {{3, 1}, {15, 3}, {105, 5}, {885, 7}, {1155, 7}};

constexpr long kSturmDegreeLimit = 600;

std::vector<Entry> parse_corpus(std::istream& in, const std::string& name) {
  std::vector<Entry> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    auto where = name + ":" + std::to_string(lineno) + ": ";
    Entry e;
    try {
      e.n = parse_n(tok);
      if (e.n < 3) throw UsageError("n must be at least 3");
      while (ss >> tok) {
        std::uint64_t p = parse_n(tok);
        if (p < 3 || !is_prime(p)) throw UsageError(tok + " is not an odd prime");
        if (e.n % p == 0) throw UsageError(tok + " divides n");
        e.primes.push_back(p);
      }
    } catch (const UsageError& err) {
      throw DataError(where + err.what());
    }
    if (!e.primes.empty() && (e.n % 2 == 0 || !GeneralIndex(e.n).is_squarefree()))
      throw DataError(where + "recurrence primes need an odd squarefree n");
    out.push_back(std::move(e));
  }
  return out;
}

Check check(std::string name, std::uint64_t n, bool ok, std::string detail = {}) {
  return {std::move(name), n, ok, false, std::move(detail)};
}

std::vector<Check> run_entry(const Entry& e) {
  std::vector<Check> out;
  GeneralIndex g(e.n);
  out.push_back(check("palindrome", e.n, cyclotomic::check_palindrome(g)));
  if (!(g.is_odd() && g.is_squarefree())) {
    for (auto& l : conjectures::reduction_law(g)) out.push_back(check(l.name, e.n, l.holds, l.detail));
    return out;
  }
  PrimeIndex idx(g.distinct_primes());
  out.push_back(check("low-order terms", e.n, cyclotomic::check_constant_and_linear_terms(idx)));
  IntPoly f = cyclotomic::phi_derivative(e.n);
  roots::IsolationReport rep;
  try {
    rep = roots::count_critical_points(f);
  } catch (const InvariantViolation& err) {
    out.push_back(check("gauss-lucas", e.n, false, err.what()));
    return out;
  }
  out.push_back(check("gauss-lucas", e.n, true));
  out.push_back(check("simple", e.n, rep.all_simple));
  for (auto& l : conjectures::parity_law(idx, rep)) out.push_back(check(l.name, e.n, l.holds, l.detail));
  if (auto it = kCountingTable.find(e.n); it != kCountingTable.end())
    out.push_back(check("counting-table", e.n, rep.N == it->second,
                        "N = " + std::to_string(rep.N) + ", table " + std::to_string(it->second)));
  if (f.degree() <= kSturmDegreeLimit) {
    unsigned s = roots::sturm_count_all(f);
    out.push_back(check("sturm-oracle", e.n, s == rep.distinct,
                        "sturm " + std::to_string(s) + ", descartes " + std::to_string(rep.distinct)));
  }
  Check bounds = check("counting-bounds", e.n, 2 * idx.k() - 1 <= rep.N && rep.N <= (1u << idx.k()) - 1,
                       "k = " + std::to_string(idx.k()) + ", N = " + std::to_string(rep.N));
  bounds.conjecture = true;
  out.push_back(bounds);

  const std::vector<Rat> samples = {-1, Rat(-1, 2), 0, Rat(1, 3), 1};
  for (auto p : e.primes) {
    std::string tag = " p=" + std::to_string(p);
    out.push_back(check("dh-recurrence" + tag, e.n, proxy::check_dh_recurrence(idx, p)));
    auto sh = proxy::shapes_table(idx, p);
    out.push_back(check("shapes" + tag, e.n, sh.ok(), sh.mismatches()));
    out.push_back(check("graph" + tag, e.n, proxy::check_graph_correspondence(idx, p, samples)));
  }
  return out;
}

}  // namespace

void add_verify_all(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("verify-all", "Run the invariant suite over a corpus of indices");
  auto corpus = std::make_shared<std::string>();
  cmd->add_option("--corpus", *corpus, "Lines of 'n [p ...]'; the built-in corpus is used by default");
  cmd->callback([&io, &g, &rc, corpus] {
    std::vector<Entry> entries;
    if (corpus->empty()) {
      std::istringstream in(kDefaultCorpus);
      entries = parse_corpus(in, "default corpus");
    } else {
      std::ifstream in(*corpus);
      if (!in) throw DataError("cannot read " + *corpus);
      entries = parse_corpus(in, *corpus);
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.n < b.n; });
    auto per_entry = parallel_map(entries, g.jobs, run_entry);
    std::vector<Check> checks;
    for (auto& v : per_entry) checks.insert(checks.end(), v.begin(), v.end());

    std::size_t failed = 0, notes = 0;
    for (const auto& c : checks) {
      if (c.passed) continue;
      (c.conjecture ? notes : failed) += 1;
    }
    if (entries.empty()) io.err << "warning: corpus is empty; 0 checks run\n";
    auto status = [](const Check& c) { return c.passed ? "pass" : c.conjecture ? "note" : "FAIL"; };
    if (g.format == Format::Json) {
      Json arr = Json::array();
      for (const auto& c : checks)
        arr.push_back(Json{{"check", c.name}, {"n", c.n}, {"status", status(c)}, {"detail", c.detail}});
      emit(io.out, Json{{"checks", arr}, {"total", checks.size()}, {"failed", failed}, {"notes", notes}});
    } else if (g.format == Format::Csv) {
      io.out << "check,n,status,detail\n";
      for (const auto& c : checks)
        io.out << csv_field(c.name) << "," << c.n << "," << status(c) << "," << csv_field(c.detail) << "\n";
    } else {
      for (const auto& c : checks) {
        io.out << status(c) << "  " << c.name << "  n=" << c.n;
        if (!c.detail.empty()) io.out << "  " << c.detail;
        io.out << "\n";
      }
      io.out << checks.size() << " checks, " << failed << " failed";
      if (notes) io.out << ", " << notes << " conjecture notes";
      io.out << "\n";
    }
    rc = failed ? kInternal : kOk;
  });
}

}  // namespace cyclo::cli
