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

#include "commands.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"

namespace cyclo::cli {

namespace {

// Always signed: "+0.86749", "-0.49999".
std::string signed_decimal(const RatInterval& r, unsigned digits) {
  std::string s = certified_decimal(r.lo, r.hi, digits);
  if (!s.empty() && s[0] != '-' && sgn(r.lo) > 0) s = "+" + s;
  return s;
}

void locate(const Io& io, const Global& g, int& rc, const std::string& primes, unsigned bits) {
  PrimeIndex idx = parse_prime_index(primes);
  auto rows = conjectures::locate_table(idx, bits);
  const unsigned digits = std::max(5u, bits * 3 / 10);
  bool signs = true;
  for (const auto& r : rows) signs = signs && r.sign_agrees;
  if (g.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"i", r.subset_label()},
                         {"alpha", enclosure(r.alpha)},
                         {"beta", enclosure(r.beta)},
                         {"ratio", enclosure(r.ratio)},
                         {"alpha_decimal", signed_decimal(r.alpha, digits)},
                         {"beta_decimal", signed_decimal(r.beta, digits)},
                         {"ratio_decimal", certified_decimal(r.ratio.lo, r.ratio.hi, digits)},
                         {"sign_agrees", r.sign_agrees},
                         {"order_ambiguous", r.order_ambiguous}});
    emit(io.out, Json{{"n", idx.n()}, {"primes", idx.primes()}, {"bits", bits}, {"rows", arr}});
  } else {
    io.out << "alpha,beta,ratio,i\n";
    for (const auto& r : rows)
      io.out << signed_decimal(r.alpha, digits) << "," << signed_decimal(r.beta, digits) << ","
             << certified_decimal(r.ratio.lo, r.ratio.hi, digits) << "," << csv_field(r.subset_label()) << "\n";
    for (const auto& r : rows) {
      if (!r.sign_agrees) io.err << "note: sign of alpha and beta differ for " << r.subset_label() << "\n";
      if (r.order_ambiguous) io.err << "note: |beta| order not certified at " << bits << " bits for " << r.subset_label() << "\n";
    }
  }
  rc = signs ? kOk : kInternal;
}

void count_set(const Io& io, const Global& g, int& rc, const std::string& file) {
  auto rows = parallel_map(read_index_file(file), g.jobs, conjectures::count_row);
  auto mono = conjectures::monotonicity(rows);
  if (g.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"n", r.idx.n()},
                         {"primes", r.idx.primes()},
                         {"k", r.k},
                         {"lower", r.lower},
                         {"upper", r.upper},
                         {"N", r.N},
                         {"N_neg", r.N_neg},
                         {"N_zero", r.N_zero},
                         {"N_pos", r.N_pos},
                         {"all_simple", r.all_simple},
                         {"within_bounds", r.within_bounds},
                         {"smallest_primes", r.smallest_primes}});
    Json m = Json::array();
    for (const auto& c : mono)
      m.push_back(Json{{"base", c.base},
                       {"p", c.p},
                       {"p_prime", c.p_prime},
                       {"N_np", c.N_np},
                       {"N_np_prime", c.N_np_prime},
                       {"holds", c.holds()}});
    emit(io.out, Json{{"rows", arr}, {"monotonicity", m}});
  } else {
    write_count_table(io.out, rows);
    for (const auto& r : rows) {
      if (!r.within_bounds) io.err << "note: N = " << r.N << " outside [2k-1, 2^k-1] for n = " << r.idx.to_string() << "\n";
      if (r.smallest_primes && r.N != r.lower)
        io.err << "note: n = " << r.idx.to_string() << " uses the k smallest odd primes but N != 2k-1\n";
    }
    for (const auto& c : mono)
      if (!c.holds())
        io.err << "note: N(" << c.base << "*" << c.p << ") = " << c.N_np << " > N(" << c.base << "*" << c.p_prime
               << ") = " << c.N_np_prime << "\n";
  }
  rc = kOk;
}

void irred(const Io& io, const Global& g, int& rc, const std::string& n, std::uint64_t qmax) {
  GeneralIndex idx(parse_n(n));
  if (!idx.is_squarefree()) throw UsageError("the irreducibility conjecture concerns squarefree n");
  auto v = conjectures::irreducibility_witness(idx, qmax);
  bool certified = v.kind == conjectures::IrreducibilityVerdict::Kind::IrreducibleCertified;
  if (g.format == Format::Json) {
    Json pats = Json::array();
    for (const auto& [q, degs] : v.patterns) pats.push_back(Json{{"q", q}, {"degrees", degs}});
    Json j{{"n", idx.n()}, {"verdict", certified ? "IrreducibleCertified" : "Inconclusive"}, {"method", v.method}};
    if (certified) j["q"] = v.q;
    j["patterns"] = std::move(pats);
    emit(io.out, j);
  } else if (certified) {
    io.out << "n = " << idx.n() << ": IrreducibleCertified(q = " << v.q << ", " << v.method << ")\n";
  } else {
    io.out << "n = " << idx.n() << ": Inconclusive (no certificate from primes q < " << qmax << ")\n";
  }
  rc = kOk;
}

}  // namespace

void add_conjecture(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("conjecture", "Scanners for the counting, locating and irreducibility conjectures");
  cmd->require_subcommand(1);

  auto* cnt = cmd->add_subcommand("count", "Counting table for a set of indices (CSV)");
  auto set = std::make_shared<std::string>();
  cnt->add_option("--set", *set, "File with one index per line")->required();
  cnt->callback([&io, &g, &rc, set] { count_set(io, g, rc, *set); });

  auto* loc = cmd->add_subcommand("locate", "Locating table: real critical points against the predictions (CSV)");
  auto primes = std::make_shared<std::string>();
  auto bits = std::make_shared<unsigned>(64);
  loc->add_option("primes", *primes, "Primes, e.g. 3,23,193")->required();
  loc->add_option("--bits", *bits, "Root refinement in bits")->check(CLI::Range(8u, 100000u));
  loc->callback([&io, &g, &rc, primes, bits] { locate(io, g, rc, *primes, *bits); });

  auto* irr = cmd->add_subcommand("irred", "Search for a modular irreducibility certificate of Phi_n'");
  auto n = std::make_shared<std::string>();
  auto qmax = std::make_shared<std::uint64_t>(200);
  irr->add_option("n", *n, "Squarefree index")->required();
  irr->add_option("--qmax", *qmax, "Primes q below this are tried");
  irr->callback([&io, &g, &rc, n, qmax] { irred(io, g, rc, *n, *qmax); });
}

}  // namespace cyclo::cli
