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
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"
#include "cyclo/proxy.hpp"

namespace cyclo::cli {

namespace {

const std::vector<std::uint64_t> kDefaultPrimes = {7, 11, 13, 23, 193};

Json evidence_json(const proxy::ConditionEvidence& e) {
  Json j;
  j["condition"] = e.index;
  j["verdict"] = proxy::to_string(e.verdict);
  j["detail"] = e.detail;
  if (e.lhs) j["lhs"] = enclosure(*e.lhs);
  if (e.rhs) j["rhs"] = enclosure(*e.rhs);
  if (e.witness) j["witness"] = enclosure(*e.witness);
  return j;
}

Json narrow_json(const proxy::NarrowCertificate& c) {
  Json j;
  j["h"] = frac(c.h);
  j["passed"] = c.passed();
  j["l"] = enclosure(c.l);
  Json conds = Json::array();
  for (const auto& e : c.conditions) conds.push_back(evidence_json(e));
  j["conditions"] = std::move(conds);
  return j;
}

void evidence_text(std::ostream& out, const proxy::ConditionEvidence& e) {
  out << "  " << e.index << ". " << proxy::to_string(e.verdict) << "  " << e.detail << "\n";
}

Rat parse_h(const std::string& s) {
  try {
    Rat h = parse_rat(s);
    if (sgn(h) <= 0) throw UsageError("h must be positive");
    return h;
  } catch (const cyclo::ParseError& e) {
    throw UsageError(std::string("bad --height: ") + e.what());
  }
}

std::string shapes_text(const proxy::ShapesReport& r) { return r.ok() ? "ok" : "mismatch: " + r.mismatches(); }

proxy::PredicateOptions options(unsigned max_bits) {
  proxy::PredicateOptions opt;
  opt.max_bits = std::max(max_bits, opt.start_bits);
  return opt;
}

}  // namespace

void add_proxy(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("proxy", "The proxy D_n, a narrow h, and the sign tables of D_n and H_{n,p}");
  struct Opts {
    std::string n;
    std::string h;
    std::vector<std::uint64_t> ps;
    unsigned max_bits = 4096;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("n", o->n, "Odd squarefree index")->required();
  cmd->add_option("--height", o->h, "Check this height instead of searching, e.g. 1/64");
  cmd->add_option("--p", o->ps, "Primes for the sign tables of H_{n,p}");
  cmd->add_option("--bits", o->max_bits, "Largest enclosure precision")->check(CLI::Range(8u, 1u << 20));
  cmd->callback([&io, &g, &rc, o] {
    PrimeIndex idx = parse_prime_index(o->n);
    RatFun d = proxy::proxy_d(idx);
    Rat d1 = d.eval(1), dm1 = d.eval(-1);
    auto opt = options(o->max_bits);
    auto cert = o->h.empty() ? proxy::find_narrow_h(idx, opt) : proxy::check_narrow(idx, parse_h(o->h), opt);
    std::vector<std::pair<std::uint64_t, proxy::ShapesReport>> shapes;
    for (auto p : o->ps) shapes.emplace_back(p, proxy::shapes_table(idx, p));

    if (g.format == Format::Json) {
      Json j;
      j["n"] = idx.n();
      j["num_degree"] = d.num().degree();
      j["den_degree"] = d.den().degree();
      j["D(1)"] = frac(d1);
      j["D(-1)"] = frac(dm1);
      j["narrow"] = narrow_json(cert);
      Json sj = Json::array();
      for (const auto& [p, r] : shapes) sj.push_back(Json{{"p", p}, {"ok", r.ok()}, {"mismatches", r.mismatches()}});
      j["shapes"] = std::move(sj);
      emit(io.out, j);
    } else {
      io.out << "D_" << idx.n() << " = x Phi' / Phi, numerator degree " << d.num().degree() << ", denominator degree "
             << d.den().degree() << "\n";
      io.out << "D(1) = " << to_string(d1) << ", D(-1) = " << to_string(dm1) << "\n";
      io.out << "h = " << to_string(cert.h) << (cert.passed() ? " is narrow" : " is NOT narrow") << "\n";
      for (const auto& e : cert.conditions) evidence_text(io.out, e);
      if (cert.passed()) io.out << "l in [" << certified_decimal(cert.l.lo, cert.l.hi, 12) << "...]\n";
      for (const auto& [p, r] : shapes) io.out << "shapes p = " << p << ": " << shapes_text(r) << "\n";
    }
    bool ok = true;
    for (const auto& s : shapes) ok = ok && s.second.ok();
    rc = ok ? kOk : kInternal;
  });
}

void add_verify_recurrence(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("verify-recurrence", "Check D_np = H_{n,p} - D_n, the sign tables and H(x) = p D(x^p)");
  auto n = std::make_shared<std::string>();
  auto ps = std::make_shared<std::vector<std::uint64_t>>();
  cmd->add_option("n", *n, "Odd squarefree index")->required();
  cmd->add_option("--p", *ps, "Primes (default 7 11 13 23 193, skipping divisors of n)");
  cmd->callback([&io, &g, &rc, n, ps] {
    PrimeIndex idx = parse_prime_index(*n);
    std::vector<std::uint64_t> primes;
    for (auto p : ps->empty() ? kDefaultPrimes : *ps)
      if (!ps->empty() || idx.n() % p != 0) primes.push_back(p);
    const std::vector<Rat> samples = {-1, Rat(-3, 4), Rat(-1, 2), Rat(-1, 3), 0, Rat(1, 3), Rat(1, 2), Rat(3, 4), 1};
    struct Row {
      std::uint64_t p;
      bool rec;
      proxy::ShapesReport shapes;
      bool graph;
    };
    auto rows = parallel_map(primes, g.jobs, [&](std::uint64_t p) {
      return Row{p, proxy::check_dh_recurrence(idx, p), proxy::shapes_table(idx, p),
                 proxy::check_graph_correspondence(idx, p, samples)};
    });
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.rec && r.shapes.ok() && r.graph;
    if (g.format == Format::Json) {
      Json arr = Json::array();
      for (const auto& r : rows)
        arr.push_back(Json{{"n", idx.n()},
                           {"p", r.p},
                           {"recurrence", r.rec},
                           {"shapes", r.shapes.ok()},
                           {"graph", r.graph},
                           {"mismatches", r.shapes.mismatches()}});
      emit(io.out, Json{{"n", idx.n()}, {"passed", ok}, {"rows", arr}});
    } else if (g.format == Format::Csv) {
      io.out << "n,p,recurrence,shapes,graph\n";
      for (const auto& r : rows)
        io.out << idx.n() << "," << r.p << "," << (r.rec ? "pass" : "fail") << "," << (r.shapes.ok() ? "pass" : "fail")
               << "," << (r.graph ? "pass" : "fail") << "\n";
    } else {
      for (const auto& r : rows)
        io.out << "n = " << idx.n() << ", p = " << r.p << ": recurrence " << (r.rec ? "pass" : "FAIL") << ", shapes "
               << shapes_text(r.shapes) << ", graph " << (r.graph ? "pass" : "FAIL") << "\n";
    }
    rc = ok ? kOk : kInternal;
  });
}

void add_wellconf(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("wellconf", "Sweep p for well-configured graphs of D_n and H_{n,p}");
  struct Opts {
    std::string n;
    std::string h;
    std::uint64_t pmax = 1000;
    bool first = false;
    bool verify_count = false;
    unsigned max_bits = 4096;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("n", o->n, "Odd squarefree index")->required();
  cmd->add_option("--height", o->h, "Narrow height (default: find_narrow_h)");
  cmd->add_option("--pmax", o->pmax, "Largest prime tried");
  cmd->add_flag("--first", o->first, "Stop at the first passing p");
  cmd->add_flag("--verify-count", o->verify_count, "Count the real critical points of Phi_np for passing p");
  cmd->add_option("--bits", o->max_bits, "Largest enclosure precision")->check(CLI::Range(8u, 1u << 20));
  cmd->callback([&io, &g, &rc, o] {
    PrimeIndex idx = parse_prime_index(o->n);
    auto opt = options(o->max_bits);
    Rat h;
    if (o->h.empty()) {
      auto nc = proxy::find_narrow_h(idx, opt);
      if (!nc.passed()) throw InvariantViolation("find_narrow_h found no narrow h for n = " + idx.to_string());
      h = nc.h;
    } else {
      h = parse_h(o->h);
    }
    std::vector<proxy::PSweepRow> rows;
    if (g.jobs <= 1) {
      rows = proxy::sweep_well_configured(idx, h, o->pmax, o->first, opt);
    } else {
      // Surfaces NotNarrow before fanning out.
      proxy::sweep_well_configured(idx, h, 2, false, opt);
      std::vector<std::uint64_t> primes;
      for (auto p : odd_primes(3, o->pmax))
        if (idx.n() % p != 0) primes.push_back(p);
      rows = parallel_map(primes, g.jobs, [&](std::uint64_t p) {
        return proxy::PSweepRow{p, proxy::check_well_configured(idx, h, p, opt)};
      });
      if (o->first) {
        auto it = std::find_if(rows.begin(), rows.end(), [](const proxy::PSweepRow& r) { return r.cert.passed(); });
        if (it != rows.end()) rows.erase(it + 1, rows.end());
      }
    }

    unsigned n_count = 0;
    std::vector<std::optional<roots::IsolationReport>> counts(rows.size());
    if (o->verify_count) {
      n_count = roots::count_critical_points(cyclotomic::phi_derivative(idx.n())).N;
      std::vector<std::size_t> passing;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].cert.passed()) passing.push_back(i);
      auto reps = parallel_map(passing, g.jobs, [&](std::size_t i) {
        return roots::count_critical_points(cyclotomic::phi_derivative(idx.times(rows[i].p).n()));
      });
      for (std::size_t j = 0; j < passing.size(); ++j) counts[passing[j]] = reps[j];
    }
    bool counts_ok = true;
    for (const auto& c : counts)
      if (c && (c->N != 2 * n_count + 1 || !c->all_simple)) counts_ok = false;

    if (g.format == Format::Json) {
      Json arr = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = rows[i].cert;
        Json j;
        j["p"] = rows[i].p;
        j["passed"] = c.passed();
        j["first_failure"] = c.first_failure();
        j["a"] = enclosure(c.a);
        j["b"] = enclosure(c.b);
        Json conds = Json::array();
        for (const auto& e : c.conditions) conds.push_back(evidence_json(e));
        j["conditions"] = std::move(conds);
        if (counts[i]) {
          j["N_np"] = counts[i]->N;
          j["expected"] = 2 * n_count + 1;
          j["all_simple"] = counts[i]->all_simple;
        }
        arr.push_back(std::move(j));
      }
      emit(io.out, Json{{"n", idx.n()}, {"h", frac(h)}, {"rows", arr}});
    } else if (g.format == Format::Csv) {
      io.out << "p,passed,first_failure,c1,c2,c3,c4,c5,c6,c7,a,b,N_np,expected\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = rows[i].cert;
        io.out << rows[i].p << "," << (c.passed() ? "true" : "false") << "," << c.first_failure();
        for (const auto& e : c.conditions) io.out << "," << proxy::to_string(e.verdict);
        io.out << "," << certified_decimal(c.a.lo, c.a.hi, 10) << "," << certified_decimal(c.b.lo, c.b.hi, 10) << ",";
        if (counts[i]) io.out << counts[i]->N << "," << 2 * n_count + 1;
        else io.out << ",";
        io.out << "\n";
      }
    } else {
      io.out << "n = " << idx.n() << ", h = " << to_string(h) << "\n";
      std::optional<std::uint64_t> best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& c = rows[i].cert;
        io.out << "p = " << rows[i].p << ": ";
        if (c.passed()) {
          if (!best) best = rows[i].p;
          io.out << "well-configured";
          if (counts[i]) io.out << ", N_np = " << counts[i]->N << " (expected " << 2 * n_count + 1 << ")";
        } else {
          const auto& e = c.conditions[c.first_failure() - 1];
          io.out << "condition " << e.index << " " << proxy::to_string(e.verdict) << ": " << e.detail;
        }
        io.out << "\n";
      }
      if (best) io.out << "smallest passing p = " << *best << "\n";
      else io.out << "no p <= " << o->pmax << " passes\n";
    }
    rc = counts_ok ? kOk : kInternal;
  });
}

}  // namespace cyclo::cli
