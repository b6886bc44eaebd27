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

#include "commands.hpp"
#include "cyclo/conjectures.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"

namespace cyclo::cli {

namespace {

struct CountResult {
  GeneralIndex idx;
  roots::IsolationReport rep;
  std::vector<conjectures::LawCheck> laws;
};

GeneralIndex parse_general(const std::string& s) {
  std::uint64_t n = parse_n(s);
  try {
    return GeneralIndex(n);
  } catch (const UnsupportedIndex& e) {
    throw UsageError(e.what());
  }
}

CountResult count_one(const GeneralIndex& idx) {
  CountResult r{idx, roots::count_critical_points(cyclotomic::phi_derivative(idx.n())), {}};
  if (idx.is_squarefree() && idx.is_odd())
    r.laws = conjectures::parity_law(PrimeIndex(idx.distinct_primes()), r.rep);
  else
    r.laws = conjectures::reduction_law(idx);
  return r;
}

std::string prime_label(const GeneralIndex& idx) {
  std::string s;
  for (const auto& f : idx.factors()) {
    if (!s.empty()) s += "*";
    s += std::to_string(f.p);
    if (f.e > 1) s += "^" + std::to_string(f.e);
  }
  return s;
}

Json count_json(const CountResult& r) {
  Json j;
  j["n"] = r.idx.n();
  j["factors"] = prime_label(r.idx);
  j["k"] = r.idx.distinct_primes().size();
  Json rep = report_json(r.rep);
  for (auto& [key, v] : rep.items()) j[key] = v;
  Json laws = Json::array();
  for (const auto& l : r.laws) laws.push_back(Json{{"law", l.name}, {"holds", l.holds}, {"detail", l.detail}});
  j["laws"] = std::move(laws);
  return j;
}

void count_text(std::ostream& out, const CountResult& r) {
  const auto& rep = r.rep;
  out << "n = " << r.idx.n() << " (" << prime_label(r.idx) << ")\n";
  out << "N = " << rep.N << "  (N- = " << rep.N_neg << ", N0 = " << rep.N_zero << ", N+ = " << rep.N_pos << ")";
  out << (rep.all_simple ? ", all simple\n" : ", repeated roots present\n");
  for (const auto& iv : rep.intervals) {
    out << "  [" << to_string(iv.lo) << ", " << to_string(iv.hi) << "]";
    if (iv.multiplicity > 1) out << "  multiplicity " << iv.multiplicity;
    out << "\n";
  }
  for (const auto& l : r.laws) out << "  " << l.name << ": " << (l.holds ? "holds" : "VIOLATED") << " (" << l.detail << ")\n";
}

}  // namespace

void write_count_table(std::ostream& out, const std::vector<conjectures::CountRow>& rows) {
  out << "k,2k-1,2^k-1,n,N_n\n";
  for (const auto& r : rows)
    out << r.k << "," << r.lower << "," << r.upper << "," << r.idx.to_string() << "," << r.N << "\n";
}

void add_poly(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("poly", "Print Phi_n or one of its derivatives");
  auto n = std::make_shared<std::string>();
  auto d = std::make_shared<unsigned>(0);
  cmd->add_option("n", *n, "Index, e.g. 105 or 3*5*7")->required();
  cmd->add_option("--derivative,-d", *d, "Derivative order");
  cmd->callback([&io, &g, &rc, n, d] {
    GeneralIndex idx = parse_general(*n);
    IntPoly f = *d ? cyclotomic::phi_derivative(idx.n(), *d) : cyclotomic::phi_poly(idx);
    if (g.format == Format::Json) {
      Json j;
      j["n"] = idx.n();
      j["derivative"] = *d;
      j["degree"] = f.degree();
      Json c = Json::array();
      for (const auto& a : f.coeffs()) c.push_back(a.get_str());
      j["coeffs"] = std::move(c);
      emit(io.out, j);
    } else if (g.format == Format::Csv) {
      io.out << "i,coeff\n";
      for (std::size_t i = 0; i < f.size(); ++i) io.out << i << "," << f.coeffs()[i].get_str() << "\n";
    } else {
      io.out << to_pretty(f) << "\n";
    }
    rc = kOk;
  });
}

void add_count(CLI::App& app, const Io& io, const Global& g, int& rc) {
  auto* cmd = app.add_subcommand("count", "Count the real critical points of Phi_n");
  auto ns = std::make_shared<std::vector<std::string>>();
  auto table = std::make_shared<std::string>();
  auto reduce = std::make_shared<bool>(false);
  cmd->add_option("n", *ns, "Indices");
  cmd->add_option("--table", *table, "File of indices; emits the counting table as CSV");
  cmd->add_flag("--reduce", *reduce, "Allow even and non-squarefree n through the reduction laws");
  cmd->callback([&io, &g, &rc, ns, table, reduce] {
    if (!table->empty()) {
      if (!ns->empty()) throw UsageError("give either indices or --table, not both");
      auto rows = parallel_map(read_index_file(*table), g.jobs, conjectures::count_row);
      write_count_table(io.out, rows);
      rc = kOk;
      for (const auto& r : rows)
        if (!r.within_bounds) io.err << "note: N = " << r.N << " outside [2k-1, 2^k-1] for n = " << r.idx.to_string() << "\n";
      return;
    }
    if (ns->empty()) throw UsageError("count needs at least one index");
    std::vector<GeneralIndex> idxs;
    for (const auto& s : *ns) {
      GeneralIndex idx = parse_general(s);
      if (!*reduce && !idx.is_odd())
        throw UsageError("n = " + std::to_string(idx.n()) + " is even; use --reduce to count it through the reduction laws");
      if (!*reduce && !idx.is_squarefree())
        throw UsageError("n = " + std::to_string(idx.n()) + " is not squarefree; use --reduce");
      if (idx.n() < 3 && !*reduce) throw UsageError("n must be at least 3");
      idxs.push_back(idx);
    }
    std::sort(idxs.begin(), idxs.end(), [](const GeneralIndex& a, const GeneralIndex& b) { return a.n() < b.n(); });
    auto results = parallel_map(idxs, g.jobs, count_one);
    bool laws_ok = true;
    for (const auto& r : results)
      for (const auto& l : r.laws) laws_ok = laws_ok && l.holds;
    if (g.format == Format::Json) {
      if (results.size() == 1) {
        emit(io.out, count_json(results[0]));
      } else {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(count_json(r));
        emit(io.out, arr);
      }
    } else if (g.format == Format::Csv) {
      io.out << "n,k,N,N_neg,N_zero,N_pos,all_simple\n";
      for (const auto& r : results)
        io.out << r.idx.n() << "," << r.idx.distinct_primes().size() << "," << r.rep.N << "," << r.rep.N_neg << ","
               << r.rep.N_zero << "," << r.rep.N_pos << "," << (r.rep.all_simple ? "true" : "false") << "\n";
    } else {
      for (const auto& r : results) count_text(io.out, r);
    }
    rc = laws_ok ? kOk : kInternal;
  });
}

}  // namespace cyclo::cli
