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
#include <cmath>
#include <fstream>

#include "commands.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"

namespace cyclo::cli {

namespace {

struct PlotRow {
  Rat x;  // midpoint for critical rows
  std::string x_text;
  std::string phi_text;
  double xd = 0;
  double yd = 0;
  bool crit = false;
};

constexpr unsigned kDigits = 12;

void write_svg(const std::string& path, std::uint64_t n, const std::vector<PlotRow>& rows) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  const double w = 640, h = 400, m = 40;
  double ymin = 0, ymax = 0;
  for (const auto& r : rows) {
    ymin = std::min(ymin, r.yd);
    ymax = std::max(ymax, r.yd);
  }
  if (ymax == ymin) ymax = ymin + 1;
  auto sx = [&](double x) { return m + (x + 1) / 2 * (w - 2 * m); };
  auto sy = [&](double y) { return h - m - (y - ymin) / (ymax - ymin) * (h - 2 * m); };
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  f << "<text x=\"" << m << "\" y=\"20\" font-size=\"14\">Phi_" << n << " on [-1, 1]</text>\n";
  f << "<line x1=\"" << sx(-1) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(1) << "\" y2=\"" << sy(0)
    << "\" stroke=\"#999\"/>\n";
  f << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (const auto& r : rows)
    if (!r.crit) f << sx(r.xd) << "," << sy(r.yd) << " ";
  f << "\"/>\n";
  for (const auto& r : rows)
    if (r.crit) f << "<circle cx=\"" << sx(r.xd) << "\" cy=\"" << sy(r.yd) << "\" r=\"3.5\" fill=\"#c0392b\"/>\n";
  f << "</svg>\n";
}

}  // namespace

void add_plot(CLI::App& app, const Io& io, const Global&, int& rc) {
  auto* cmd = app.add_subcommand("plot", "Samples of Phi_n on [-1, 1] with its real critical points");
  struct Opts {
    std::string n;
    unsigned samples = 401;
    unsigned bits = 64;
    std::uint64_t budget = 12000;
    std::string svg;
    std::string out;
  };
  auto o = std::make_shared<Opts>();
  cmd->add_option("n", o->n, "Odd squarefree index")->required();
  cmd->add_option("--samples", o->samples, "Number of equispaced samples")->check(CLI::Range(1u, 1000000u));
  cmd->add_option("--bits", o->bits, "Refinement of the critical points")->check(CLI::Range(8u, 100000u));
  cmd->add_option("--budget", o->budget, "Largest totient accepted");
  cmd->add_option("--svg", o->svg, "Also render an SVG to this file");
  cmd->add_option("--out,-o", o->out, "Write the CSV here instead of stdout");
  cmd->callback([&io, &rc, o] {
    PrimeIndex idx = parse_prime_index(o->n);
    std::uint64_t deg = cyclotomic::totient(idx.general());
    if (deg > o->budget)
      throw BudgetExceeded("phi(" + std::to_string(idx.n()) + ") = " + std::to_string(deg) + " exceeds the plot budget " +
                           std::to_string(o->budget) + " (raise --budget)");
    IntPoly phi = cyclotomic::phi_poly(idx.general());
    IntPoly dphi = derivative(phi);

    std::vector<PlotRow> rows;
    for (unsigned i = 0; i < o->samples; ++i) {
      PlotRow r;
      r.x = o->samples == 1 ? Rat(0) : Rat(2 * i, o->samples - 1) - 1;
      r.x.canonicalize();
      Rat v = eval_rat(phi, r.x);
      r.x_text = to_decimal_truncated(r.x, kDigits);
      r.phi_text = to_decimal_truncated(v, kDigits);
      r.xd = r.x.get_d();
      r.yd = v.get_d();
      rows.push_back(std::move(r));
    }
    auto rep = roots::count_critical_points(dphi);
    for (const auto& iv : rep.intervals) {
      auto fine = iv.sign_change && !iv.exact() ? roots::refine_root(dphi, iv, o->bits) : iv;
      PlotRow r;
      r.crit = true;
      r.x = (fine.lo + fine.hi) / 2;
      RatInterval v = eval(phi, RatInterval(fine.lo, fine.hi), o->bits + 16);
      r.x_text = certified_decimal(fine.lo, fine.hi, kDigits);
      r.phi_text = certified_decimal(v.lo, v.hi, kDigits);
      r.xd = r.x.get_d();
      r.yd = v.midpoint().get_d();
      rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const PlotRow& a, const PlotRow& b) { return a.x < b.x; });

    std::ofstream file;
    if (!o->out.empty()) {
      file.open(o->out);
      if (!file) throw UsageError("cannot write " + o->out);
    }
    std::ostream& csv = o->out.empty() ? io.out : file;
    csv << "x,phi,is_crit\n";
    for (const auto& r : rows) csv << r.x_text << "," << r.phi_text << "," << (r.crit ? 1 : 0) << "\n";
    if (!o->svg.empty()) write_svg(o->svg, idx.n(), rows);
    rc = kOk;
  });
}

}  // namespace cyclo::cli
