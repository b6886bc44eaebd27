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

#include "app.hpp"

#include <cstdlib>

#include "commands.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"

namespace cyclo::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Io io{out, err};
  Global g;
  int rc = kOk;

  CLI::App app{"Real critical points of cyclotomic polynomials", "cyclo"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, csv = false;
  std::size_t cache_terms = 0;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--csv", csv, "CSV output");
  app.add_option("--jobs,-j", g.jobs, "Rows computed in parallel")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache-terms", cache_terms, "Coefficient budget of the Phi_n memo (0 keeps the default)");

  // Resolve the output format before any subcommand callback runs.
  app.parse_complete_callback([&] {
    if (json && csv) throw CLI::ValidationError("--json and --csv are exclusive");
    g.format = json ? Format::Json : csv ? Format::Csv : Format::Text;
    if (cache_terms) cyclotomic::phi_cache().set_budget(cache_terms);
    if (const char* dir = std::getenv("CYCLO_CACHE_DIR"); dir && *dir) cyclotomic::phi_cache().set_spill_dir(dir);
  });

  add_poly(app, io, g, rc);
  add_count(app, io, g, rc);
  add_plot(app, io, g, rc);
  add_proxy(app, io, g, rc);
  add_verify_recurrence(app, io, g, rc);
  add_wellconf(app, io, g, rc);
  add_conjecture(app, io, g, rc);
  add_verify_all(app, io, g, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "cyclo: " << e.what() << "\n";
    return kData;
  } catch (const ParseError& e) {
    err << "cyclo: " << e.what() << "\n";
    return kData;
  } catch (const BudgetExceeded& e) {
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedIndex& e) {
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const NotNarrow& e) {
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const IndexNotCoprime& e) {
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const CountMismatch& e) {
    // The locating table is only defined when N_n = 2^k - 1.
    err << "cyclo: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "cyclo: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return rc;
}

}  // namespace cyclo::cli
