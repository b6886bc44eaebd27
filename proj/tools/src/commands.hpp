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

#ifndef CYCLO_TOOLS_COMMANDS_HPP
#define CYCLO_TOOLS_COMMANDS_HPP

#include <CLI11.hpp>

#include "common.hpp"
#include "cyclo/conjectures.hpp"

namespace cyclo::cli {

enum class Format { Text, Json, Csv };

struct Global {
  Format format = Format::Text;
  unsigned jobs = 1;
};

/// The counting-table CSV: k, 2k-1, 2^k-1, n, N_n.
void write_count_table(std::ostream& out, const std::vector<conjectures::CountRow>& rows);

/// Each registers one subcommand; its callback stores the exit code in rc.
void add_poly(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_count(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_plot(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_proxy(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_verify_recurrence(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_wellconf(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_conjecture(CLI::App& app, const Io& io, const Global& g, int& rc);
void add_verify_all(CLI::App& app, const Io& io, const Global& g, int& rc);

}  // namespace cyclo::cli

#endif  // CYCLO_TOOLS_COMMANDS_HPP
