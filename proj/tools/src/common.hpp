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

// Plumbing shared by the subcommands: exit codes, index parsing, JSON
// helpers and a small ordered parallel map.

#ifndef CYCLO_TOOLS_COMMON_HPP
#define CYCLO_TOOLS_COMMON_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cyclo/bigpoly.hpp"
#include "cyclo/index.hpp"
#include "cyclo/interval.hpp"
#include "cyclo/realroots.hpp"

namespace cyclo::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kData = 3 };

// Exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

/// "105", "3*5*7" or "3,5,7"; the product must fit in 64 bits.
std::uint64_t parse_n(std::string_view s);
/// Odd squarefree index; UsageError otherwise.
PrimeIndex parse_prime_index(std::string_view s);

/// One index per line; blank lines and '#' comments are skipped. The result
/// is sorted by n so batch output does not depend on file order. Throws
/// DataError on a malformed or unsupported entry.
std::vector<PrimeIndex> read_index_file(const std::string& path);

/// Always "num/den", so the field type never depends on the value.
std::string frac(const Rat& r);
Json enclosure(const RatInterval& r);
Json enclosure(const Rat& lo, const Rat& hi);
Json report_json(const roots::IsolationReport& rep);

/// Pretty-printed with two-space indent and a trailing newline.
void emit(std::ostream& out, const Json& j);

/// Quotes a CSV field when it contains a separator or a quote.
std::string csv_field(const std::string& s);

/// Applies fn to every item on up to `jobs` threads. Results keep the input
/// order; the first exception in input order is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  if (t <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace cyclo::cli

#endif  // CYCLO_TOOLS_COMMON_HPP
