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

#include "common.hpp"

#include <algorithm>
#include <fstream>

#include "cyclo/errors.hpp"
#include "cyclo/poly_io.hpp"

namespace cyclo::cli {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::uint64_t parse_n(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw UsageError("empty index");
  std::uint64_t n = 1;
  std::size_t i = 0;
  while (i <= t.size()) {
    std::size_t j = t.find_first_of("*,", i);
    if (j == std::string::npos) j = t.size();
    std::string part = trim(std::string_view(t).substr(i, j - i));
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("malformed index '" + t + "'");
    unsigned __int128 f = 0;
    for (char c : part) {
      f = f * 10 + static_cast<unsigned>(c - '0');
      if (f > UINT64_MAX) throw UsageError("index '" + t + "' does not fit in 64 bits");
    }
    unsigned __int128 prod = static_cast<unsigned __int128>(n) * f;
    if (prod > UINT64_MAX) throw UsageError("index '" + t + "' does not fit in 64 bits");
    n = static_cast<std::uint64_t>(prod);
    i = j + 1;
  }
  return n;
}

PrimeIndex parse_prime_index(std::string_view s) {
  std::uint64_t n = parse_n(s);
  try {
    return PrimeIndex::from_n(n);
  } catch (const UnsupportedIndex& e) {
    throw UsageError(e.what());
  }
}

std::vector<PrimeIndex> read_index_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  std::vector<PrimeIndex> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    try {
      out.push_back(parse_prime_index(t));
    } catch (const UsageError& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeIndex& a, const PrimeIndex& b) { return a.n() < b.n(); });
  return out;
}

std::string frac(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

Json enclosure(const Rat& lo, const Rat& hi) { return Json::array({frac(lo), frac(hi)}); }
Json enclosure(const RatInterval& r) { return enclosure(r.lo, r.hi); }

Json report_json(const roots::IsolationReport& rep) {
  Json j;
  j["N"] = rep.N;
  j["N_neg"] = rep.N_neg;
  j["N_zero"] = rep.N_zero;
  j["N_pos"] = rep.N_pos;
  j["distinct"] = rep.distinct;
  j["all_simple"] = rep.all_simple;
  Json iv = Json::array();
  for (const auto& r : rep.intervals) iv.push_back(enclosure(r.lo, r.hi));
  j["intervals"] = std::move(iv);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace cyclo::cli
