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

// The proxy D_n(x) = x Phi_n'(x) / Phi_n(x), its dilation
// H_{n,p}(x) = p D_n(x^p), and the predicates built on them.

#ifndef CYCLO_PROXY_HPP
#define CYCLO_PROXY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/index.hpp"
#include "cyclo/interval.hpp"
#include "cyclo/ratfun.hpp"

namespace cyclo::proxy {

RatFun proxy_d(const PrimeIndex& idx);
/// Throws IndexNotCoprime if p divides n.
RatFun proxy_h(const PrimeIndex& idx, std::uint64_t p);

/// D_{np} == H_{n,p} - D_n, cross-multiplied.
bool check_dh_recurrence(const PrimeIndex& idx, std::uint64_t p);

struct ShapesReport {
  // [d][x + 1] for x in {-1, 0, 1}.
  std::array<std::array<int, 3>, 3> d_observed{};
  std::array<std::array<int, 3>, 3> d_expected{};
  std::array<std::array<int, 3>, 3> h_observed{};
  std::array<std::array<int, 3>, 3> h_expected{};
  bool ok() const { return d_observed == d_expected && h_observed == h_expected; }
  /// Human-readable list of mismatching cells, empty when ok().
  std::string mismatches() const;
};

ShapesReport shapes_table(const PrimeIndex& idx, std::uint64_t p);
bool check_shapes_table(const PrimeIndex& idx, std::uint64_t p);

/// H(x) == p D(x^p) at every sample.
bool check_graph_correspondence(const PrimeIndex& idx, std::uint64_t p, const std::vector<Rat>& samples);

struct CountPrediction {
  unsigned N = 0;
  unsigned N_neg = 0;
  unsigned N_pos = 0;
  friend bool operator==(const CountPrediction&, const CountPrediction&) = default;
};

/// Unrolls N_{np} = 2 N_n + 1 with the parity split from (1, 1, 0).
CountPrediction predict_count_recurrence(const PrimeIndex& idx);
CountPrediction predict_count_recurrence(unsigned k);

enum class Verdict { Pass, Fail, Undecided };
const char* to_string(Verdict v);

struct ConditionEvidence {
  int index = 0;
  Verdict verdict = Verdict::Undecided;
  std::string detail;
  // Enclosures of the two compared quantities, when the condition is an inequality.
  std::optional<RatInterval> lhs;
  std::optional<RatInterval> rhs;
  // Where the deciding extremum sits.
  std::optional<RatInterval> witness;
};

struct NarrowCertificate {
  Rat h;
  RatInterval l;
  std::array<ConditionEvidence, 4> conditions;
  bool passed() const;
};

struct WellConfiguredCertificate {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  Rat h;
  RatInterval a;
  RatInterval b;
  std::array<ConditionEvidence, 7> conditions;
  bool passed() const;
  /// 1-based index of the first condition that did not pass, 0 if none.
  int first_failure() const;
};

struct PredicateOptions {
  /// Enclosure precision schedule for inequalities that are not decided exactly.
  unsigned start_bits = 64;
  unsigned max_bits = 4096;
};

NarrowCertificate check_narrow(const PrimeIndex& idx, const Rat& h, const PredicateOptions& opt = {});

/// Follows the existence argument: start below min(h-bar, D(1), D(-1)) and
/// halve until all four conditions certify. Throws SimplicityViolated when
/// Phi_n' has a repeated real root. After 64 halvings the last failing
/// certificate is returned; check passed().
NarrowCertificate find_narrow_h(const PrimeIndex& idx, const PredicateOptions& opt = {});

/// Throws NotNarrow if h is not narrow for n, IndexNotCoprime if p | n.
WellConfiguredCertificate check_well_configured(const PrimeIndex& idx, const Rat& h, std::uint64_t p,
                                                const PredicateOptions& opt = {});

struct PSweepRow {
  std::uint64_t p = 0;
  WellConfiguredCertificate cert;
};

/// Certificates for every odd prime p <= p_max not dividing n, in order.
/// With stop_at_first, the sweep ends at the first passing p.
std::vector<PSweepRow> sweep_well_configured(const PrimeIndex& idx, const Rat& h, std::uint64_t p_max,
                                             bool stop_at_first = false, const PredicateOptions& opt = {});

std::optional<std::uint64_t> smallest_passing_p(const PrimeIndex& idx, const Rat& h, std::uint64_t p_max,
                                                const PredicateOptions& opt = {});

}  // namespace cyclo::proxy

#endif  // CYCLO_PROXY_HPP
