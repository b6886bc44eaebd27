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

#include "cyclo/errors.hpp"
#include "cyclo/realroots.hpp"

namespace cyclo::roots {

namespace {

// Divide by the (positive) content without touching the sign.
IntPoly drop_content(const IntPoly& a) {
  Int g = content(a);
  return g == 1 ? a : div_exact(a, g);
}

unsigned variations_at(const std::vector<IntPoly>& seq, const Rat& x) {
  unsigned v = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("Sturm sequence of zero");
  std::vector<IntPoly> seq{a};
  if (a.degree() == 0) return seq;
  seq.push_back(drop_content(derivative(a)));
  while (seq.back().degree() > 0) {
    const IntPoly& prev = seq[seq.size() - 2];
    const IntPoly& cur = seq.back();
    IntPoly r = pseudo_remainder(prev, cur);
    if (r.is_zero()) break;
    // prem multiplies by lc^(delta + 1); undo a negative factor.
    long delta = prev.degree() - cur.degree();
    if (sgn(cur.leading()) < 0 && (delta + 1) % 2 == 1) r = -r;
    seq.push_back(-drop_content(r));
  }
  return seq;
}

unsigned sturm_count(const std::vector<IntPoly>& seq, const Rat& lo, const Rat& hi) {
  if (sign_at(seq.front(), lo) == 0 || sign_at(seq.front(), hi) == 0)
    throw EndpointRoot("Sturm endpoint is a root");
  if (hi < lo) return 0;
  unsigned vl = variations_at(seq, lo);
  unsigned vh = variations_at(seq, hi);
  return vl >= vh ? vl - vh : 0;
}

unsigned sturm_count(const IntPoly& a, const Rat& lo, const Rat& hi) {
  return sturm_count(sturm_sequence(a), lo, hi);
}

unsigned sturm_count_all(const IntPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("Sturm count of zero");
  Int b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, root_bound_exponent(a));
  return sturm_count(a, Rat(-b), Rat(b));
}

}  // namespace cyclo::roots
