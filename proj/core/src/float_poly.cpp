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

#include "float_poly.hpp"

namespace cyclo::detail {

bool to_ld(const Int& z, LD& value, LD& err) {
  int s = sgn(z);
  if (s == 0) {
    value = 0;
    err = 0;
    return true;
  }
  std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits > 16000) return false;
  if (bits <= 64) {
    Int m = ::abs(z);
    value = static_cast<LD>(mpz_get_ui(m.get_mpz_t()));
    err = 0;
  } else {
    Int t;
    mpz_abs(t.get_mpz_t(), z.get_mpz_t());
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), bits - 64);
    int shift = static_cast<int>(bits - 64);
    value = std::ldexp(static_cast<LD>(mpz_get_ui(t.get_mpz_t())), shift);
    err = std::ldexp(1.0L, shift);
  }
  if (s < 0) value = -value;
  return true;
}

void shift1(FloatPoly& a) {
  std::size_t n = a.v.size();
  LD* v = a.v.data();
  LD* e = a.e.data();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) {
      LD s = v[j] + v[j + 1];
      v[j] = s;
      e[j] = (e[j] + e[j + 1] + kU * std::fabs(s) + kEta) * kK;
    }
  }
}

int certified_variations(const FloatPoly& a) {
  int last = 0, var = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    LD x = a.v[i];
    if (!std::isfinite(x) || !std::isfinite(a.e[i]) || std::fabs(x) <= a.e[i]) return -1;
    int s = x > 0 ? 1 : -1;
    if (last && s != last) ++var;
    last = s;
  }
  return var;
}

int certified_sign(const FloatPoly& a, LD x) {
  if (a.v.empty()) return 0;
  LD ax = std::fabs(x);
  LD s = a.v.back();
  LD err = a.e.back();
  for (std::size_t i = a.v.size() - 1; i-- > 0;) {
    LD p = s * x;
    LD t = p + a.v[i];
    err = (err * ax + kU * std::fabs(p) + kU * std::fabs(t) + a.e[i] + 2 * kEta) * kK;
    s = t;
  }
  if (!std::isfinite(s) || !std::isfinite(err) || std::fabs(s) <= err) return 2;
  return s > 0 ? 1 : -1;
}

}  // namespace cyclo::detail
