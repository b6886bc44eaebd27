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

// Long double values carrying a rigorous absolute error bound.
//
// Every stored pair (v, e) satisfies |true - v| <= e. U bounds the relative
// rounding error of one operation on the 64-bit significand; ETA absorbs
// underflow into the subnormal range; K inflates each bound to cover the
// rounding committed while computing the bound itself.

#ifndef CYCLO_SRC_FLOAT_POLY_HPP
#define CYCLO_SRC_FLOAT_POLY_HPP

#include <cmath>
#include <vector>

#include "cyclo/bigpoly.hpp"

namespace cyclo::detail {

using LD = long double;

static_assert(sizeof(LD) >= 10, "x87 extended precision expected");

inline const LD kU = std::ldexp(1.0L, -63);
inline const LD kK = 1.0L + std::ldexp(1.0L, -60);
inline const LD kEta = std::ldexp(1.0L, -16300);

struct FloatPoly {
  std::vector<LD> v;
  std::vector<LD> e;
  std::size_t size() const { return v.size(); }
};

/// z as a long double with error bound; returns false if out of range.
bool to_ld(const Int& z, LD& value, LD& err);

/// a(x + 1) in place.
void shift1(FloatPoly& a);

/// Coefficient sign variations, or -1 if some sign is not certified.
int certified_variations(const FloatPoly& a);

/// Certified sign of a(x) for x exactly representable; 2 if undecided.
int certified_sign(const FloatPoly& a, LD x);

}  // namespace cyclo::detail

#endif  // CYCLO_SRC_FLOAT_POLY_HPP
