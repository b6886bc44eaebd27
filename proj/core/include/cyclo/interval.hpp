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

// Closed intervals with rational endpoints.
//
// Arithmetic is exact; round_outward() trades width for endpoint size by
// snapping to a dyadic grid, always away from the enclosed set.

#ifndef CYCLO_INTERVAL_HPP
#define CYCLO_INTERVAL_HPP

#include "cyclo/bigpoly.hpp"

namespace cyclo {

struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() = default;
  RatInterval(Rat l, Rat h);
  static RatInterval point(const Rat& r) { return {r, r}; }

  bool contains(const Rat& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  /// +1 or -1 when every element has that sign, 0 otherwise.
  int sign() const;
  /// Smallest |x| and largest |x| over the interval.
  Rat mag_lo() const;
  Rat mag_hi() const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
/// Throws InvariantViolation if b contains zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

/// {|x| : x in a}.
RatInterval abs(const RatInterval& a);
RatInterval pow(const RatInterval& a, unsigned long n);
RatInterval hull(const RatInterval& a, const RatInterval& b);

/// Snap lo down and hi up to multiples of 2^-bits.
RatInterval round_outward(const RatInterval& a, unsigned bits);
Rat floor_dyadic(const Rat& r, unsigned bits);
Rat ceil_dyadic(const Rat& r, unsigned bits);

/// Horner evaluation of a over the interval. With bits > 0 every partial
/// result is rounded outward, which bounds endpoint growth.
RatInterval eval(const IntPoly& a, const RatInterval& x, unsigned bits = 0);

/// Enclosure of {x^(1/n) : x in a} for a within [0, inf), endpoints on the
/// 2^-bits grid.
RatInterval nth_root(const RatInterval& a, unsigned long n, unsigned bits);

}  // namespace cyclo

#endif  // CYCLO_INTERVAL_HPP
