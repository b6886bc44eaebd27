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

// Real algebraic numbers as (square-free polynomial, isolating interval).

#ifndef CYCLO_ALGEBRAIC_HPP
#define CYCLO_ALGEBRAIC_HPP

#include <string>
#include <vector>

#include "cyclo/bigpoly.hpp"
#include "cyclo/interval.hpp"

namespace cyclo {

/// Either an exact rational, or the unique root of a square-free integer
/// polynomial inside an open interval (lo, hi) whose endpoints the
/// polynomial does not vanish on. The interval is refined lazily, so the
/// observers below are const but may shrink it.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Rat(0)) {}
  explicit AlgebraicReal(const Rat& r);
  /// The root of sf in (lo, hi). Requires sf(lo) sf(hi) < 0, or lo == hi.
  AlgebraicReal(IntPoly sf, Rat lo, Rat hi);

  bool is_rational() const { return lo_ == hi_; }
  /// Valid when is_rational().
  const Rat& rational() const { return lo_; }
  const IntPoly& poly() const { return poly_; }
  RatInterval enclosure() const { return {lo_, hi_}; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  /// Shrinks the interval to width <= 2^-bits (or to a point).
  void refine(unsigned bits) const;
  /// One bisection step.
  void bisect() const;

  /// Sign of g at this number, decided exactly.
  int sign_of(const IntPoly& g) const;

  AlgebraicReal operator-() const;
  AlgebraicReal abs() const;
  int sign() const;

  /// Truncated decimal expansion; digits are certified.
  std::string to_decimal(unsigned digits) const;
  long double approx() const;

 private:
  IntPoly poly_;
  mutable Rat lo_;
  mutable Rat hi_;
  mutable int slo_ = 0;
};

/// Exact three-way comparison; refines both operands as needed.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
int compare(const AlgebraicReal& a, const Rat& r);

inline bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }

/// All distinct real roots of a (nonzero), ascending.
std::vector<AlgebraicReal> real_roots(const IntPoly& a);

/// Distinct real roots in the closed interval [lo, hi], ascending.
std::vector<AlgebraicReal> real_roots_in(const IntPoly& a, const Rat& lo, const Rat& hi);

/// Distinct real roots of a in [lo, hi], for algebraic bounds.
std::vector<AlgebraicReal> real_roots_in(const IntPoly& a, const AlgebraicReal& lo, const AlgebraicReal& hi);

}  // namespace cyclo

#endif  // CYCLO_ALGEBRAIC_HPP
