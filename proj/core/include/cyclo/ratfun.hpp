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

#ifndef CYCLO_RATFUN_HPP
#define CYCLO_RATFUN_HPP

#include <utility>

#include "cyclo/bigpoly.hpp"

namespace cyclo {

/// num/den over the integers in lowest terms, den with positive leading
/// coefficient and no common integer content with num.
///
/// A RatFun may also remember that den = base^power for a square-free base.
/// Derivatives then stay in that form without any gcd: for num coprime to a
/// square-free base, num' base - m num base' is again coprime to it.
class RatFun {
 public:
  RatFun() : RatFun(IntPoly(), IntPoly{1}) {}
  /// Reduces to lowest terms. Throws ZeroPolynomial if den is zero.
  RatFun(IntPoly num, IntPoly den);
  /// num / base^power. The caller promises base is square-free and coprime
  /// to num; verify_power_form() checks it.
  static RatFun power_form(IntPoly num, IntPoly base, unsigned power);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool has_power_form() const { return power_ > 0; }
  const IntPoly& base() const { return base_; }
  unsigned power() const { return power_; }

  /// Throws InvariantViolation if den vanishes at x.
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  RatFun derivative(unsigned order = 1) const;
  /// f(x^p); lowest terms are preserved by dilation.
  RatFun compose_power(unsigned long p) const;

  RatFun operator-() const;
  friend RatFun operator*(const Int& c, const RatFun& f);
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);

  /// Checks gcd(num, base) = 1 and base square-free.
  bool verify_power_form() const;

 private:
  struct Raw {};
  RatFun(Raw, IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_content();

  IntPoly num_;
  IntPoly den_;
  IntPoly base_;
  unsigned power_ = 0;
};

/// a == b as functions, by cross-multiplication.
bool same_function(const RatFun& a, const RatFun& b);

}  // namespace cyclo

#endif  // CYCLO_RATFUN_HPP
