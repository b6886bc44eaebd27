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

// Text forms for polynomials and rationals.
//
// Canonical form: ascending coefficients separated by single spaces, "0" for
// the zero polynomial. Pretty form: descending terms, e.g. "x^8 - x^7 + 1".

#ifndef CYCLO_POLY_IO_HPP
#define CYCLO_POLY_IO_HPP

#include <string>
#include <string_view>

#include "cyclo/bigpoly.hpp"

namespace cyclo {

std::string to_text(const IntPoly& a);
std::string to_pretty(const IntPoly& a, char var = 'x');

/// Throws ParseError on malformed input.
IntPoly parse_text(std::string_view s);
IntPoly parse_pretty(std::string_view s, char var = 'x');

/// "num/den", or "num" when den == 1.
std::string to_string(const Rat& r);
Rat parse_rat(std::string_view s);

/// Decimal expansion of r truncated toward zero after `digits` places.
std::string to_decimal_truncated(const Rat& r, unsigned digits);

/// Decimal digits shared by every point of [lo, hi], truncated toward zero
/// so that the printed prefix is correct for any value in the interval. The
/// number of places is at most `max_digits`.
std::string certified_decimal(const Rat& lo, const Rat& hi, unsigned max_digits);

}  // namespace cyclo

#endif  // CYCLO_POLY_IO_HPP
