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

// Independent reference computations for the tests. Nothing here calls into
// the library's polynomial arithmetic; dense coefficient vectors are handled
// with schoolbook loops so that a bug in the core cannot cancel itself out.

#ifndef CYCLO_TESTS_ORACLES_HPP
#define CYCLO_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;
using Poly = std::vector<Z>;  // low degree first, no trailing zeros

void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b);
/// Exact division by a monic-or-unit-leading divisor; nullopt if not exact.
std::optional<Poly> divide(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
Q eval(const Poly& a, const Q& x);
long double eval_ld(const Poly& a, long double x);

int mobius(std::uint64_t n);
/// Phi_n from prod_{d | n} (x^d - 1)^mu(n/d).
Poly mobius_phi(std::uint64_t n);

/// Fraction-free (Bareiss) determinant.
Z determinant(std::vector<std::vector<Z>> m);
/// Resultant from the Sylvester matrix.
Z resultant(const Poly& a, const Poly& b);

/// Kronecker's method: a nonconstant factor of f over Z of degree <= max_deg,
/// if one exists.
std::optional<Poly> kronecker_factor(const Poly& f, unsigned max_deg);

/// Bisects on sign changes of f in [lo, hi] until the width is 2^-bits.
std::pair<Q, Q> bisect_root(const Poly& f, Q lo, Q hi, unsigned bits);

/// Sign changes of f on the grid lo + i (hi - lo) / steps, as cells [x_i, x_{i+1}].
std::vector<std::pair<Q, Q>> grid_sign_changes(const Poly& f, const Q& lo, const Q& hi, unsigned steps);

/// Samples of [lo, hi] with `steps` equal cells, endpoints included.
std::vector<long double> grid(long double lo, long double hi, unsigned steps);

}  // namespace oracle

#endif  // CYCLO_TESTS_ORACLES_HPP
