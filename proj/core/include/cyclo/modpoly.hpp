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

// Polynomials over Z/qZ for word-size primes q < 2^32.

#ifndef CYCLO_MODPOLY_HPP
#define CYCLO_MODPOLY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cyclo/bigpoly.hpp"

namespace cyclo::modp {

/// Ascending coefficients in [0, q), no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline constexpr std::array<std::uint64_t, 8> kWordPrimes = {
    4294967291u, 4294967279u, 4294967231u, 4294967197u,
    4294967189u, 4294967161u, 4294967143u, 4294967111u};

Poly reduce(const IntPoly& a, std::uint64_t q);
void trim(Poly& a);

std::uint64_t inverse(std::uint64_t a, std::uint64_t q);

Poly sub(const Poly& a, const Poly& b, std::uint64_t q);
Poly mul(const Poly& a, const Poly& b, std::uint64_t q);
/// a mod f.
Poly rem(Poly a, const Poly& f, std::uint64_t q);
/// Monic gcd; the empty vector when both inputs are zero.
Poly gcd(Poly a, Poly b, std::uint64_t q);
Poly derivative(const Poly& a, std::uint64_t q);
/// base^e mod f.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t q);

/// True iff f is squarefree mod q (and nonconstant).
bool is_squarefree(const Poly& f, std::uint64_t q);

/// Rabin's irreducibility test for f of degree >= 1 over F_q.
bool is_irreducible(const Poly& f, std::uint64_t q);

/// Degrees of the irreducible factors of a squarefree f (distinct-degree
/// factorization), as a multiset in ascending order.
std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t q);

}  // namespace cyclo::modp

#endif  // CYCLO_MODPOLY_HPP
