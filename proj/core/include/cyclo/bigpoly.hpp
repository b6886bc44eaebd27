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

// Dense univariate polynomials with arbitrary-precision integer coefficients.
//
// Coefficients are stored in ascending order: coeffs()[i] multiplies x^i.
// The zero polynomial has an empty coefficient vector, and a nonzero
// polynomial never carries a zero leading coefficient. Every operation in
// this header is a pure function of its arguments.

#ifndef CYCLO_BIGPOLY_HPP
#define CYCLO_BIGPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cyclo {

using Int = mpz_class;
/// Canonical rational: gcd(num, den) = 1 and den > 0 after every operation.
using Rat = mpq_class;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t degree);
  /// The polynomial x.
  static IntPoly x();

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  const Int& coeff(std::size_t i) const;
  const Int& leading() const;
  const Int& constant_term() const { return coeff(0); }

  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const Int& c);

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void canonicalize();

  std::vector<Int> coeffs_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(IntPoly a, const Int& c);
IntPoly operator*(const Int& c, IntPoly a);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);

/// Degree at which mul() switches from schoolbook to Karatsuba splitting.
inline constexpr std::size_t kDefaultKaratsubaThreshold = 64;

/// Exact product. Sparse operands use a zero-skipping schoolbook loop;
/// dense operands above the threshold are split Karatsuba-style.
IntPoly mul(const IntPoly& a, const IntPoly& b,
            std::size_t karatsuba_threshold = kDefaultKaratsubaThreshold);

/// Schoolbook product, kept separate so tests can cross-check mul().
IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);

/// q with q*b == a. Throws NonExactDivision if b does not divide a over Z.
IntPoly div_exact(const IntPoly& a, const IntPoly& b);

/// Divides every coefficient by c; throws NonExactDivision if any is not a multiple.
IntPoly div_exact(const IntPoly& a, const Int& c);

struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Order-th formal derivative.
IntPoly derivative(const IntPoly& a, unsigned order = 1);

/// a(x^p) by index dilation.
IntPoly compose_power(const IntPoly& a, unsigned long p);

/// a(-x).
IntPoly reflect(const IntPoly& a);

/// x^deg * a(1/x).
IntPoly reverse(const IntPoly& a);

/// x^k * a.
IntPoly shift_up(const IntPoly& a, std::size_t k);

Rat eval_rat(const IntPoly& a, const Rat& x);
Int eval_int(const IntPoly& a, const Int& x);
/// Sign of a(x) for rational x, computed exactly.
int sign_at(const IntPoly& a, const Rat& x);

/// gcd of the coefficients (nonnegative; zero for the zero polynomial).
Int content(const IntPoly& a);
/// a / content(a), with positive leading coefficient.
IntPoly primitive_part(const IntPoly& a);

/// Primitive gcd with positive leading coefficient, computed by the
/// subresultant PRS. A modular degree test short-circuits the coprime case.
/// Requires that a and b are not both zero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Subresultant PRS only; no modular shortcut. Exposed for tests and benchmarks.
IntPoly gcd_subresultant(const IntPoly& a, const IntPoly& b);

/// True if gcd(a, b) is constant, certified by reduction modulo word-size
/// primes (falls back to gcd() when every tried prime is inconclusive).
bool coprime(const IntPoly& a, const IntPoly& b);

/// Yun's square-free decomposition: a = c * prod_i factors[i]^(i+1), with
/// each factor primitive and square-free and the factors pairwise coprime.
/// Trailing empty positions are trimmed; unused multiplicities hold 1.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& a);

/// a / gcd(a, a'), primitive.
IntPoly squarefree_part(const IntPoly& a);

struct TaylorShift {
  /// den(c)^deg * a(x + c), an integer polynomial.
  IntPoly poly;
  /// The positive factor den(c)^deg relating poly to a(x + c).
  Int scale;
};

/// Integer polynomial equal to den(c)^deg(a) * a(x + c), via Pascal-row accumulation.
TaylorShift taylor_shift(const IntPoly& a, const Rat& c);

/// a(x + c) for an integer c, in place on a coefficient vector.
void taylor_shift_int(std::vector<Int>& coeffs, const Int& c);

/// Coefficient sign changes, zeros skipped.
unsigned sign_variations(std::span<const Int> coeffs);

}  // namespace cyclo

#endif  // CYCLO_BIGPOLY_HPP
