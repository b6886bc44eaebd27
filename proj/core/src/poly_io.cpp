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

#include "cyclo/poly_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(digits, 10) == 0;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

std::string to_text(const IntPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out.push_back(' ');
    out += a.coeffs()[i].get_str();
  }
  return out;
}

std::string to_pretty(const IntPoly& a, char var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    const Int& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    Int m = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << m.get_str();
      continue;
    }
    if (m != 1) os << m.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPoly parse_text(std::string_view s) {
  std::vector<Int> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      Int c;
      if (!parse_int(s.substr(i, j - i), c))
        throw ParseError("bad coefficient '" + std::string(s.substr(i, j - i)) + "'");
      coeffs.push_back(c);
    }
    i = j;
  }
  if (coeffs.empty()) throw ParseError("empty polynomial text");
  return IntPoly(std::move(coeffs));
}

IntPoly parse_pretty(std::string_view text, char var) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial text");
  std::vector<Int> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Int c = 1;
    bool has_coeff = j > i;
    if (has_coeff) c.set_str(s.substr(i, j - i), 10);
    i = j;
    std::size_t exp = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw ParseError("dangling '*' in '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != var) throw ParseError("expected variable after '*'");
    }
    if (i < s.size() && s[i] == var) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw ParseError("missing exponent in '" + s + "'");
        exp = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      throw ParseError("empty term in '" + s + "'");
    }
    if (coeffs.size() <= exp) coeffs.resize(exp + 1);
    coeffs[exp] += sign * c;
  }
  return IntPoly(std::move(coeffs));
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view s) {
  std::string t = strip(s);
  auto slash = t.find('/');
  Int num, den = 1;
  if (!parse_int(std::string_view(t).substr(0, slash), num))
    throw ParseError("bad rational '" + t + "'");
  if (slash != std::string::npos) {
    if (!parse_int(std::string_view(t).substr(slash + 1), den) || sgn(den) == 0)
      throw ParseError("bad rational '" + t + "'");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_decimal_truncated(const Rat& r, unsigned digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int q;
  Int absnum = abs(r.get_num());
  Int scaled = absnum * scale;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), r.get_den_mpz_t());
  std::string body = q.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = sgn(r) < 0 ? "-" : "";
  out += body.substr(0, body.size() - digits);
  if (digits) out += "." + body.substr(body.size() - digits);
  return out;
}

std::string certified_decimal(const Rat& lo, const Rat& hi, unsigned max_digits) {
  std::string best;
  for (unsigned k = 0; k <= max_digits; ++k) {
    std::string a = to_decimal_truncated(lo, k);
    std::string b = to_decimal_truncated(hi, k);
    // A sign flip across zero truncates to "-0.00" and "0.00"; both are zero.
    if (a.size() && a[0] == '-' && a.find_first_not_of("-0.") == std::string::npos) a = a.substr(1);
    if (b.size() && b[0] == '-' && b.find_first_not_of("-0.") == std::string::npos) b = b.substr(1);
    if (a != b) break;
    best = a;
  }
  return best;
}

}  // namespace cyclo
