#include "knotlike/alexander.hpp"

#include <cctype>
#include <numeric>

#include "knotlike/error.hpp"

namespace knotlike {

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  p.add(exponent, c);
  return p;
}

void LaurentPoly::add(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly::Coeff LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::degree() const {
  if (terms_.empty()) throw InternalError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (terms_.empty()) throw InternalError("degree of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPoly::Coeff LaurentPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::substitute(int k) const {
  if (k < 1) throw Error("substitution t -> t^k needs k >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add(e * k, c);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by the zero polynomial");
  const int dd = divisor.degree();
  const Coeff lead = divisor.coefficient(dd);
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int e = rem.degree();
    const Coeff c = rem.coefficient(e);
    if (c % lead != 0) break;
    const LaurentPoly step = monomial(c / lead, e - dd);
    quot += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) throw InternalError("inexact polynomial division");
  return quot;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly parse_poly(std::string_view text) {
  LaurentPoly out;
  std::size_t i = 0;
  auto column = [&] { return static_cast<int>(i) + 1; };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&](const char* what) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::string("expected ") + what, 1, column());
    }
    LaurentPoly::Coeff v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > (LaurentPoly::Coeff{1} << 40)) throw ParseError(std::string(what) + " too large", 1, column());
      ++i;
    }
    return v;
  };

  skip_space();
  if (i == text.size()) throw ParseError("empty polynomial", 1, 1);
  bool first = true;
  while (true) {
    skip_space();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", 1, column());
    }
    first = false;
    LaurentPoly::Coeff coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = read_uint("coefficient");
      have_coeff = true;
      skip_space();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_space();
      }
    }
    int exponent = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exponent = 1;
      skip_space();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_space();
        exponent = static_cast<int>(read_uint("exponent"));
      }
    } else if (!have_coeff) {
      throw ParseError("expected a coefficient or 't'", 1, column());
    }
    out += LaurentPoly::monomial(sign * coeff, exponent);
  }
  return out;
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    const LaurentPoly::Coeff mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentPoly torus_delta(int p, int q) {
  if (p < 1 || q < 1) throw Error("torus knot parameters must be positive");
  if (std::gcd(p, q) != 1) throw NotCoprimeError("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  const LaurentPoly one = LaurentPoly::constant(1);
  auto t_pow_minus_one = [&](int k) { return LaurentPoly::monomial(1, k) - one; };
  const LaurentPoly num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
  const LaurentPoly den = t_pow_minus_one(p) * t_pow_minus_one(q);
  return num.divide_exact(den);
}

LaurentPoly cable_delta(int p, int q, const LaurentPoly& inner) {
  return inner.substitute(p) * torus_delta(p, q);
}

StaircaseData staircase_data(const LaurentPoly& delta) {
  if (delta.is_zero()) throw NotStaircaseError("zero polynomial");
  const auto& terms = delta.terms();
  if (terms.size() % 2 == 0) throw NotStaircaseError("even number of terms");
  if (delta.low_degree() != 0 || delta.coefficient(0) != 1) throw NotStaircaseError("constant term is not +1");
  StaircaseData out;
  LaurentPoly::Coeff expected = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->second != expected) {
      throw NotStaircaseError("coefficient of t^" + std::to_string(it->first) + " breaks the +1/-1 alternation");
    }
    expected = -expected;
    out.b.push_back(it->first);
  }
  const int d = delta.degree();
  for (const auto& [e, c] : terms) {
    if (delta.coefficient(d - e) != c) throw NotStaircaseError("not palindromic");
  }
  for (std::size_t i = 0; i + 1 < out.b.size(); i += 2) out.c.push_back(out.b[i] - out.b[i + 1]);
  return out;
}

Params staircase_params(const LaurentPoly& delta) {
  const StaircaseData s = staircase_data(delta);
  const std::size_t m = s.c.size();
  Params out;
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(s.c[i]);
    out.push_back(-s.c[m - 1 - i]);
  }
  return out;
}

std::map<int, int> lspace_phi(const LaurentPoly& delta) {
  std::map<int, int> out;
  for (int c : staircase_data(delta).c) ++out[c];
  return out;
}

}  // namespace knotlike
