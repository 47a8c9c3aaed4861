#pragma once

// Alexander polynomials of torus knots and cables, and staircases of
// L-space knots.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotlike/standard.hpp"

namespace knotlike {

/// Integer Laurent polynomial in t, stored sparsely without zero
/// coefficients.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly constant(Coeff c) { return monomial(c, 0); }

  const std::map<int, Coeff>& terms() const { return terms_; }
  Coeff coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  /// Highest and lowest exponents; zero polynomial has neither.
  int degree() const;
  int low_degree() const;
  Coeff at_one() const;

  /// p(t) -> p(t^k), k >= 1.
  LaurentPoly substitute(int k) const;
  /// Exact quotient; throws InternalError if `divisor` does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add(int exponent, Coeff c);

  std::map<int, Coeff> terms_;
};

/// Parses signed monomial sums such as "t^8-t^7+t^4-t+1" or "3t^2 - 2".
LaurentPoly parse_poly(std::string_view text);
/// Decreasing exponents, e.g. "t^6-t^5+t^3-t+1"; zero prints as "0".
std::string format_poly(const LaurentPoly& p);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q >= 1.
LaurentPoly torus_delta(int p, int q);

/// inner(t^p) * torus_delta(p, q).
LaurentPoly cable_delta(int p, int q, const LaurentPoly& inner);

struct StaircaseData {
  std::vector<int> b;  ///< exponents, strictly decreasing
  std::vector<int> c;  ///< c_i = b_{2i-2} - b_{2i-1}
};

/// Throws NotStaircaseError unless delta has an odd number of terms with
/// coefficients alternating +1, -1, ..., +1 from the top, constant term +1,
/// and is palindromic.
StaircaseData staircase_data(const LaurentPoly& delta);

/// (c_1, -c_m, c_2, -c_{m-1}, ..., c_m, -c_1).
Params staircase_params(const LaurentPoly& delta);

/// phi_j = #{i : c_i = j}.
std::map<int, int> lspace_phi(const LaurentPoly& delta);

}  // namespace knotlike
