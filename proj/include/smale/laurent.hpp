#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "smale/checked.hpp"

namespace smale {

/// Integer Laurent polynomial in one variable t.
///
/// Terms are kept sparse and sorted by ascending exponent; a stored
/// coefficient is never zero, so the zero polynomial has no terms and two
/// polynomials are equal exactly when their term maps are equal.
class LaurentPoly {
 public:
  using Exponent = int;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  // Implicit so that LaurentPoly behaves as an Eigen scalar (Identity/Zero).
  LaurentPoly(Integer constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Integer coefficient, Exponent exponent);
  /// t^exponent
  static LaurentPoly t(Exponent exponent = 1) { return monomial(1, exponent); }
  /// Sums coefficients of repeated exponents and drops zeros.
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Integer coefficient(Exponent exponent) const;

  /// Lowest/highest exponent; std::domain_error on the zero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  Integer lowest_coefficient() const;
  Integer leading_coefficient() const;

  /// t^shift * p
  LaurentPoly shifted(Exponent shift) const;
  /// p(1/t)
  LaurentPoly reflected() const;
  /// p(1); for a knot's Alexander polynomial this is ±1.
  Integer evaluate_at_one() const;

  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Total order (by term list) for use as a sort key; carries no algebraic meaning.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

 private:
  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul, Negate };

/// Dispatches one ring operation; `q` is ignored for Negate.
LaurentPoly apply(ArithOp op, const LaurentPoly& p, const LaurentPoly& q);

/// Multiplies by the unit ±t^n that moves the lowest term to exponent 0 with
/// a positive coefficient. Zero maps to zero.
LaurentPoly normalize(const LaurentPoly& p);

/// p = ±t^n q for some n. Two zero polynomials compare equal.
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

/// p(t) = ±t^n p(1/t) for some sign and n.
bool is_symmetric(const LaurentPoly& p);

/// Exact quotient; std::domain_error if `den` is zero or does not divide `num`.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

inline bool is_zero(const LaurentPoly& p) noexcept { return p.is_zero(); }

/// Parses the canonical text form (`t^-1 - 1 + t`, `1 - 2*t + 3*t^2`, `0`).
/// Throws ParseError.
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace smale
