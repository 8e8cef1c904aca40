#include "smale/laurent.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smale/errors.hpp"

namespace smale {

namespace {

LaurentPoly::Exponent add_exponents(LaurentPoly::Exponent a, LaurentPoly::Exponent b) {
  LaurentPoly::Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

void accumulate(LaurentPoly::Terms& terms, LaurentPoly::Exponent e, Integer c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

}  // namespace

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, Exponent exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) accumulate(p.terms_, e, c);
  return p;
}

Integer LaurentPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::lowest_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no coefficients");
  return terms_.begin()->second;
}

Integer LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no coefficients");
  return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::shifted(Exponent shift) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), add_exponents(e, shift), c);
  return p;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    if (e == std::numeric_limits<Exponent>::min()) throw std::overflow_error("exponent overflow");
    p.terms_.emplace(-e, c);
  }
  return p;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum = checked_add(sum, c);
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, checked_neg(c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) accumulate(out.terms_, add_exponents(e1, e2), checked_mul(c1, c2));
  return out;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), e, checked_neg(c));
  return out;
}

LaurentPoly apply(ArithOp op, const LaurentPoly& p, const LaurentPoly& q) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
    case ArithOp::Negate: return -p;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.min_exponent());
  return out.lowest_coefficient() < 0 ? -out : out;
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) { return normalize(p) == normalize(q); }

bool is_symmetric(const LaurentPoly& p) { return equal_up_to_units(p, p.reflected()); }

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto den_span = den.max_exponent() - den.min_exponent();
  LaurentPoly remainder = num;
  LaurentPoly quotient;
  // Eliminate from the top: the remainder's highest exponent strictly
  // decreases while its lowest exponent never does, so this terminates.
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < den_span)
      throw std::domain_error("polynomial division leaves a remainder");
    const Integer c = exact_divide(remainder.leading_coefficient(), den.leading_coefficient());
    const auto e = remainder.max_exponent() - den.max_exponent();
    const LaurentPoly step = LaurentPoly::monomial(c, e);
    quotient += step;
    remainder -= step * den;
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const auto magnitude = negative ? -static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << magnitude;
      continue;
    }
    if (magnitude != 1) os << magnitude << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Integer sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = next() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term(sign);
      skip_space();
    }
    return result;
  }

 private:
  LaurentPoly parse_term(Integer sign) {
    Integer coefficient = 1;
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_unsigned();
      have_coefficient = true;
      skip_space();
      if (peek() == '*') {
        next();
        skip_space();
        if (peek() != 't') fail("expected 't' after '*'");
      } else if (peek() != 't') {
        return LaurentPoly(checked_mul(sign, coefficient));
      }
    }
    if (peek() != 't') fail(have_coefficient ? "expected 't'" : "expected a coefficient or 't'");
    next();
    LaurentPoly::Exponent exponent = 1;
    skip_space();
    if (peek() == '^') {
      next();
      skip_space();
      bool paren = false;
      if (peek() == '(') {
        paren = true;
        next();
        skip_space();
      }
      Integer esign = 1;
      if (peek() == '-' || peek() == '+') esign = next() == '-' ? -1 : 1;
      const Integer value = checked_mul(esign, parse_unsigned());
      if (value > std::numeric_limits<LaurentPoly::Exponent>::max() ||
          value < std::numeric_limits<LaurentPoly::Exponent>::min())
        fail("exponent out of range");
      exponent = static_cast<LaurentPoly::Exponent>(value);
      if (paren) {
        skip_space();
        if (next() != ')') fail("expected ')'");
      }
    }
    return LaurentPoly::monomial(checked_mul(sign, coefficient), exponent);
  }

  Integer parse_unsigned() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    Integer value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      try {
        value = checked_add(checked_mul(value, 10), next() - '0');
      } catch (const std::overflow_error&) {
        fail("integer literal too large");
      }
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char next() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  // Accept the typographic minus sign (U+2212) as '-'.
  std::string ascii;
  ascii.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      ascii.push_back('-');
      i += 2;
    } else {
      ascii.push_back(text[i]);
    }
  }
  return PolyParser(ascii).parse();
}

}  // namespace smale
