#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "smale/errors.hpp"
#include "smale/laurent.hpp"
#include "support.hpp"

using smale::LaurentPoly;
using smale::parse_laurent;

namespace {
LaurentPoly t(int e = 1) { return LaurentPoly::t(e); }
}  // namespace

TEST_CASE("canonical text form") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(t().to_string() == "t");
  CHECK((LaurentPoly(1) - 2 * t() + 3 * t(2)).to_string() == "1 - 2*t + 3*t^2");
  CHECK((t(-1) - 1 + t()).to_string() == "t^-1 - 1 + t");
  CHECK((-t(-1) + 1 - t()).to_string() == "-t^-1 + 1 - t");
  CHECK(LaurentPoly(-7).to_string() == "-7");
  std::ostringstream os;
  os << t(3) - t(-2);
  CHECK(os.str() == "-t^-2 + t^3");
}

TEST_CASE("parse accepts canonical output and common variants") {
  CHECK(parse_laurent("1 - 2*t + 3*t^2") == 1 - 2 * t() + 3 * t(2));
  CHECK(parse_laurent("t^-1 - 1 + t") == t(-1) - 1 + t());
  CHECK(parse_laurent("t^(-1) − 1 + t") == t(-1) - 1 + t());
  CHECK(parse_laurent("2t^3") == 2 * t(3));
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("t - t").is_zero());
  CHECK_THROWS_AS(parse_laurent(""), smale::ParseError);
  CHECK_THROWS_AS(parse_laurent("1 +"), smale::ParseError);
  CHECK_THROWS_AS(parse_laurent("s^2"), smale::ParseError);
  CHECK_THROWS_AS(parse_laurent("t^"), smale::ParseError);
}

TEST_CASE("print/parse round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly p = support::random_poly(rng, 6, 9, 20);
    CHECK(parse_laurent(p.to_string()) == p);
  }
}

TEST_CASE("arithmetic examples") {
  using smale::ArithOp;
  CHECK(apply(ArithOp::Mul, t() - 1, t() + 1) == t(2) - 1);
  const LaurentPoly trefoil = t(2) - t() + 1;
  CHECK(apply(ArithOp::Mul, trefoil, trefoil) == t(4) - 2 * t(3) + 3 * t(2) - 2 * t() + 1);
  CHECK(apply(ArithOp::Add, trefoil, 0) == trefoil);
  CHECK(apply(ArithOp::Sub, trefoil, trefoil).is_zero());
  CHECK(apply(ArithOp::Negate, trefoil, 0) == -t(2) + t() - 1);
}

TEST_CASE("multiplication matches schoolbook convolution") {
  std::mt19937 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const LaurentPoly a = support::random_poly(rng, 6, 6, 9);
    const LaurentPoly b = support::random_poly(rng, 6, 6, 9);
    CHECK(support::to_sparse(a * b) == oracle::schoolbook_multiply(support::to_sparse(a), support::to_sparse(b)));
  }
}

TEST_CASE("ring axioms on small random polynomials") {
  std::mt19937 rng(2);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly a = support::random_poly(rng), b = support::random_poly(rng), c = support::random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
    CHECK(a * 1 == a);
  }
}

TEST_CASE("normalize and unit equality") {
  CHECK(normalize(-t(3) + t(5)) == 1 - t(2));
  CHECK(normalize(t(-1) - 1 + t()) == 1 - t() + t(2));
  CHECK(normalize(LaurentPoly()).is_zero());
  CHECK(equal_up_to_units(t(-1) - 1 + t(), t(2) - t() + 1));
  CHECK(equal_up_to_units(1, -t(3)));
  CHECK_FALSE(equal_up_to_units(t(-1) - 1 + t(), t() - 1));
  CHECK_FALSE(equal_up_to_units(1 + 2 * t(), 2 + t()));
}

TEST_CASE("unit equality is an equivalence relation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> shift(-5, 5), sign(0, 1);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = support::random_poly(rng);
    const LaurentPoly b = a.shifted(shift(rng)) * (sign(rng) ? 1 : -1);
    const LaurentPoly c = b.shifted(shift(rng)) * (sign(rng) ? 1 : -1);
    const LaurentPoly d = support::random_poly(rng);
    CHECK(equal_up_to_units(a, a));
    CHECK(equal_up_to_units(a, b) == equal_up_to_units(b, a));
    CHECK(equal_up_to_units(a, c));
    CHECK(equal_up_to_units(a, d) == equal_up_to_units(d, a));
    CHECK(equal_up_to_units(a, d) == (normalize(a) == normalize(d)));
  }
}

TEST_CASE("symmetry") {
  for (int q = 1; q <= 8; ++q) CHECK(is_symmetric(t(q) - 1 + t(-q)));
  CHECK_FALSE(is_symmetric(1 - 2 * t()));
  CHECK_FALSE(is_symmetric(t(2) + t() - 1));
  CHECK(is_symmetric(t() - 1));  // antisymmetric up to sign still counts
  CHECK(is_symmetric(LaurentPoly(1)));
}

TEST_CASE("symmetric times symmetric is symmetric") {
  std::mt19937 rng(4);
  int tried = 0;
  for (int i = 0; i < 2000; ++i) {
    LaurentPoly a = support::random_poly(rng), b = support::random_poly(rng);
    a = a + a.reflected();
    b = b - b.reflected();
    if (a.is_zero() || b.is_zero()) continue;
    ++tried;
    REQUIRE(is_symmetric(a));
    REQUIRE(is_symmetric(b));
    CHECK(is_symmetric(a * b));
  }
  CHECK(tried > 100);
}

TEST_CASE("exact division") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const LaurentPoly a = support::random_poly(rng), b = support::random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(smale::exact_divide(a * b, b) == a);
  }
  CHECK_THROWS_AS(smale::exact_divide(t() + 1, t() - 1), std::domain_error);
  CHECK_THROWS_AS(smale::exact_divide(t(), LaurentPoly()), std::domain_error);
  CHECK(smale::exact_divide(t(6) - 1, t(2) - 1) == t(4) + t(2) + 1);
}

TEST_CASE("overflow is an error") {
  const LaurentPoly big(std::numeric_limits<smale::Integer>::max());
  CHECK_THROWS_AS(big + 1, std::overflow_error);
  CHECK_THROWS_AS(big * 2, std::overflow_error);
  CHECK_THROWS_AS(-LaurentPoly(std::numeric_limits<smale::Integer>::min()), std::overflow_error);
}

TEST_CASE("accessors") {
  const LaurentPoly p = -3 * t(-2) + 5 * t(4);
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 4);
  CHECK(p.lowest_coefficient() == -3);
  CHECK(p.leading_coefficient() == 5);
  CHECK(p.coefficient(0) == 0);
  CHECK(p.evaluate_at_one() == 2);
  CHECK(p.reflected() == -3 * t(2) + 5 * t(-4));
  CHECK_THROWS_AS(LaurentPoly().min_exponent(), std::domain_error);
}
