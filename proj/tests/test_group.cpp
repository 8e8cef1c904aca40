#include <random>

#include "doctest.h"
#include "smale/errors.hpp"
#include "smale/group.hpp"
#include "smale/knot.hpp"

using namespace smale;

namespace {

LaurentPoly t(int e = 1) { return LaurentPoly::t(e); }

GroupWord random_word(std::mt19937& rng, int generators, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(0, generators - 1), sign(0, 1);
  std::vector<Letter> letters;
  for (int i = len(rng); i > 0; --i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return GroupWord(letters);
}

void check_all_columns(const GroupPresentation& p, const AbelianizationMap& phi, const LaurentPoly& expected) {
  for (int j = 0; j < p.generator_count(); ++j) {
    if (phi.exponent_of(j) == 0) continue;
    CHECK(equal_up_to_units(alexander_from_presentation(p, phi, j), expected));
  }
}

}  // namespace

TEST_CASE("parsing presentations") {
  const auto p = GroupPresentation::parse("<x, y | x y x = y x y>");
  CHECK(p.generators() == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators().size() == 1);
  CHECK(p.word_to_string(p.relators()[0]) == "x y x y^-1 x^-1 y^-1");
  CHECK(GroupPresentation::parse("<x,y|xyx=yxy>").relators() == p.relators());
  CHECK(GroupPresentation::parse("<x,y|x^2 y'>").relators()[0] ==
        GroupWord::power(0, 2) * GroupWord::power(1, -1));
  CHECK(GroupPresentation::parse("<x | >").relators().empty());
  CHECK(GroupPresentation::parse("<a, b | (a b)^2 = 1>").relators()[0].length() == 4);
  CHECK_THROWS_AS(GroupPresentation::parse("<x, y | x z>"), ParseError);
  CHECK_THROWS_AS(GroupPresentation::parse("x, y | x"), ParseError);
  CHECK_THROWS_AS(GroupPresentation::parse("<x, y | x = >"), ParseError);
}

TEST_CASE("free reduction") {
  const GroupWord w({{0, 1}, {1, 1}, {1, -1}, {0, -1}});
  CHECK(w.is_identity());
  CHECK((GroupWord::power(0, 3) * GroupWord::power(0, -2)) == GroupWord::power(0, 1));
  CHECK(GroupWord::power(1, 2).inverse() == GroupWord::power(1, -2));
}

TEST_CASE("Fox derivative examples") {
  const AbelianizationMap phi({1, 1});
  const GroupWord xyx({{0, 1}, {1, 1}, {0, 1}});
  CHECK(fox_derivative(xyx, 0, phi) == 1 + t(2));
  CHECK(fox_derivative(GroupWord::power(0, 5), 0, phi) == 1 + t() + t(2) + t(3) + t(4));
  CHECK(fox_derivative(GroupWord::power(1, 1), 0, phi).is_zero());
  CHECK(fox_derivative(GroupWord::power(0, -1), 0, phi) == -t(-1));
}

TEST_CASE("fundamental Fox identity on random words") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> gens(1, 4), expo(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    const int g = gens(rng);
    std::vector<Integer> exps;
    for (int j = 0; j < g; ++j) exps.push_back(expo(rng));
    const AbelianizationMap phi(exps);
    const GroupWord w = random_word(rng, g, 12);
    LaurentPoly sum;
    for (int j = 0; j < g; ++j) sum += fox_derivative(w, j, phi) * (t(static_cast<int>(exps[static_cast<std::size_t>(j)])) - 1);
    CHECK(sum == phi.image(w) - 1);
  }
}

TEST_CASE("trefoil") {
  const auto p = trefoil_presentation();
  const auto phi = solve_abelianization(p);
  CHECK(phi.exponents() == std::vector<Integer>{1, 1});
  CHECK(equal_up_to_units(alexander_from_presentation(p), t(2) - t() + 1));
  check_all_columns(p, phi, t(2) - t() + 1);
  CHECK(unknot_certificate(p, phi) == UnknotVerdict::NotUnknot);
  CHECK(to_string(UnknotVerdict::NotUnknot) == "NotUnknot");
}

TEST_CASE("unknot group") {
  const auto p = GroupPresentation::parse("<x | >");
  CHECK(alexander_from_presentation(p) == 1);
  CHECK(unknot_certificate(p, AbelianizationMap({1})) == UnknotVerdict::Inconclusive);
}

TEST_CASE("Lemma presentations p = 1..5") {
  for (int p = 1; p <= 5; ++p) {
    const LaurentPoly expected = t(p) - 1 + t(-p);
    const auto rep = lorenz_repeller_presentation(p);
    const auto phi = solve_abelianization(rep);
    CHECK(phi.exponents() == std::vector<Integer>{1, -p});
    CHECK(is_symmetric(alexander_from_presentation(rep, phi)));
    check_all_columns(rep, phi, expected);
    CHECK(unknot_certificate(rep, phi) == UnknotVerdict::NotUnknot);

    const auto band = lorenz_band_presentation(p);
    const auto phi_band = solve_abelianization(band);
    CHECK(phi_band.exponents() == std::vector<Integer>{1, p});
    check_all_columns(band, phi_band, expected);
  }
}

TEST_CASE("torus knot groups agree with the closed formula") {
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto g = GroupPresentation::parse("<x, y | x^" + std::to_string(p) + " = y^" + std::to_string(q) + ">");
      const auto phi = solve_abelianization(g);
      CHECK(phi.exponents() == std::vector<Integer>{q, p});
      const auto delta = alexander_from_presentation(g, phi);
      CHECK(is_symmetric(delta));
      CHECK(equal_up_to_units(delta, torus_knot_alexander(p, q)));
      check_all_columns(g, phi, delta);
    }
}

TEST_CASE("abelianization errors") {
  CHECK_THROWS_AS(solve_abelianization(GroupPresentation::parse("<x | x^2>")), std::domain_error);
  CHECK_THROWS_AS(solve_abelianization(GroupPresentation::parse("<x, y | >")), std::domain_error);
  CHECK_THROWS_AS(solve_abelianization(GroupPresentation::parse("<x, y | x^2 y^-2>")), std::domain_error);
  const auto p = trefoil_presentation();
  CHECK_THROWS_AS(check_abelianization(p, AbelianizationMap({1, 2})), std::domain_error);
  CHECK_THROWS_AS(check_abelianization(p, AbelianizationMap({1})), std::domain_error);
  CHECK_THROWS_AS(alexander_from_presentation(GroupPresentation::parse("<x, y | x y, y x>")), std::domain_error);
}
