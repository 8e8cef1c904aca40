#include "doctest.h"
#include "smale/lorenz_template.hpp"
#include "support.hpp"

using namespace smale;

namespace {

OrbitWord w(const char* s) { return OrbitWord::parse(s); }

std::vector<std::string> order(std::initializer_list<const char*> orbits) {
  std::vector<OrbitWord> ws;
  for (const char* s : orbits) ws.push_back(w(s));
  std::vector<std::string> out;
  for (const auto& bp : branch_line_order(ws)) out.push_back(bp.to_string());
  return out;
}

std::vector<OrbitWord> orbits_up_to(int n) {
  std::vector<OrbitWord> all;
  for (int k = 1; k <= n; ++k)
    for (auto& o : enumerate_orbits(IncidenceMatrix::lorenz(), k)) all.push_back(o);
  return all;
}

}  // namespace

TEST_CASE("branch line order examples") {
  CHECK(order({"x", "y"}) == std::vector<std::string>{"x", "y"});
  CHECK(order({"xy", "xxy"}) == std::vector<std::string>{"xxy", "xyx", "xy", "yxx", "yx"});
  CHECK(order({"xxy"}) == std::vector<std::string>{"xxy", "xyx", "yxx"});
  CHECK_THROWS_AS(order({"xy", "yx"}), std::invalid_argument);
}

TEST_CASE("linking number examples") {
  CHECK(linking_number(w("x"), w("y")) == 0);
  CHECK(linking_number(w("xy"), w("xxy")) == 1);
  CHECK(linking_number(w("x"), w("xy")) == 0);
  CHECK_THROWS_AS(linking_number(w("xy"), w("xy")), std::invalid_argument);
  CHECK(self_crossings(w("x")) == 0);
  CHECK(self_crossings(w("xy")) == 1);
  CHECK(self_crossings(w("xxy")) == 2);
}

TEST_CASE("order reversal equals the planar diagram oracle") {
  const auto all = orbits_up_to(6);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(self_crossings(all[i]) == oracle::planar_self_crossings(all[i].letters()));
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Integer lk = linking_number(all[i], all[j]);
      CHECK(lk == oracle::planar_linking_number(all[i].letters(), all[j].letters()));
      CHECK(lk == linking_number(all[j], all[i]));
      CHECK(lk >= 0);
    }
  }
}

TEST_CASE("fixed orbits are unlinked from everything with one letter") {
  // x and y each link nothing: their strands never leave one band.
  for (const auto& o : orbits_up_to(7)) {
    if (o.length() > 1) {
      CHECK(linking_number(w("x"), o) == 0);
      CHECK(linking_number(w("y"), o) == 0);
    }
  }
}

TEST_CASE("embeddings") {
  CHECK(linking_number(LorenzEmbedding::standard(true), w("xy"), w("xxy")) == 1);
  CHECK_THROWS_AS(linking_number(LorenzEmbedding::twisted(1), w("x"), w("y")), std::domain_error);
  CHECK_THROWS_AS(linking_number(LorenzEmbedding::torus_cable(2, 3), w("x"), w("y")), std::domain_error);
  CHECK_THROWS_AS(LorenzEmbedding::torus_cable(2, 4), std::invalid_argument);
  const auto cable = std::get<TorusCableEmbedding>(LorenzEmbedding::torus_cable(2, 3).variant());
  CHECK(cable.twist() == 4);
  CHECK(LorenzEmbedding::standard().is_standard());
  CHECK_FALSE(LorenzEmbedding::twisted(0).is_standard());
}
