#include "classifier_grid.hpp"
#include "doctest.h"
#include "smale/classifier.hpp"

using namespace smale;

namespace {

ConfigProposal proposal(KnotType x, KnotType y, int xt, int yt, bool linked = false, ArLink link = ArLink::hopf()) {
  ConfigProposal p;
  p.x_core = std::move(x);
  p.y_core = std::move(y);
  p.x_twist = xt;
  p.y_twist = yt;
  p.bands_linked = linked;
  p.ar_link = std::move(link);
  return p;
}

std::string verdict(const Verdict& v) {
  if (const auto* c = std::get_if<LorenzSmaleConfig>(&v)) return c->name();
  return "rejected: " + std::get<Rejection>(v).reason;
}

const KnotType unknot = KnotType::unknot();
const KnotType t23 = KnotType::torus(2, 3);
LaurentPoly t(int e = 1) { return LaurentPoly::t(e); }

}  // namespace

TEST_CASE("validate examples") {
  CHECK(verdict(validate(proposal(unknot, t23, 0, 4))) == "Hopf-TorusCable(2,3)");
  CHECK(verdict(validate(proposal(t23, t23, 4, 4))) == "rejected: other band must be unknotted");
  CHECK(verdict(validate(proposal(unknot, unknot, 0, 0))) == "Hopf-Standard(non-concentric)");
  auto concentric = proposal(unknot, unknot, 0, 0);
  concentric.concentric = true;
  CHECK(verdict(validate(concentric)) == "Hopf-Standard(concentric)");
  CHECK(verdict(validate(proposal(unknot, unknot, 0, -3))) == "Hopf-Twisted(-3)");
  CHECK(verdict(validate(proposal(unknot, unknot, 0, 0, false, ArLink::trefoil_meridian()))) == "TrefoilMeridian");
  CHECK(verdict(validate(proposal(unknot, unknot, 0, 0, true))) == "rejected: bands must be unlinked");
  CHECK(verdict(validate(proposal(unknot, unknot, 0, 0, false, ArLink::other("L6a1")))) ==
        "rejected: a-r link is not Hopf or trefoil-and-meridian");
  CHECK(verdict(validate(proposal(unknot, t23, 0, 3))).rfind("rejected", 0) == 0);
  CHECK(verdict(validate(proposal(unknot, t23, 0, 5))).rfind("rejected", 0) == 0);
  CHECK(verdict(validate(proposal(unknot, t23, 1, 4))) == "rejected: other band must be untwisted");
  CHECK(verdict(validate(proposal(KnotType::torus(2, -3), unknot, -4, 0))) == "Hopf-TorusCable(2,-3)");
  CHECK(verdict(validate(proposal(KnotType::named("figure-eight"), unknot, 0, 0))).rfind("rejected", 0) == 0);
}

TEST_CASE("unknotted (1,q) bands are twisted bands") {
  CHECK(verdict(validate(proposal(KnotType::torus(1, 5), unknot, 5, 0))) == "Hopf-Twisted(5)");
  CHECK(verdict(validate(proposal(unknot, KnotType::parse("torus(7,1)"), 0, -7))) == "Hopf-Twisted(-7)");
}

TEST_CASE("rejection clauses") {
  const auto clause = [](const Verdict& v) { return std::get<Rejection>(v).clause; };
  CHECK(clause(validate(proposal(t23, t23, 4, 4))) == RejectionClause::BothKnotted);
  CHECK(clause(validate(proposal(unknot, t23, 0, 5))) == RejectionClause::TwistMismatch);
  CHECK(clause(validate(proposal(unknot, unknot, 1, 1))) == RejectionClause::OtherBandTwisted);
  CHECK(clause(validate(proposal(unknot, t23, 0, 4, false, ArLink::trefoil_meridian()))) ==
        RejectionClause::TrefoilNotStandard);
  CHECK(clause(validate(proposal(KnotType::named("figure-eight"), unknot, 0, 0))) == RejectionClause::KnottedNotTorus);
}

TEST_CASE("grid: accepts exactly the theorem's families") {
  const auto families = grid::realizable_families();
  std::size_t accepted = 0;
  grid::for_each_proposal([&](const ConfigProposal& p, const grid::Key& key) {
    const Verdict v = validate(p);
    const auto it = families.find(key);
    if (it == families.end()) {
      if (!std::holds_alternative<Rejection>(v)) FAIL_CHECK("unexpected acceptance: " << verdict(v));
    } else {
      ++accepted;
      if (verdict(v) != it->second) FAIL_CHECK("expected " << it->second << ", got " << verdict(v));
    }
  });
  CHECK(accepted == families.size());
}

TEST_CASE("twist perturbations are rejected") {
  for (const auto& c : grid::torus_cores()) {
    const int twist = (c.left ? -1 : 1) * (c.p + c.q - 1);
    const KnotType k = grid::knot_of(c);
    CHECK(std::holds_alternative<LorenzSmaleConfig>(validate(proposal(k, unknot, twist, 0))));
    CHECK(std::holds_alternative<Rejection>(validate(proposal(k, unknot, twist + 1, 0))));
    CHECK(std::holds_alternative<Rejection>(validate(proposal(k, unknot, twist - 1, 0))));
    CHECK(std::holds_alternative<Rejection>(validate(proposal(unknot, k, 0, -twist))));
  }
}

TEST_CASE("fixed-point variant") {
  CHECK(verdict(fixed_point_variant(proposal(unknot, unknot, 0, 0))) == "Hopf-Standard(non-concentric)");
  CHECK(std::holds_alternative<Rejection>(fixed_point_variant(proposal(unknot, unknot, 1, 0))));
  CHECK(std::holds_alternative<Rejection>(fixed_point_variant(proposal(unknot, t23, 0, 4))));
  CHECK(std::holds_alternative<Rejection>(fixed_point_variant(proposal(unknot, unknot, 0, 0, true))));
}

TEST_CASE("invariants") {
  const auto tm = std::get<LorenzSmaleConfig>(validate(proposal(unknot, unknot, 0, 0, false, ArLink::trefoil_meridian())));
  const auto inv = invariants_of(tm);
  CHECK(equal_up_to_units(inv.alexander_attractor, t() - 1 + t(-1)));
  CHECK(inv.alexander_repeller == 1);
  CHECK(inv.lk_abs == 1);
  CHECK(inv.ar_link == ArLink::trefoil_meridian());
  std::size_t seen = 0;
  const auto cores = grid::grid_cores();
  const auto links = grid::grid_links();
  for (const auto& [key, name] : grid::realizable_families()) {
    (void)name;
    const auto [x, y, xt, yt, linked, l] = key;
    ConfigProposal p = proposal(cores[static_cast<std::size_t>(x)], cores[static_cast<std::size_t>(y)], xt, yt, linked,
                                links[static_cast<std::size_t>(l)]);
    const auto c = std::get<LorenzSmaleConfig>(validate(p));
    const auto i = invariants_of(c);
    CHECK(i.lk_abs == 1);
    CHECK(is_symmetric(i.alexander_attractor));
    CHECK(is_symmetric(i.alexander_repeller));
    if (c.ar_link() == ArLink::hopf()) CHECK(i.alexander_attractor == 1);
    ++seen;
  }
  CHECK(seen > 40);
}

TEST_CASE("embedding of a configuration") {
  const auto c = std::get<LorenzSmaleConfig>(validate(proposal(unknot, t23, 0, 4)));
  CHECK(c.embedding() == LorenzEmbedding::torus_cable(2, 3));
  const auto s = std::get<LorenzSmaleConfig>(validate(proposal(unknot, unknot, 0, 0)));
  CHECK(s.embedding().is_standard());
}
