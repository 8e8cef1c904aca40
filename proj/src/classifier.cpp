#include "smale/classifier.hpp"

#include "smale/franks.hpp"

namespace smale {

std::string ArLink::to_string() const {
  switch (kind) {
    case Kind::Hopf: return "Hopf";
    case Kind::TrefoilMeridian: return "TrefoilMeridian";
    case Kind::Other: return "Other(" + label + ")";
  }
  return {};
}

std::string to_string(Band b) { return b == Band::X ? "x" : "y"; }

ArLink LorenzSmaleConfig::ar_link() const {
  return std::holds_alternative<TrefoilMeridian>(variant_) ? ArLink::trefoil_meridian() : ArLink::hopf();
}

LorenzEmbedding LorenzSmaleConfig::embedding() const {
  return std::visit(
      [](const auto& v) -> LorenzEmbedding {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HopfStandard>) return LorenzEmbedding::standard(v.concentric);
        else if constexpr (std::is_same_v<T, HopfTwisted>) return LorenzEmbedding::twisted(v.full_twists);
        else if constexpr (std::is_same_v<T, HopfTorusCable>)
          return LorenzEmbedding::torus_cable(v.knot.p, v.knot.left_handed ? -v.knot.q : v.knot.q);
        else return LorenzEmbedding::standard(false);
      },
      variant_);
}

std::string LorenzSmaleConfig::name() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HopfStandard>)
          return std::string("Hopf-Standard(") + (v.concentric ? "concentric" : "non-concentric") + ")";
        else if constexpr (std::is_same_v<T, HopfTwisted>)
          return "Hopf-Twisted(" + std::to_string(v.full_twists) + ")";
        else if constexpr (std::is_same_v<T, HopfTorusCable>)
          return "Hopf-TorusCable(" + std::to_string(v.knot.p) + "," + (v.knot.left_handed ? "-" : "") +
                 std::to_string(v.knot.q) + ")";
        else return "TrefoilMeridian";
      },
      variant_);
}

namespace {

Rejection reject(RejectionClause clause, std::string reason) { return Rejection{clause, std::move(reason)}; }

}  // namespace

Verdict Classifier::validate(const ConfigProposal& p) {
  if (p.ar_link.kind == ArLink::Kind::Other)
    return reject(RejectionClause::ArLinkType, "a-r link is not Hopf or trefoil-and-meridian");
  if (p.bands_linked) return reject(RejectionClause::BandsLinked, "bands must be unlinked");

  const bool x_knotted = !p.x_core.is_unknot();
  const bool y_knotted = !p.y_core.is_unknot();

  if (p.ar_link.kind == ArLink::Kind::TrefoilMeridian) {
    if (x_knotted || y_knotted || p.x_twist != 0 || p.y_twist != 0)
      return reject(RejectionClause::TrefoilNotStandard,
                    "trefoil-and-meridian case needs both bands unknotted and untwisted");
    return LorenzSmaleConfig(TrefoilMeridian{});
  }

  if (x_knotted && y_knotted) return reject(RejectionClause::BothKnotted, "other band must be unknotted");

  if (!x_knotted && !y_knotted) {
    if (p.x_twist == 0 && p.y_twist == 0) return LorenzSmaleConfig(HopfStandard{p.concentric});
    if (p.x_twist != 0 && p.y_twist != 0) return reject(RejectionClause::OtherBandTwisted, "other band must be untwisted");
    const Band band = p.x_twist != 0 ? Band::X : Band::Y;
    return LorenzSmaleConfig(HopfTwisted{band == Band::X ? p.x_twist : p.y_twist, band});
  }

  const Band band = x_knotted ? Band::X : Band::Y;
  const KnotType& core = x_knotted ? p.x_core : p.y_core;
  const int twist = x_knotted ? p.x_twist : p.y_twist;
  const int other_twist = x_knotted ? p.y_twist : p.x_twist;
  const auto torus = core.as_torus();
  if (!torus)
    return reject(RejectionClause::KnottedNotTorus,
                  "knotted band must be a torus knot, got " + core.to_string());
  const HopfTorusCable cable{*torus, band};
  if (twist != cable.twist())
    return reject(RejectionClause::TwistMismatch, "twist of a " + core.to_string() + " band must be p+q-1 = " +
                                                      std::to_string(cable.twist()) + ", got " + std::to_string(twist));
  if (other_twist != 0) return reject(RejectionClause::OtherBandTwisted, "other band must be untwisted");
  return LorenzSmaleConfig(cable);
}

Verdict Classifier::fixed_point_variant(const ConfigProposal& p) {
  if (p.bands_linked || !p.x_core.is_unknot() || !p.y_core.is_unknot() || p.x_twist != 0 || p.y_twist != 0)
    return reject(RejectionClause::NotStandard,
                  "with fixed-point attractor and repeller only the standardly embedded template is possible");
  return LorenzSmaleConfig(HopfStandard{p.concentric});
}

ConfigInvariants invariants_of(const LorenzSmaleConfig& c) {
  // Linking data of the Lorenz saddle: the attractor is a trefoil (q = 1)
  // only in the trefoil-and-meridian case; the repeller is always unknotted.
  const int q_attractor = std::holds_alternative<TrefoilMeridian>(c.variant()) ? 1 : 0;
  const SaddleData saddle = SaddleData::lorenz(q_attractor, 0);
  ConfigInvariants out;
  out.ar_link = c.ar_link();
  out.lk_abs = linking_attractor_repeller(std::vector<SaddleData>{saddle});
  out.alexander_attractor = alexander_from_linking_matrix(saddle.attractor_link());
  out.alexander_repeller = alexander_from_linking_matrix(saddle.repeller_link());
  return out;
}

}  // namespace smale
