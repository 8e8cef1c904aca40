#pragma once

#include <optional>
#include <string>
#include <variant>

#include "smale/knot.hpp"
#include "smale/lorenz_template.hpp"

namespace smale {

/// Link type of the attracting and repelling orbits.
struct ArLink {
  enum class Kind { Hopf, TrefoilMeridian, Other };
  Kind kind = Kind::Hopf;
  std::string label;  // only for Other

  static ArLink hopf() { return {Kind::Hopf, {}}; }
  static ArLink trefoil_meridian() { return {Kind::TrefoilMeridian, {}}; }
  static ArLink other(std::string label) { return {Kind::Other, std::move(label)}; }
  std::string to_string() const;
  friend bool operator==(const ArLink&, const ArLink&) = default;
};

enum class Band { X, Y };
std::string to_string(Band b);

/// A candidate embedding of the Lorenz saddle set: the knot types and
/// framings (full twists) of the two band cores x and y, whether they link,
/// and the a ∪ r link type. Any combination may be proposed.
struct ConfigProposal {
  KnotType x_core;
  KnotType y_core;
  int x_twist = 0;
  int y_twist = 0;
  bool bands_linked = false;
  ArLink ar_link = ArLink::hopf();
  /// Standard case only: whether x and y bound an annulus in the boundary
  /// of the attractor's neighbourhood.
  bool concentric = false;
};

struct HopfStandard {
  bool concentric = false;
  friend bool operator==(const HopfStandard&, const HopfStandard&) = default;
};
struct HopfTwisted {
  int full_twists = 0;
  Band band = Band::Y;
  friend bool operator==(const HopfTwisted&, const HopfTwisted&) = default;
};
struct HopfTorusCable {
  TorusFactor knot;
  Band band = Band::Y;
  int twist() const { return knot.left_handed ? -(knot.p + knot.q - 1) : knot.p + knot.q - 1; }
  friend bool operator==(const HopfTorusCable&, const HopfTorusCable&) = default;
};
struct TrefoilMeridian {
  friend bool operator==(const TrefoilMeridian&, const TrefoilMeridian&) = default;
};

/// A realizable Lorenz-Smale configuration.
class LorenzSmaleConfig {
 public:
  using Variant = std::variant<HopfStandard, HopfTwisted, HopfTorusCable, TrefoilMeridian>;

  const Variant& variant() const noexcept { return variant_; }
  ArLink ar_link() const;
  /// Embedding of the template itself (the unknotted band of a torus cable
  /// and both bands of the trefoil case are standard).
  LorenzEmbedding embedding() const;
  /// E.g. "Hopf-TorusCable(2,3)".
  std::string name() const;

  friend bool operator==(const LorenzSmaleConfig&, const LorenzSmaleConfig&) = default;

 private:
  friend class Classifier;
  explicit LorenzSmaleConfig(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

enum class RejectionClause {
  ArLinkType,          // a ∪ r is neither Hopf nor trefoil-and-meridian
  BandsLinked,         // the band cores link
  BothKnotted,         // the other band must be unknotted
  KnottedNotTorus,     // a knotted band must be a torus knot
  TwistMismatch,       // (p,q) band twist must be p+q-1
  OtherBandTwisted,    // the other band must be untwisted
  TrefoilNotStandard,  // trefoil case needs both bands standard
  NotStandard,         // fixed-point variant admits only the standard template
};

struct Rejection {
  RejectionClause clause;
  std::string reason;
};

using Verdict = std::variant<LorenzSmaleConfig, Rejection>;

/// Alexander polynomials and |lk(a,r)| of a validated configuration.
struct ConfigInvariants {
  ArLink ar_link;
  Integer lk_abs = 1;
  LaurentPoly alexander_attractor;
  LaurentPoly alexander_repeller;
};

/// Decision procedure for Lorenz-Smale flows in S^3: the only realizable
/// configurations are a Hopf link a ∪ r with a standard, twisted or
/// torus-knotted band, or a trefoil attractor with meridian repeller and a
/// standard template.
class Classifier {
 public:
  static Verdict validate(const ConfigProposal& p);
  /// Attracting and repelling fixed points instead of closed orbits: only
  /// the standardly embedded template survives.
  static Verdict fixed_point_variant(const ConfigProposal& p);
};

inline Verdict validate(const ConfigProposal& p) { return Classifier::validate(p); }
inline Verdict fixed_point_variant(const ConfigProposal& p) { return Classifier::fixed_point_variant(p); }

ConfigInvariants invariants_of(const LorenzSmaleConfig& c);

}  // namespace smale
