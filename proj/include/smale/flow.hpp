#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "smale/franks.hpp"
#include "smale/knot.hpp"

namespace smale {

/// A saddle whose Markov partition is not determined by the construction
/// that produced it. Only the quantities that enter Franks' formulas are
/// kept: |det(I - S)| and det(I - L) for each orbit, the latter up to units
/// and absent when no formula is known.
struct OpaqueSaddle {
  Integer structure_det_abs = 1;
  std::optional<LaurentPoly> attractor_alexander;
  std::optional<LaurentPoly> repeller_alexander;

  OpaqueSaddle reversed() const { return {structure_det_abs, repeller_alexander, attractor_alexander}; }
  friend bool operator==(const OpaqueSaddle&, const OpaqueSaddle&) = default;
};

using SaddleRecord = std::variant<SaddleData, OpaqueSaddle>;

/// |det(I - S)| of one saddle.
Integer linking_factor(const SaddleRecord& s);
/// det(I - L_a) / det(I - L_r) of one saddle, normalized; nullopt if unknown.
std::optional<LaurentPoly> attractor_factor(const SaddleRecord& s);
std::optional<LaurentPoly> repeller_factor(const SaddleRecord& s);
SaddleRecord reversed(const SaddleRecord& s);

/// Nonsingular Smale flow on S^3 with one attracting and one repelling
/// closed orbit, described by knot types, the gluing hypotheses the
/// composition moves need, and the saddle sets.
struct FlowDescriptor {
  KnotType attractor;
  KnotType repeller;
  bool repeller_is_meridian_of_attractor = false;
  /// The repeller bounds a disk whose interior meets the chain-recurrent
  /// set in a single point.
  bool repeller_disk_condition = false;
  /// Attractor and repeller sit in solid tori whose cores are meridians of
  /// each other.
  bool mutual_meridian_tori = false;
  std::vector<SaddleRecord> saddles;
  Integer lk_ar_abs = 1;

  bool is_simple() const noexcept { return saddles.size() == 1; }
  friend bool operator==(const FlowDescriptor&, const FlowDescriptor&) = default;
};

/// Throws std::domain_error if lk_ar_abs differs from prod |det(I - S_i)|, a
/// meridian repeller has |lk| != 1, or a simple flow's det(I - L_a) is not
/// symmetric.
void check_flow(const FlowDescriptor& f);

/// A composition hypothesis that an input flow does not satisfy.
class HypothesisError : public std::domain_error {
 public:
  HypothesisError(int clause, int flow, const std::string& what)
      : std::domain_error("hypothesis (" + std::to_string(clause) + ") fails for flow " + std::to_string(flow) + ": " +
                          what),
        clause_(clause),
        flow_(flow) {}
  int clause() const noexcept { return clause_; }
  int flow() const noexcept { return flow_; }

 private:
  int clause_;
  int flow_;
};

/// Glues two flows along their repellers' disks: the attractor becomes
/// k1 # k2 with an unknotted meridian repeller and both saddle lists are
/// kept (in canonical order, so the move is commutative). Each input needs
/// (2) an unknotted meridian repeller and (3) the disk condition.
FlowDescriptor compose_sum(const FlowDescriptor& f1, const FlowDescriptor& f2);

/// Attractor k1, repeller k2, linking number one. The second flow enters
/// time-reversed, so its saddles swap attractor and repeller data. Needs
/// hypothesis (2) only.
FlowDescriptor compose_split(const FlowDescriptor& f1, const FlowDescriptor& f2);

/// Simple flow with attractor k and a meridian repeller that links no
/// saddle orbit. For the unknot and the trefoil the saddle is an explicit
/// Lorenz template; for other knots it is opaque, carrying Alexander(k).
FlowDescriptor realize_any_knot(const KnotType& k);

/// prod_i det(I - L_a,i), normalized; std::domain_error if a factor is unknown.
LaurentPoly alexander_of_flow(const FlowDescriptor& f);
/// prod_i det(I - L_r,i), normalized.
LaurentPoly repeller_alexander_of_flow(const FlowDescriptor& f);

}  // namespace smale
