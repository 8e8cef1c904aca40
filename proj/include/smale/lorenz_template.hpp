#pragma once

#include <string>
#include <variant>
#include <vector>

#include "smale/symbolic_dynamics.hpp"

namespace smale {

/// One point of a periodic orbit on the branch line: the itinerary of
/// `orbit` read from letter `phase` onward, repeated forever.
struct BranchPoint {
  OrbitWord orbit;
  std::size_t phase = 0;

  int symbol(std::size_t i) const { return orbit[(phase + i) % orbit.length()]; }
  /// The rotated period, e.g. "xyx" for phase 1 of xxy.
  std::string to_string() const;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// Lexicographic comparison (x < y) of the two infinite itineraries.
/// Comparing len(a)+len(b) symbols decides any pair of distinct periodic
/// sequences; returns -1, 0 or 1.
int compare_itineraries(const BranchPoint& a, const BranchPoint& b);

struct StandardEmbedding {
  bool concentric = false;
  friend bool operator==(const StandardEmbedding&, const StandardEmbedding&) = default;
};

/// One band carries `full_twists` full twists; the template is otherwise standard.
struct TwistedEmbedding {
  int full_twists = 0;
  friend bool operator==(const TwistedEmbedding&, const TwistedEmbedding&) = default;
};

/// One band's core is a (p,q) torus knot; its framing is forced to p+q-1.
struct TorusCableEmbedding {
  int p = 2;
  int q = 3;
  int twist() const { return p + q - 1; }
  friend bool operator==(const TorusCableEmbedding&, const TorusCableEmbedding&) = default;
};

class LorenzEmbedding {
 public:
  using Variant = std::variant<StandardEmbedding, TwistedEmbedding, TorusCableEmbedding>;

  static LorenzEmbedding standard(bool concentric = false) { return LorenzEmbedding(StandardEmbedding{concentric}); }
  static LorenzEmbedding twisted(int full_twists) { return LorenzEmbedding(TwistedEmbedding{full_twists}); }
  /// std::invalid_argument unless gcd(|p|,|q|) = 1.
  static LorenzEmbedding torus_cable(int p, int q);

  const Variant& variant() const noexcept { return variant_; }
  bool is_standard() const noexcept { return std::holds_alternative<StandardEmbedding>(variant_); }

  friend bool operator==(const LorenzEmbedding&, const LorenzEmbedding&) = default;

 private:
  explicit LorenzEmbedding(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// Every shift of every orbit, in left-to-right order along the branch line
/// of the Lorenz template. Orbits must be pairwise distinct words over {x, y}.
std::vector<BranchPoint> branch_line_order(const std::vector<OrbitWord>& orbits);

/// Linking number of two distinct orbits on the standardly embedded Lorenz
/// template. All crossings of the template's braid are positive, so this is
/// half the number of strand pairs whose branch-line order flips under one
/// return.
Integer linking_number(const OrbitWord& w1, const OrbitWord& w2);

/// As above; std::domain_error for embeddings other than Standard, where no
/// orbit-level crossing rule is available.
Integer linking_number(const LorenzEmbedding& embedding, const OrbitWord& w1, const OrbitWord& w2);

/// Crossings of an orbit's strands with each other in the template diagram.
Integer self_crossings(const OrbitWord& w);

}  // namespace smale
