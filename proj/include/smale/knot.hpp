#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smale/laurent.hpp"

namespace smale {

/// Nontrivial torus knot, stored with 2 <= p < q coprime. Mirror images
/// share every polynomial invariant computed here; the flag only keeps
/// descriptors distinguishable.
struct TorusFactor {
  int p = 2;
  int q = 3;
  bool left_handed = false;
  auto operator<=>(const TorusFactor&) const = default;
};

/// Prime knot with no formula attached (e.g. a cable or the figure eight).
struct NamedFactor {
  std::string label;
  auto operator<=>(const NamedFactor&) const = default;
};

using PrimeFactor = std::variant<TorusFactor, NamedFactor>;

/// Knot type as a multiset of prime factors under connected sum, kept
/// sorted; the empty multiset is the unknot.
class KnotType {
 public:
  KnotType() = default;

  static KnotType unknot() { return {}; }
  /// Torus knot T(p,q). |p| = 1 or |q| = 1 (and (0, ±1)) give the unknot;
  /// non-coprime pairs are rejected. Handedness is the sign of p*q.
  static KnotType torus(int p, int q);
  static KnotType named(std::string label);
  /// (p,q) cable of `companion`, carried as an opaque named prime.
  static KnotType cable(int p, int q, const KnotType& companion);
  /// `unknot`, `torus(p,q)`, `named(label)`, `cable(p,q,of=...)`, joined by `#`.
  static KnotType parse(std::string_view text);

  const std::vector<PrimeFactor>& factors() const noexcept { return factors_; }
  bool is_unknot() const noexcept { return factors_.empty(); }
  /// The torus factor when this knot is a single torus knot.
  std::optional<TorusFactor> as_torus() const;
  KnotType mirror() const;
  std::string to_string() const;

  friend bool operator==(const KnotType&, const KnotType&) = default;
  friend KnotType connected_sum(const KnotType& a, const KnotType& b);

 private:
  std::vector<PrimeFactor> factors_;
};

KnotType connected_sum(const KnotType& a, const KnotType& b);

/// Alexander polynomial of T(p,q) for p, q >= 1 coprime:
/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), by exact division.
LaurentPoly torus_knot_alexander(int p, int q);

/// Product of the factors' polynomials, normalized. std::domain_error when a
/// named factor has no formula.
LaurentPoly alexander_of(const KnotType& k);

std::string to_string(const PrimeFactor& f);

}  // namespace smale
