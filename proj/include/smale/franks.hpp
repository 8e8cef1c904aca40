#pragma once

#include <vector>

#include "smale/symbolic_dynamics.hpp"

namespace smale {

/// Structure matrix with each nonzero entry S_ij weighted by t^q_ij, where
/// q_ij is the linking number of the i->j connecting loop with a reference
/// closed orbit. Exponents under zero signs carry no meaning and are stored as 0.
class LinkingMatrix {
 public:
  LinkingMatrix(StructureMatrix signs, IntMatrix exponents);
  /// All exponents zero: the saddle does not link the reference orbit.
  static LinkingMatrix unlinked(const StructureMatrix& signs);

  const StructureMatrix& signs() const noexcept { return signs_; }
  const IntMatrix& exponents() const noexcept { return exponents_; }
  Eigen::Index size() const noexcept { return signs_.size(); }

  /// Entry (i,j) = S_ij t^q_ij.
  LaurentMatrix to_laurent() const;
  LinkingMatrix transposed() const;

  friend bool operator==(const LinkingMatrix& a, const LinkingMatrix& b) {
    return a.signs_.entries() == b.signs_.entries() && a.exponents_ == b.exponents_;
  }

 private:
  StructureMatrix signs_;
  IntMatrix exponents_;
};

/// [[t^q, t^q], [t^-q, t^-q]] over the Lorenz sign pattern. The two rows
/// carry opposite exponent signs; with equal signs det(I - L) would not be
/// symmetric and so could not be an Alexander polynomial.
LinkingMatrix build_lorenz_linking_matrix(int q);

/// Markov data for one basic saddle set together with its linking matrices
/// relative to the attracting and repelling orbits.
class SaddleData {
 public:
  /// Linking matrices must have the sign pattern of `structure`.
  SaddleData(StructureMatrix structure, LinkingMatrix attractor_link, LinkingMatrix repeller_link);
  /// Lorenz template saddle with the given attractor/repeller exponents.
  static SaddleData lorenz(int q_attractor, int q_repeller);

  IncidenceMatrix incidence() const { return structure_.incidence(); }
  const StructureMatrix& structure() const noexcept { return structure_; }
  const LinkingMatrix& attractor_link() const noexcept { return attractor_link_; }
  const LinkingMatrix& repeller_link() const noexcept { return repeller_link_; }

  /// The same saddle in the time-reversed flow: attractor and repeller swap
  /// roles and the return map is inverted, transposing every matrix.
  SaddleData reversed() const;

  friend bool operator==(const SaddleData& a, const SaddleData& b) {
    return a.attractor_link_ == b.attractor_link_ && a.repeller_link_ == b.repeller_link_;
  }

 private:
  StructureMatrix structure_;
  LinkingMatrix attractor_link_;
  LinkingMatrix repeller_link_;
};

/// det(I - S).
Integer structure_determinant(const StructureMatrix& s);

/// |lk(a, r)| = prod_i |det(I - S_i)| for a flow with one attracting and one
/// repelling closed orbit. The empty product is 1.
Integer linking_attractor_repeller(const std::vector<StructureMatrix>& saddles);
Integer linking_attractor_repeller(const std::vector<SaddleData>& saddles);

/// det(I - L) exactly as computed, without unit normalization.
LaurentPoly alexander_determinant(const LinkingMatrix& l);

/// Alexander polynomial of the reference orbit of a simple flow, normalized
/// (defined only up to ±t^n).
LaurentPoly alexander_from_linking_matrix(const LinkingMatrix& l);

/// std::domain_error when det(I - L) is not symmetric, i.e. the matrix
/// cannot come from a knotted orbit of a simple flow.
void check_simple_linking_matrix(const LinkingMatrix& l);

}  // namespace smale
