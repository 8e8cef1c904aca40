#include "smale/franks.hpp"

#include <stdexcept>

namespace smale {

LinkingMatrix::LinkingMatrix(StructureMatrix signs, IntMatrix exponents)
    : signs_(std::move(signs)), exponents_(std::move(exponents)) {
  if (exponents_.rows() != signs_.size() || exponents_.cols() != signs_.size())
    throw std::invalid_argument("linking matrix exponents must match the structure matrix size");
  for (Eigen::Index i = 0; i < exponents_.rows(); ++i)
    for (Eigen::Index j = 0; j < exponents_.cols(); ++j) {
      if (signs_.entries()(i, j) == 0) exponents_(i, j) = 0;
      if (exponents_(i, j) > std::numeric_limits<LaurentPoly::Exponent>::max() ||
          exponents_(i, j) < std::numeric_limits<LaurentPoly::Exponent>::min())
        throw std::invalid_argument("linking exponent out of range");
    }
}

LinkingMatrix LinkingMatrix::unlinked(const StructureMatrix& signs) {
  return LinkingMatrix(signs, IntMatrix::Zero(signs.size(), signs.size()));
}

LaurentMatrix LinkingMatrix::to_laurent() const {
  LaurentMatrix out(size(), size());
  for (Eigen::Index i = 0; i < size(); ++i)
    for (Eigen::Index j = 0; j < size(); ++j)
      out(i, j) = LaurentPoly::monomial(signs_.entries()(i, j), static_cast<LaurentPoly::Exponent>(exponents_(i, j)));
  return out;
}

LinkingMatrix LinkingMatrix::transposed() const { return LinkingMatrix(signs_.transposed(), exponents_.transpose()); }

LinkingMatrix build_lorenz_linking_matrix(int q) {
  IntMatrix exponents(2, 2);
  exponents << q, q, -q, -q;
  return LinkingMatrix(StructureMatrix::lorenz(), exponents);
}

SaddleData::SaddleData(StructureMatrix structure, LinkingMatrix attractor_link, LinkingMatrix repeller_link)
    : structure_(std::move(structure)),
      attractor_link_(std::move(attractor_link)),
      repeller_link_(std::move(repeller_link)) {
  if (attractor_link_.signs().entries() != structure_.entries())
    throw std::invalid_argument("attractor linking matrix sign pattern differs from the structure matrix");
  if (repeller_link_.signs().entries() != structure_.entries())
    throw std::invalid_argument("repeller linking matrix sign pattern differs from the structure matrix");
}

SaddleData SaddleData::lorenz(int q_attractor, int q_repeller) {
  return SaddleData(StructureMatrix::lorenz(), build_lorenz_linking_matrix(q_attractor),
                    build_lorenz_linking_matrix(q_repeller));
}

SaddleData SaddleData::reversed() const {
  return SaddleData(structure_.transposed(), repeller_link_.transposed(), attractor_link_.transposed());
}

Integer structure_determinant(const StructureMatrix& s) { return determinant(identity_minus(s.entries())); }

Integer linking_attractor_repeller(const std::vector<StructureMatrix>& saddles) {
  Integer product = 1;
  for (const auto& s : saddles) product = checked_mul(product, checked_abs(structure_determinant(s)));
  return product;
}

Integer linking_attractor_repeller(const std::vector<SaddleData>& saddles) {
  std::vector<StructureMatrix> structures;
  structures.reserve(saddles.size());
  for (const auto& s : saddles) structures.push_back(s.structure());
  return linking_attractor_repeller(structures);
}

LaurentPoly alexander_determinant(const LinkingMatrix& l) { return determinant(identity_minus(l.to_laurent())); }

LaurentPoly alexander_from_linking_matrix(const LinkingMatrix& l) { return normalize(alexander_determinant(l)); }

void check_simple_linking_matrix(const LinkingMatrix& l) {
  const LaurentPoly d = alexander_determinant(l);
  if (!is_symmetric(d))
    throw std::domain_error("det(I - L) = " + d.to_string() + " is not symmetric, so it is not an Alexander polynomial");
}

}  // namespace smale
