#pragma once

// Conversions between library types and the oracle representations, plus
// seeded random generators shared by the property tests.

#include <random>

#include "oracles.hpp"
#include "smale/laurent.hpp"
#include "smale/matrix.hpp"

namespace support {

inline oracle::Sparse to_sparse(const smale::LaurentPoly& p) {
  oracle::Sparse s;
  for (auto [e, c] : p.terms()) s[e] = c;
  return s;
}

inline smale::LaurentPoly from_sparse(const oracle::Sparse& s) {
  smale::LaurentPoly p;
  for (auto [e, c] : s) p += smale::LaurentPoly::monomial(c, e);
  return p;
}

inline smale::LaurentPoly random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3, int max_coeff = 3) {
  std::uniform_int_distribution<int> n(0, max_terms), e(-max_exp, max_exp), c(-max_coeff, max_coeff);
  smale::LaurentPoly p;
  for (int i = n(rng); i > 0; --i) p += smale::LaurentPoly::monomial(c(rng), e(rng));
  return p;
}

inline std::vector<std::vector<oracle::Int>> to_rows(const smale::IntMatrix& m) {
  std::vector<std::vector<oracle::Int>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  return rows;
}

}  // namespace support
