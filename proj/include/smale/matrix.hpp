#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

#include "smale/checked.hpp"
#include "smale/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<smale::LaurentPoly> : GenericNumTraits<smale::LaurentPoly> {
  using Real = smale::LaurentPoly;
  using NonInteger = smale::LaurentPoly;
  using Literal = smale::LaurentPoly;
  using Nested = smale::LaurentPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace smale {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using LaurentMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

// Ring operations used by the generic algorithms below. The Integer
// overloads are overflow-checked; LaurentPoly arithmetic already is.
inline Integer ring_add(Integer a, Integer b) { return checked_add(a, b); }
inline Integer ring_sub(Integer a, Integer b) { return checked_sub(a, b); }
inline Integer ring_mul(Integer a, Integer b) { return checked_mul(a, b); }
inline Integer ring_neg(Integer a) { return checked_neg(a); }
inline LaurentPoly ring_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly ring_sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
inline LaurentPoly ring_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly ring_neg(const LaurentPoly& a) { return -a; }

/// Determinant over an integral domain by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so each division is
/// exact; Scalar needs is_zero, exact_divide and the ring_* operations.
/// The 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = input;
  Scalar previous_pivot(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && is_zero(a(swap_row, k))) ++swap_row;
      if (swap_row == n) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = exact_divide(ring_sub(ring_mul(a(i, j), a(k, k)), ring_mul(a(i, k), a(k, j))), previous_pivot);
      }
      a(i, k) = Scalar(0);
    }
    previous_pivot = a(k, k);
  }
  if (n == 0) return Scalar(1);
  return negate ? ring_neg(a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// I - M for a square matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> identity_minus(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("I - M needs a square matrix");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = ring_sub(Scalar(i == j ? 1 : 0), m(i, j));
  return out;
}

/// Overflow-checked matrix product.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar sum(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) sum = ring_add(sum, ring_mul(a(i, k), b(k, j)));
      out(i, j) = std::move(sum);
    }
  return out;
}

/// Lifts an integer matrix to constant Laurent polynomials.
inline LaurentMatrix to_laurent(const IntMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = LaurentPoly(m(i, j));
  return out;
}

}  // namespace smale
