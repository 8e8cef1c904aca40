#include <limits>
#include <random>

#include "doctest.h"
#include "smale/matrix.hpp"
#include "support.hpp"

using smale::IntMatrix;
using smale::LaurentMatrix;
using smale::LaurentPoly;

TEST_CASE("determinant examples") {
  IntMatrix lorenz(2, 2);
  lorenz << 1, 1, 1, 1;
  CHECK(smale::determinant(smale::identity_minus(lorenz)) == -1);
  CHECK(smale::determinant(smale::identity_minus(IntMatrix::Zero(2, 2))) == 1);
  CHECK(smale::determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(smale::determinant(IntMatrix(2, 3)), std::invalid_argument);

  LaurentMatrix l(2, 2);
  l << LaurentPoly::t(1), LaurentPoly::t(1), LaurentPoly::t(-1), LaurentPoly::t(-1);
  CHECK(smale::determinant(smale::identity_minus(l)) == 1 - LaurentPoly::t(1) - LaurentPoly::t(-1));
}

TEST_CASE("pivoting handles zero leading entries") {
  IntMatrix m(3, 3);
  m << 0, 1, 2, 3, 0, 1, 4, 5, 0;
  CHECK(smale::determinant(m) == oracle::permutation_determinant(support::to_rows(m)));
  IntMatrix singular(3, 3);
  singular << 0, 1, 2, 0, 3, 4, 0, 5, 6;
  CHECK(smale::determinant(singular) == 0);
}

TEST_CASE("integer determinant matches the permutation sum") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> size(1, 6), entry(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    const int n = size(rng);
    IntMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = entry(rng) * (entry(rng) > 0 ? 1 : 0);
    CHECK(smale::determinant(m) == oracle::permutation_determinant(support::to_rows(m)));
  }
}

TEST_CASE("Laurent determinant matches the permutation sum") {
  // Matrices up to 4x4, entries c*t^e with c in {-1,0,1}, e in [-2,2].
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> size(1, 4), coeff(-1, 1), expo(-2, 2);
  for (int i = 0; i < 1500; ++i) {
    const int n = size(rng);
    LaurentMatrix m(n, n);
    std::vector<std::vector<oracle::Sparse>> rows(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        m(r, c) = LaurentPoly::monomial(coeff(rng), expo(rng));
        rows[static_cast<std::size_t>(r)].push_back(support::to_sparse(m(r, c)));
      }
    CHECK(support::to_sparse(smale::determinant(m)) == oracle::permutation_determinant(rows));
  }
}

TEST_CASE("checked product and identity_minus") {
  IntMatrix a(2, 2);
  a << 1, 2, 3, 4;
  CHECK(smale::multiply(a, a) == a * a);
  CHECK(smale::identity_minus(a) == IntMatrix::Identity(2, 2) - a);
  IntMatrix big(1, 1);
  big << std::numeric_limits<smale::Integer>::max();
  CHECK_THROWS_AS(smale::multiply(big, big), std::overflow_error);
  CHECK_THROWS_AS(smale::multiply(IntMatrix(2, 3), IntMatrix(2, 3)), std::invalid_argument);
}
