#include <random>

#include "doctest.h"
#include "edcrit/errors.hpp"
#include "edcrit/transfer.hpp"

using namespace edcrit;

namespace {

Matrix diag(std::initializer_list<double> v) {
  Vector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double a : v) x[i++] = a;
  return x.asDiagonal();
}

bool contains(const std::vector<Matrix>& ms, const Matrix& m, double tol = 1e-9) {
  for (const auto& a : ms)
    if ((a - m).norm() <= tol) return true;
  return false;
}

Vector flatten(const Matrix& x) {
  Vector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v[i * x.cols() + j] = x(i, j);
  return v;
}

}  // namespace

TEST_CASE("matrix_membership") {
  std::mt19937_64 rng(1);
  const Matrix u = random_orthogonal(3, rng);
  const Matrix v = random_orthogonal(3, rng);
  CHECK(matrix_membership(SymmetricSet::equal_abs(3, 2), u * diag({1.7, 1.7, 0}) * v.transpose()));
  CHECK_FALSE(matrix_membership(SymmetricSet::equal_abs(3, 2), u * diag({1.7, 1.6, 0}) * v.transpose()));
  const Vector a = random_gaussian(3, rng);
  const Vector b = random_gaussian(4, rng);
  CHECK(matrix_membership(SymmetricSet::rank_at_most(3, 1), a * b.transpose()));
  CHECK(matrix_membership(SymmetricSet::hyperbola(), diag({2, 0.5})));
  CHECK_THROWS_AS(matrix_membership(SymmetricSet::hyperbola(), diag({1, 2, 3})), InputError);
}

TEST_CASE("matrix_distance examples") {
  CHECK(matrix_distance(SymmetricSet::rank_at_most(2, 1), diag({3, 1})) == doctest::Approx(1.0));
  CHECK(matrix_distance(SymmetricSet::equal_abs(3, 2), diag({3, 2, 1})) == doctest::Approx(std::sqrt(1.5)));
  CHECK(matrix_distance(SymmetricSet::orbit(Vector::Ones(2)), diag({2, 0.5})) == doctest::Approx(std::sqrt(1.25)));
  CHECK_THROWS_AS(matrix_distance(SymmetricSet::fermat(2), Matrix::Zero(2, 3)), DegenerateDataError);
}

TEST_CASE("matrix_projection") {
  const auto r = matrix_projection(SymmetricSet::rank_at_most(2, 1), diag({3, 1}));
  REQUIRE(r.size() == 1);
  CHECK((r.points[0] - diag({3, 0})).norm() < 1e-12);
  CHECK_FALSE(r.non_exhaustive);
  CHECK(matrix_projection(SymmetricSet::rank_at_most(2, 1), Matrix::Identity(2, 2)).non_exhaustive);
}

TEST_CASE("matrix_critical_points examples") {
  const auto r = matrix_critical_points(SymmetricSet::rank_at_most(2, 1), diag({3, 1}));
  REQUIRE(r.size() == 2);
  CHECK(contains(r.points, diag({3, 0})));
  CHECK(contains(r.points, diag({0, 1})));
  const auto o = matrix_critical_points(SymmetricSet::orbit(Vector::Ones(2)), diag({2, 0.5}));
  REQUIRE(o.size() == 4);
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) CHECK(contains(o.points, diag({a, b})));
}

TEST_CASE("repeated singular values are refused with the counterexample") {
  try {
    matrix_critical_points(SymmetricSet::rank_at_most(2, 1), Matrix::Identity(2, 2));
    FAIL("no refusal");
  } catch (const RefusalError& e) {
    const std::string what = e.what();
    CHECK(what.find("repeated singular values") != std::string::npos);
    CHECK(what.find("u u^T") != std::string::npos);
  }
  // non-square data with a zero singular value
  Matrix y = Matrix::Zero(2, 3);
  y(0, 0) = 2.0;
  CHECK_THROWS_AS(matrix_critical_points(SymmetricSet::rank_at_most(2, 1), y), RefusalError);
}

TEST_CASE("tall input keeps the caller's orientation") {
  std::mt19937_64 rng(3);
  const Matrix y = random_gaussian(4, 3, rng);
  const auto c = matrix_critical_points(SymmetricSet::rank_at_most(3, 2), y);
  REQUIRE(c.size() == 3);
  for (const auto& x : c.points) {
    CHECK(x.rows() == 4);
    CHECK(x.cols() == 3);
  }
  const auto ct = matrix_critical_points(SymmetricSet::rank_at_most(3, 2), y.transpose());
  for (const auto& x : c.points) CHECK(contains(ct.points, x.transpose(), 1e-9));
}

TEST_CASE("matrix critical sets: count transfer, singular values, normal vectors") {
  std::mt19937_64 rng(5);
  struct Case {
    SymmetricSet s;
    Eigen::Index rows, cols;
  };
  const std::vector<Case> cases = {{SymmetricSet::rank_at_most(3, 2), 3, 4},
                                   {SymmetricSet::equal_abs(3, 2), 3, 3},
                                   {SymmetricSet::fermat(4), 2, 3},
                                   {SymmetricSet::hyperbola(), 2, 2},
                                   {SymmetricSet::orbit(Eigen::Vector3d(2, 1, 1)), 3, 3}};
  for (const auto& c : cases) {
    for (int k = 0; k < 10; ++k) {
      const Matrix y = random_gaussian(c.rows, c.cols, rng);
      const auto m = matrix_critical_points(c.s, y);
      const auto d = critical_points_diag(c.s, svd_ordered(y).sigma);
      CHECK(m.size() == d.size());
      CHECK(m.source_diag.size() == m.points.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        Vector want = m.source_diag[i].cwiseAbs();
        std::sort(want.data(), want.data() + want.size(), std::greater<>());
        CHECK((svd_ordered(m.points[i]).sigma - want).norm() <= 1e-8);
        CHECK(normal_vector_check(c.s, m.points[i], y - m.points[i]));
      }
      for (std::size_t i = 1; i < m.size(); ++i) CHECK_FALSE(lex_less(m.source_diag[i], m.source_diag[i - 1]));
    }
  }
}

TEST_CASE("normal_vector_check examples") {
  const auto r = SymmetricSet::rank_at_most(2, 1);
  CHECK(normal_vector_check(r, diag({3, 0}), diag({0, 5})));
  CHECK_FALSE(normal_vector_check(r, diag({3, 0}), diag({1, 0})));
  const auto h = SymmetricSet::hyperbola();
  for (double c : {1.0, -2.5, 0.0}) CHECK(normal_vector_check(h, diag({2, 0.5}), c * diag({0.5, 2})));
  CHECK_FALSE(normal_vector_check(h, diag({2, 0.5}), diag({2, 0.5})));
  CHECK_THROWS_AS(normal_vector_check(h, diag({3, 3}), diag({1, 1})), InputError);
  // off-diagonal components in the SVD basis are never normal
  Matrix z = diag({0, 5});
  z(0, 1) = 1.0;
  CHECK_FALSE(normal_vector_check(r, diag({3, 0}), z));
}

TEST_CASE("normal_vector_check with repeated singular values") {
  std::mt19937_64 rng(7);
  // the orbit of (1, 1) is O(2); its normal space at I is the symmetric matrices
  const auto o = SymmetricSet::orbit(Vector::Ones(2));
  const Matrix g = random_gaussian(2, 2, rng);
  const Matrix sym = g + g.transpose();
  CHECK(normal_vector_check(o, Matrix::Identity(2, 2), sym));
  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_FALSE(normal_vector_check(o, Matrix::Identity(2, 2), skew));
}

TEST_CASE("lift_invariant_poly examples") {
  auto x = [](std::size_t i, std::size_t n) { return MultiPoly::variable(i, n); };
  const MultiPoly det = x(0, 4) * x(3, 4) - x(1, 4) * x(2, 4);
  CHECK(lift_invariant_poly(x(0, 2) * x(1, 2), 2) == Rational(8) * det * det);

  const MultiPoly circle = x(0, 2) * x(0, 2) + x(1, 2) * x(1, 2) - MultiPoly::constant(Rational(1), 2);
  const MultiPoly p = lift_invariant_poly(circle, 3);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const Matrix m = random_gaussian(2, 3, rng);
    const double tr = (m * m.transpose()).trace();
    CHECK(p.eval(flatten(m)) == doctest::Approx(8 * (tr - 1) * (tr - 1)).epsilon(1e-10));
  }
  CHECK(lift_invariant_poly(MultiPoly(2), 2).is_zero());
  CHECK(lift_invariant_poly(MultiPoly(2), 2).nvars() == 4);
  CHECK_THROWS_AS(lift_invariant_poly(x(0, 5), 5), UnsupportedError);
  CHECK_THROWS_AS(lift_invariant_poly(x(0, 3), 2), InputError);
}
