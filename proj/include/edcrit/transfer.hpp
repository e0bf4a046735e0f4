#pragma once

#include <cstddef>
#include <vector>

#include "edcrit/multipoly.hpp"
#include "edcrit/numlin.hpp"
#include "edcrit/symsets.hpp"

namespace edcrit {

/// Matrices U Diag(w) V^T obtained by lifting diagonal points w.
struct MatrixCriticalSet {
  std::vector<Matrix> points;
  std::vector<Vector> source_diag;
  std::vector<double> residuals;
  bool non_exhaustive = false;

  std::size_t size() const { return points.size(); }
};

/// Matrices may be passed in either orientation; min(rows, cols) must equal
/// the ambient dimension of S. Outputs keep the caller's orientation.
bool matrix_membership(const SymmetricSet& s, const Matrix& x, double tol = 1e-9);

double matrix_distance(const SymmetricSet& s, const Matrix& y, const Tolerances& tol = {});

/// Nearest points U Diag(x) V^T for x in the diagonal projection, using the
/// computed SVD of Y. When the SVD is not unique (repeated singular values,
/// or a zero singular value of a non-square Y) the true projection is a
/// continuum and the result is flagged `non_exhaustive`.
MatrixCriticalSet matrix_projection(const SymmetricSet& s, const Matrix& y,
                                    const Tolerances& tol = {});

/// The ED critical points of Y on sigma^{-1}(S), sorted by source_diag.
/// Throws RefusalError unless the singular values of Y are pairwise distinct
/// (and nonzero when Y is not square).
MatrixCriticalSet matrix_critical_points(const SymmetricSet& s, const Matrix& y,
                                         const Tolerances& tol = {});

/// Whether Z is a normal vector of sigma^{-1}(S) at the smooth point X:
/// Z X^T and X^T Z symmetric, and in a simultaneous SVD of (X, Z) the
/// diagonal of Z is normal to S at sigma(X). Blocks of equal singular values
/// are rotated to diagonalise Z, so repeated singular values are handled.
/// Throws InputError when X is not in the set, RefusalError when it is not
/// a smooth point.
bool normal_vector_check(const SymmetricSet& s, const Matrix& x, const Matrix& z,
                         double tol = 1e-8);

/// For f in n <= 4 variables, a polynomial P in the n*t entries of an n x t
/// matrix (X_ij has index i*t + j) with P(X) = sum over signed permutations
/// pi of f(pi sigma(X))^2. Self-checked at 20 random matrices.
MultiPoly lift_invariant_poly(const MultiPoly& f, std::size_t t);

}  // namespace edcrit
