#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <random>
#include <vector>

namespace edcrit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Shared numerical tolerances. Relative quantities are scaled by the
/// magnitude of the data they apply to.
struct Tolerances {
  double equality = 1e-9;
  double distinct_gap = 1e-7;
  double dedup = 1e-8;
};

/// An n x t data matrix with n <= t. Taller inputs are stored transposed and
/// `transposed` records it so results can be mapped back with `restore`.
class DataMatrix {
 public:
  static DataMatrix ingest(const Matrix& m);

  const Matrix& values() const { return values_; }
  bool transposed() const { return transposed_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }

  /// Brings a matrix in the internal orientation back to the caller's.
  Matrix restore(const Matrix& m) const { return transposed_ ? Matrix(m.transpose()) : m; }

 private:
  DataMatrix(Matrix values, bool transposed)
      : values_(std::move(values)), transposed_(transposed) {}

  Matrix values_;
  bool transposed_ = false;
};

/// Y = U * Diag(sigma) * V^T with sigma nonincreasing and nonnegative.
struct SvdFactors {
  Matrix U;      // n x n
  Matrix V;      // t x t
  Vector sigma;  // n
};

/// Full ordered SVD of an n x t matrix (n <= t). Each left singular vector
/// is signed so its first nonzero entry is positive; the paired right
/// vector follows. Throws InputError on non-finite entries or n > t.
SvdFactors svd_ordered(const Matrix& y);

/// The n x t matrix with x on its principal diagonal.
Matrix diag_embed(const Vector& x, Eigen::Index t);

/// U * Diag(x) * V^T for factors of an n x t matrix.
Matrix lift_diagonal(const SvdFactors& f, const Vector& x);

/// True when consecutive singular values differ by at least
/// `gap * max(sigma_1, tiny)`.
bool has_distinct_singular_values(const Vector& sigma, double gap);

/// A signed permutation acting on R^n by (pi x)[perm[i]] = signs[i] * x[i].
class SignedPermutation {
 public:
  SignedPermutation(std::vector<int> perm, std::vector<int> signs);

  static SignedPermutation identity(std::size_t n);

  /// The signed permutation that maps x to sorted(|x|) in nonincreasing order.
  static SignedPermutation sorting(const Vector& x);

  std::size_t size() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  Vector apply(const Vector& x) const;

  /// (*this o other)(x) == apply(other.apply(x)).
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> perm_;
  std::vector<int> signs_;
};

/// All 2^n * n! signed permutations of [n].
std::vector<SignedPermutation> all_signed_permutations(std::size_t n);

/// Generators of the signed permutation group: adjacent transpositions plus
/// the sign flip of the first coordinate.
std::vector<SignedPermutation> signed_permutation_generators(std::size_t n);

/// Haar-distributed orthogonal matrix.
Matrix random_orthogonal(Eigen::Index n, std::mt19937_64& rng);

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);
Vector random_gaussian(Eigen::Index n, std::mt19937_64& rng);

/// Lexicographic "less" on vectors of equal length; used to order outputs.
bool lex_less(const Vector& a, const Vector& b);

}  // namespace edcrit
