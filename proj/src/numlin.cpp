#include "edcrit/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "edcrit/errors.hpp"

namespace edcrit {

namespace {

void require_finite(const Matrix& m) {
  if (!m.allFinite()) {
    throw InputError("matrix has non-finite entries");
  }
}

// Flips v so that its first entry above `eps` in magnitude is positive.
bool needs_flip(const Eigen::Ref<const Vector>& v) {
  constexpr double eps = 1e-12;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > eps) {
      return v[i] < 0.0;
    }
  }
  return false;
}

}  // namespace

DataMatrix DataMatrix::ingest(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InputError("empty matrix");
  }
  require_finite(m);
  if (m.rows() > m.cols()) {
    return DataMatrix(m.transpose(), true);
  }
  return DataMatrix(m, false);
}

SvdFactors svd_ordered(const Matrix& y) {
  require_finite(y);
  if (y.rows() == 0 || y.rows() > y.cols()) {
    throw InputError("svd_ordered expects an n x t matrix with 0 < n <= t, got " +
                     std::to_string(y.rows()) + " x " + std::to_string(y.cols()));
  }
  const Eigen::Index n = y.rows();
  const Eigen::Index t = y.cols();

  Eigen::JacobiSVD<Matrix> svd(y, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdFactors f{svd.matrixU(), svd.matrixV(), svd.singularValues()};

  for (Eigen::Index i = 0; i < n; ++i) {
    if (needs_flip(f.U.col(i))) {
      f.U.col(i) *= -1.0;
      f.V.col(i) *= -1.0;
    }
  }
  for (Eigen::Index j = n; j < t; ++j) {
    if (needs_flip(f.V.col(j))) {
      f.V.col(j) *= -1.0;
    }
  }

  const double scale = std::max(1.0, y.norm());
  if ((lift_diagonal(f, f.sigma) - y).norm() > 1e-9 * scale) {
    throw InternalError("SVD reconstruction residual above tolerance");
  }
  return f;
}

Matrix diag_embed(const Vector& x, Eigen::Index t) {
  if (t < x.size()) {
    throw InputError("diag_embed needs t >= n (n = " + std::to_string(x.size()) +
                     ", t = " + std::to_string(t) + ")");
  }
  Matrix m = Matrix::Zero(x.size(), t);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    m(i, i) = x[i];
  }
  return m;
}

Matrix lift_diagonal(const SvdFactors& f, const Vector& x) {
  const Eigen::Index n = f.U.rows();
  if (x.size() != n) {
    throw InputError("diagonal vector length does not match the SVD factors");
  }
  // U * Diag(x) * V^T only touches the first n columns of V.
  return f.U * x.asDiagonal() * f.V.leftCols(n).transpose();
}

bool has_distinct_singular_values(const Vector& sigma, double gap) {
  if (sigma.size() < 2) {
    return true;
  }
  const double scale = std::max(sigma.maxCoeff(), std::numeric_limits<double>::min());
  for (Eigen::Index i = 0; i + 1 < sigma.size(); ++i) {
    if (sigma[i] - sigma[i + 1] < gap * scale) {
      return false;
    }
  }
  return true;
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) {
    throw InputError("signed permutation: perm and signs differ in length");
  }
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    const int p = perm_[i];
    if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p]) {
      throw InputError("signed permutation: perm is not a bijection");
    }
    seen[p] = true;
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw InputError("signed permutation: signs must be +1 or -1");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<int>(n, 1)};
}

SignedPermutation SignedPermutation::sorting(const Vector& x) {
  const auto n = static_cast<std::size_t>(x.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(x[a]) > std::abs(x[b]); });
  std::vector<int> perm(n);
  std::vector<int> signs(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const int src = order[pos];
    perm[src] = static_cast<int>(pos);
    signs[src] = x[src] < 0.0 ? -1 : 1;
  }
  return {std::move(perm), std::move(signs)};
}

Vector SignedPermutation::apply(const Vector& x) const {
  if (static_cast<std::size_t>(x.size()) != perm_.size()) {
    throw InputError("signed permutation of size " + std::to_string(perm_.size()) +
                     " applied to vector of length " + std::to_string(x.size()));
  }
  Vector out(x.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    out[perm_[i]] = signs_[i] * x[static_cast<Eigen::Index>(i)];
  }
  return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.size() != size()) {
    throw InputError("composing signed permutations of different sizes");
  }
  std::vector<int> perm(size());
  std::vector<int> signs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const int mid = other.perm_[i];
    perm[i] = perm_[mid];
    signs[i] = other.signs_[i] * signs_[mid];
  }
  return {std::move(perm), std::move(signs)};
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> perm(size());
  std::vector<int> signs(size());
  for (std::size_t i = 0; i < size(); ++i) {
    perm[perm_[i]] = static_cast<int>(i);
    signs[perm_[i]] = signs_[i];
  }
  return {std::move(perm), std::move(signs)};
}

std::vector<SignedPermutation> all_signed_permutations(std::size_t n) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> signs(n);
      for (std::size_t i = 0; i < n; ++i) {
        signs[i] = (mask >> i) & 1U ? -1 : 1;
      }
      out.emplace_back(perm, std::move(signs));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPermutation> signed_permutation_generators(std::size_t n) {
  std::vector<SignedPermutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto p = SignedPermutation::identity(n).perm();
    std::swap(p[i], p[i + 1]);
    gens.emplace_back(std::move(p), std::vector<int>(n, 1));
  }
  if (n > 0) {
    std::vector<int> signs(n, 1);
    signs[0] = -1;
    gens.emplace_back(SignedPermutation::identity(n).perm(), std::move(signs));
  }
  return gens;
}

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      m(i, j) = normal(rng);
    }
  }
  return m;
}

Vector random_gaussian(Eigen::Index n, std::mt19937_64& rng) {
  return random_gaussian(n, 1, rng).col(0);
}

Matrix random_orthogonal(Eigen::Index n, std::mt19937_64& rng) {
  const Matrix g = random_gaussian(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) {
      q.col(i) *= -1.0;
    }
  }
  return q;
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

}  // namespace edcrit
