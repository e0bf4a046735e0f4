#include "edcrit/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "edcrit/errors.hpp"

namespace edcrit {

namespace {

constexpr const char* kRepeatedMessage =
    "repeated singular values: the critical set is not a finite lift of the diagonal one "
    "(e.g. for Y = I_2 on the rank-one matrices every u u^T with unit u is critical)";

DataMatrix ingest_for(const SymmetricSet& s, const Matrix& y) {
  DataMatrix d = DataMatrix::ingest(y);
  if (static_cast<std::size_t>(d.rows()) != s.ambient_dim()) {
    throw InputError("matrix of size " + std::to_string(y.rows()) + " x " +
                     std::to_string(y.cols()) + " does not match " + s.name() +
                     " (needs min(rows, cols) = " + std::to_string(s.ambient_dim()) + ")");
  }
  return d;
}

// Singular value data for which U and V are determined up to the signs that
// the lift ignores.
bool svd_is_unique(const SvdFactors& f, Eigen::Index t, double gap) {
  if (!has_distinct_singular_values(f.sigma, gap)) {
    return false;
  }
  const Eigen::Index n = f.sigma.size();
  if (t > n) {
    const double scale = std::max(f.sigma[0], std::numeric_limits<double>::min());
    return f.sigma[n - 1] >= gap * scale;
  }
  return true;
}

// Index blocks of (numerically) equal singular values; the zero block also
// owns the extra columns n..t-1.
struct Block {
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  bool zero = false;
  double value = 0.0;
};

std::vector<Block> singular_blocks(const Vector& sigma, Eigen::Index t, double tol) {
  const Eigen::Index n = sigma.size();
  const double scale = std::max(1.0, sigma[0]);
  std::vector<Block> blocks;
  Eigen::Index i = 0;
  while (i < n) {
    Block b;
    b.zero = sigma[i] <= tol * scale;
    Eigen::Index j = i;
    while (j < n && (b.zero ? sigma[j] <= tol * scale : sigma[i] - sigma[j] <= tol * scale)) {
      b.rows.push_back(j);
      b.value += sigma[j];
      ++j;
    }
    b.value = b.zero ? 0.0 : b.value / static_cast<double>(b.rows.size());
    b.cols = b.rows;
    blocks.push_back(std::move(b));
    i = j;
  }
  if (t > n) {
    if (!blocks.back().zero) {
      blocks.push_back(Block{{}, {}, true, 0.0});
    }
    for (Eigen::Index j = n; j < t; ++j) {
      blocks.back().cols.push_back(j);
    }
  }
  return blocks;
}

Matrix sub(const Matrix& m, const std::vector<Eigen::Index>& r, const std::vector<Eigen::Index>& c) {
  Matrix out(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(r[i], c[j]);
    }
  }
  return out;
}

double abs_eval(const MultiPoly& p, const Vector& x) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double m = std::abs(c.get_d());
    for (std::size_t i = 0; i < e.size(); ++i) {
      m *= std::pow(std::abs(x[static_cast<Eigen::Index>(i)]), e[i]);
    }
    s += m;
  }
  return s;
}

}  // namespace

bool matrix_membership(const SymmetricSet& s, const Matrix& x, double tol) {
  const DataMatrix d = ingest_for(s, x);
  return membership(s, svd_ordered(d.values()).sigma, tol);
}

double matrix_distance(const SymmetricSet& s, const Matrix& y, const Tolerances& tol) {
  const DataMatrix d = ingest_for(s, y);
  return distance_diag(s, svd_ordered(d.values()).sigma, tol);
}

MatrixCriticalSet matrix_projection(const SymmetricSet& s, const Matrix& y, const Tolerances& tol) {
  const DataMatrix d = ingest_for(s, y);
  const SvdFactors f = svd_ordered(d.values());
  const CriticalSet diag = projection_diag(s, f.sigma, tol);
  MatrixCriticalSet out;
  out.non_exhaustive = !svd_is_unique(f, d.cols(), tol.distinct_gap);
  for (const auto& p : diag.points) {
    out.points.push_back(d.restore(lift_diagonal(f, p.x)));
    out.source_diag.push_back(p.x);
    out.residuals.push_back(p.residual);
  }
  return out;
}

MatrixCriticalSet matrix_critical_points(const SymmetricSet& s, const Matrix& y,
                                         const Tolerances& tol) {
  const DataMatrix d = ingest_for(s, y);
  const SvdFactors f = svd_ordered(d.values());
  if (!svd_is_unique(f, d.cols(), tol.distinct_gap)) {
    throw RefusalError(kRepeatedMessage);
  }
  CriticalSet diag = critical_points_diag(s, f.sigma, tol);
  std::sort(diag.points.begin(), diag.points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return lex_less(a.x, b.x); });
  MatrixCriticalSet out;
  for (const auto& p : diag.points) {
    out.points.push_back(d.restore(lift_diagonal(f, p.x)));
    out.source_diag.push_back(p.x);
    out.residuals.push_back(p.residual);
  }
  return out;
}

bool normal_vector_check(const SymmetricSet& s, const Matrix& x, const Matrix& z, double tol) {
  if (x.rows() != z.rows() || x.cols() != z.cols()) {
    throw InputError("normal_vector_check: X and Z differ in shape");
  }
  const DataMatrix dx = ingest_for(s, x);
  const DataMatrix dz = DataMatrix::ingest(z);
  const Matrix& zv = dz.values();
  const SvdFactors f = svd_ordered(dx.values());
  if (!membership(s, f.sigma, 1e-8)) {
    throw InputError("normal_vector_check: X is not in the matrix set");
  }
  const Eigen::Index n = dx.rows();
  const Eigen::Index t = dx.cols();
  const double scale = std::max(1.0, zv.norm());
  const Matrix w = f.U.transpose() * zv * f.V;

  const auto blocks = singular_blocks(f.sigma, t, 1e-8);
  std::vector<int> owner_row(static_cast<std::size_t>(n), -1);
  std::vector<int> owner_col(static_cast<std::size_t>(t), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto r : blocks[b].rows) owner_row[static_cast<std::size_t>(r)] = static_cast<int>(b);
    for (auto c : blocks[b].cols) owner_col[static_cast<std::size_t>(c)] = static_cast<int>(b);
  }
  // Off-block entries must vanish: this is Z X^T and X^T Z being symmetric.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < t; ++j) {
      if (owner_row[static_cast<std::size_t>(i)] != owner_col[static_cast<std::size_t>(j)] &&
          std::abs(w(i, j)) > tol * scale) {
        return false;
      }
    }
  }

  Vector sx(n);
  Vector sz(n);
  for (const auto& b : blocks) {
    if (b.rows.empty()) {
      continue;
    }
    const Matrix wb = sub(w, b.rows, b.cols);
    Vector zb;
    if (b.zero) {
      zb = Eigen::JacobiSVD<Matrix>(wb).singularValues();
    } else {
      if ((wb - wb.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
        return false;
      }
      zb = Eigen::SelfAdjointEigenSolver<Matrix>(0.5 * (wb + wb.transpose())).eigenvalues();
    }
    for (std::size_t k = 0; k < b.rows.size(); ++k) {
      sx[b.rows[k]] = b.value;
      sz[b.rows[k]] = zb[static_cast<Eigen::Index>(k)];
    }
  }
  return criticality_residual(s, sx, sx + sz) <= tol * scale;
}

MultiPoly lift_invariant_poly(const MultiPoly& f, std::size_t t) {
  const std::size_t n = f.nvars();
  if (n == 0) {
    throw InputError("lift_invariant_poly: polynomial has no variables");
  }
  if (n > 4) {
    throw UnsupportedError("lift_invariant_poly supports n <= 4 variables, got " +
                           std::to_string(n));
  }
  if (t < n) {
    throw InputError("lift_invariant_poly needs t >= n");
  }
  const std::size_t nt = n * t;
  if (f.is_zero()) {
    return MultiPoly(nt);
  }

  MultiPoly fhat(n);
  const MultiPoly f2 = f * f;
  for (const auto& pi : all_signed_permutations(n)) {
    fhat += apply_signed_permutation(f2, pi);
  }
  const MultiPoly q = power_sum_rewrite_squares(fhat);

  // P_k = sum sigma_i^(2k) = tr((X X^T)^k).
  std::size_t kmax = 0;
  for (const auto& [e, c] : q.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) {
        kmax = std::max(kmax, k + 1);
      }
    }
  }
  using PolyMatrix = std::vector<std::vector<MultiPoly>>;
  PolyMatrix gram(n, std::vector<MultiPoly>(n, MultiPoly(nt)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t j = 0; j < t; ++j) {
        gram[a][b] += MultiPoly::variable(a * t + j, nt) * MultiPoly::variable(b * t + j, nt);
      }
    }
  }
  std::vector<MultiPoly> traces(n, MultiPoly(nt));
  PolyMatrix power = gram;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k > 1) {
      PolyMatrix next(n, std::vector<MultiPoly>(n, MultiPoly(nt)));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            next[a][b] += power[a][c] * gram[c][b];
          }
        }
      }
      power = std::move(next);
    }
    for (std::size_t a = 0; a < n; ++a) {
      traces[k - 1] += power[a][a];
    }
  }
  const MultiPoly lifted = q.substitute(traces);

  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_gaussian(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(t), rng);
    const Vector sigma = svd_ordered(m).sigma;
    Vector entries(static_cast<Eigen::Index>(nt));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < t; ++j) {
        entries[static_cast<Eigen::Index>(a * t + j)] =
            m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(j));
      }
    }
    const double expected = fhat.eval(sigma);
    const double got = lifted.eval(entries);
    const double scale = std::max({1.0, abs_eval(fhat, sigma), abs_eval(lifted, entries)});
    if (std::abs(expected - got) > 1e-6 * scale) {
      throw InternalError("lifted polynomial disagrees with the symmetrised polynomial at a sample");
    }
  }
  return lifted;
}

}  // namespace edcrit
