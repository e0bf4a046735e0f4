#include "edcrit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "edcrit/errors.hpp"
#include "edcrit/transfer.hpp"

namespace edcrit {

namespace {

// A MultiPoly flattened to doubles for the inner Newton loop.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p) : n_(p.nvars()) {
    for (const auto& [e, c] : p.terms()) {
      coef_.push_back(c.get_d());
      exps_.insert(exps_.end(), e.begin(), e.end());
      for (int k : e) {
        max_exp_ = std::max(max_exp_, k);
      }
    }
  }

  int max_exp() const { return max_exp_; }

  // pow[i * stride + k] = x_i^k
  double eval(const std::vector<double>& pow, int stride, bool absolute = false) const {
    double v = 0.0;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
      double m = absolute ? std::abs(coef_[t]) : coef_[t];
      for (std::size_t i = 0; i < n_; ++i) {
        const double p = pow[i * static_cast<std::size_t>(stride) + static_cast<std::size_t>(exps_[t * n_ + i])];
        m *= absolute ? std::abs(p) : p;
      }
      v += m;
    }
    return v;
  }

 private:
  std::size_t n_ = 0;
  int max_exp_ = 0;
  std::vector<double> coef_;
  std::vector<int> exps_;
};

// Values, gradients and Hessians of the equations at a point.
class System {
 public:
  explicit System(const ImplicitSet& v) : n_(v.ambient_dim), s_(v.equations.size()) {
    for (const auto& f : v.equations) {
      f_.emplace_back(f);
      for (std::size_t i = 0; i < n_; ++i) {
        const MultiPoly gi = f.derivative(i);
        grad_.emplace_back(gi);
        for (std::size_t j = 0; j < n_; ++j) {
          hess_.emplace_back(gi.derivative(j));
        }
      }
    }
    for (const auto& p : f_) {
      stride_ = std::max(stride_, p.max_exp() + 1);
    }
  }

  std::size_t n() const { return n_; }
  std::size_t s() const { return s_; }

  void load(const Vector& x) {
    pow_.assign(n_ * static_cast<std::size_t>(stride_), 1.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 1; k < stride_; ++k) {
        pow_[i * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(k)] =
            pow_[i * static_cast<std::size_t>(stride_) + static_cast<std::size_t>(k - 1)] *
            x[static_cast<Eigen::Index>(i)];
      }
    }
  }

  Vector values() const {
    Vector v(static_cast<Eigen::Index>(s_));
    for (std::size_t r = 0; r < s_; ++r) {
      v[static_cast<Eigen::Index>(r)] = f_[r].eval(pow_, stride_);
    }
    return v;
  }

  Matrix jacobian(bool absolute = false) const {
    Matrix j(static_cast<Eigen::Index>(s_), static_cast<Eigen::Index>(n_));
    for (std::size_t r = 0; r < s_; ++r) {
      for (std::size_t i = 0; i < n_; ++i) {
        j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) =
            grad_[r * n_ + i].eval(pow_, stride_, absolute);
      }
    }
    return j;
  }

  Matrix hessian(std::size_t r) const {
    Matrix h(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            hess_[(r * n_ + i) * n_ + j].eval(pow_, stride_);
      }
    }
    return h;
  }

 private:
  std::size_t n_;
  std::size_t s_;
  int stride_ = 1;
  std::vector<CompiledPoly> f_;
  std::vector<CompiledPoly> grad_;
  std::vector<CompiledPoly> hess_;
  std::vector<double> pow_;
};

bool regular_at(System& sys, const Vector& x, std::size_t codim, double threshold) {
  sys.load(x);
  const Matrix j = sys.jacobian();
  const double scale = sys.jacobian(true).norm();
  if (!(scale > 0.0)) {
    return false;
  }
  const Vector sv = Eigen::JacobiSVD<Matrix>(j).singularValues();
  const auto rank = static_cast<std::size_t>((sv.array() > threshold * scale).count());
  return rank >= codim;
}

// Returns ||x - y + J^T lambda|| and ||f(x)|| stacked.
Vector lagrange_residual(System& sys, const Vector& x, const Vector& lambda, const Vector& y) {
  sys.load(x);
  const Matrix j = sys.jacobian();
  Vector r(x.size() + lambda.size());
  r.head(x.size()) = x - y + j.transpose() * lambda;
  r.tail(lambda.size()) = sys.values();
  return r;
}

Vector least_squares_lambda(System& sys, const Vector& x, const Vector& y) {
  sys.load(x);
  const Matrix jt = sys.jacobian().transpose();
  return jt.completeOrthogonalDecomposition().solve(y - x);
}

}  // namespace

ImplicitSet ImplicitSet::make(std::vector<MultiPoly> equations) {
  if (equations.empty()) {
    throw InputError("implicit set needs at least one equation");
  }
  const std::size_t n = equations.front().nvars();
  for (const auto& f : equations) {
    if (f.nvars() != n) {
      throw InputError("implicit set equations disagree on the number of variables");
    }
  }
  if (n == 0) {
    throw InputError("implicit set needs at least one variable");
  }
  ImplicitSet v;
  v.codim = equations.size();
  v.ambient_dim = n;
  v.equations = std::move(equations);
  return v;
}

Vector ImplicitSet::values(const Vector& x) const {
  System sys(*this);
  sys.load(x);
  return sys.values();
}

Matrix ImplicitSet::jacobian(const Vector& x) const {
  System sys(*this);
  sys.load(x);
  return sys.jacobian();
}

bool ImplicitSet::is_regular(const Vector& x) const {
  System sys(*this);
  return regular_at(sys, x, codim, rank_threshold);
}

OracleReport oracle_critical_points(const ImplicitSet& v, const Vector& y, std::size_t starts,
                                    std::uint64_t seed) {
  if (static_cast<std::size_t>(y.size()) != v.ambient_dim) {
    throw InputError("oracle: data point has the wrong dimension");
  }
  if (v.ambient_dim > 4) {
    throw UnsupportedError("oracle supports ambient dimension <= 4");
  }
  if (!y.allFinite()) {
    throw InputError("oracle: data point has non-finite entries");
  }
  System sys(v);
  const auto n = static_cast<Eigen::Index>(sys.n());
  const auto s = static_cast<Eigen::Index>(sys.s());
  const double ynorm = std::max(1.0, y.norm());
  const double converged_tol = 1e-10 * ynorm;
  const double escape = 1e6 * ynorm;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const double scales[] = {0.5, 1.0, 2.0};

  OracleReport report;
  report.seed = seed;
  report.starts_used = starts;
  std::vector<Vector> found;

  for (std::size_t k = 0; k < starts; ++k) {
    Vector x(n);
    if (k % 4 < 3) {
      for (Eigen::Index i = 0; i < n; ++i) {
        x[i] = y[i] + scales[k % 4] * ynorm * normal(rng);
      }
    } else {
      for (Eigen::Index i = 0; i < n; ++i) {
        x[i] = 2.0 * ynorm * uniform(rng);
      }
    }
    Vector lambda = least_squares_lambda(sys, x, y);
    Vector r = lagrange_residual(sys, x, lambda, y);
    double rn = r.norm();
    bool ok = false;
    for (int it = 0; it < 100 && std::isfinite(rn); ++it) {
      if (rn <= converged_tol) {
        ok = true;
        break;
      }
      sys.load(x);
      const Matrix j = sys.jacobian();
      Matrix jac = Matrix::Zero(n + s, n + s);
      jac.topLeftCorner(n, n) = Matrix::Identity(n, n);
      for (Eigen::Index q = 0; q < s; ++q) {
        jac.topLeftCorner(n, n) += lambda[q] * sys.hessian(static_cast<std::size_t>(q));
      }
      jac.topRightCorner(n, s) = j.transpose();
      jac.bottomLeftCorner(s, n) = j;
      const Vector step = jac.fullPivLu().solve(-r);
      if (!step.allFinite()) {
        break;
      }
      double h = 1.0;
      bool accepted = false;
      for (int halvings = 0; halvings < 30; ++halvings, h *= 0.5) {
        const Vector xn = x + h * step.head(n);
        const Vector ln = lambda + h * step.tail(s);
        const Vector rn_vec = lagrange_residual(sys, xn, ln, y);
        const double cand = rn_vec.norm();
        if (cand < rn) {
          x = xn;
          lambda = ln;
          r = rn_vec;
          rn = cand;
          accepted = true;
          break;
        }
      }
      if (!accepted || x.norm() > escape) {
        break;
      }
    }
    if (!ok) {
      ok = rn <= converged_tol;
    }
    if (!ok) {
      continue;
    }
    ++report.converged;
    if (!regular_at(sys, x, v.codim, v.rank_threshold)) {
      ++report.singular_rejected;
      continue;
    }
    found.push_back(x);
  }

  std::sort(found.begin(), found.end(), lex_less);
  const double dedup = 1e-7 * ynorm;
  for (const auto& x : found) {
    const bool dup = std::any_of(report.critical_points.points.begin(),
                                 report.critical_points.points.end(),
                                 [&](const CriticalPoint& p) { return (p.x - x).norm() <= dedup; });
    if (dup) {
      ++report.duplicates_merged;
      continue;
    }
    const Vector lambda = least_squares_lambda(sys, x, y);
    sys.load(x);
    const double residual = (x - y + sys.jacobian().transpose() * lambda).norm();
    report.critical_points.points.push_back({x, residual, -1, false});
  }
  return report;
}

CountHistogram empirical_count(const std::function<std::size_t(const Vector&)>& solver,
                               std::size_t dim, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw InputError("empirical_count needs at least one sample");
  }
  CountHistogram h;
  h.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Vector y = random_gaussian(static_cast<Eigen::Index>(dim), rng);
    try {
      const std::size_t c = solver(y);
      ++h.counts[c];
      ++h.samples;
      h.max = std::max(h.max, c);
    } catch (const Error& e) {
      ++h.errors;
      if (h.error_messages.size() < 5) {
        h.error_messages.emplace_back(e.what());
      }
    }
  }
  return h;
}

CountHistogram empirical_count_diag(const SymmetricSet& s, std::size_t samples, std::uint64_t seed,
                                    const Tolerances& tol) {
  return empirical_count([&](const Vector& y) { return critical_points_diag(s, y, tol).size(); },
                         s.ambient_dim(), samples, seed);
}

CountHistogram empirical_count_matrix(const SymmetricSet& s, std::size_t t, std::size_t samples,
                                      std::uint64_t seed, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(s.ambient_dim());
  if (static_cast<Eigen::Index>(t) < n) {
    throw InputError("empirical_count_matrix needs t >= n");
  }
  const auto ti = static_cast<Eigen::Index>(t);
  return empirical_count(
      [&](const Vector& v) {
        const Matrix y = Eigen::Map<const Matrix>(v.data(), n, ti);
        return matrix_critical_points(s, y, tol).size();
      },
      s.ambient_dim() * t, samples, seed);
}

}  // namespace edcrit
