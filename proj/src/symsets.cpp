#include "edcrit/symsets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "edcrit/errors.hpp"
#include "edcrit/unipoly.hpp"

namespace edcrit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kBasisTol = 1e-10;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b = b * (n - k + i) / i;
  }
  return b;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) {
        s.push_back(i);
      }
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

void require_dim(const SymmetricSet& s, const Vector& y) {
  if (static_cast<std::size_t>(y.size()) != s.ambient_dim()) {
    throw InputError("dimension mismatch: " + s.name() + " lives in R^" +
                     std::to_string(s.ambient_dim()) + ", got a vector of length " +
                     std::to_string(y.size()));
  }
  if (!y.allFinite()) {
    throw InputError("data vector has non-finite entries");
  }
}

Vector sorted_abs_desc(const Vector& x) {
  Vector a = x.cwiseAbs();
  std::sort(a.data(), a.data() + a.size(), std::greater<>());
  return a;
}

double scale_of(const Vector& y) { return std::max(1.0, y.norm()); }

// Tangential part of y - x relative to a nonzero normal vector g in R^2.
double tangential_2d(const Vector& x, const Vector& y, const Vector& g) {
  const Vector r = y - x;
  const double gn = g.norm();
  if (gn == 0.0) {
    return r.norm();
  }
  return std::abs(r[0] * g[1] - r[1] * g[0]) / gn;
}

Vector fermat_gradient(int d, const Vector& x) {
  Vector g(2);
  g[0] = d * std::pow(x[0], d - 1);
  g[1] = d * std::pow(x[1], d - 1);
  return g;
}

Vector hyperbola_gradient(const Vector& x) {
  Vector g(2);
  g[0] = x[1];
  g[1] = x[0];
  return g;
}

std::vector<Vector> orbit_points(const Vector& a) {
  std::vector<double> sorted(a.data(), a.data() + a.size());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vector> out;
  do {
    std::vector<Eigen::Index> nonzero;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != 0.0) {
        nonzero.push_back(static_cast<Eigen::Index>(i));
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << nonzero.size()); ++mask) {
      Vector v = Eigen::Map<const Vector>(sorted.data(), static_cast<Eigen::Index>(sorted.size()));
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if ((mask >> b) & 1U) {
          v[nonzero[b]] = -v[nonzero[b]];
        }
      }
      out.push_back(std::move(v));
    }
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// AffineSubspace

AffineSubspace::AffineSubspace(Vector base, std::vector<Vector> basis)
    : base_(std::move(base)), basis_(std::move(basis)) {
  if (!base_.allFinite()) {
    throw InputError("affine subspace base has non-finite entries");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].size() != base_.size()) {
      throw InputError("affine subspace basis vector has the wrong length");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(basis_[i].dot(basis_[j]) - expected) > kBasisTol) {
        throw InputError("affine subspace basis is not orthonormal");
      }
    }
  }
  for (const auto& b : basis_) {
    base_ -= b.dot(base_) * b;
  }
}

AffineSubspace AffineSubspace::coordinate(std::size_t n, const std::vector<std::size_t>& axes) {
  std::vector<Vector> basis;
  for (std::size_t i : axes) {
    basis.push_back(Vector::Unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(i)));
  }
  return {Vector::Zero(static_cast<Eigen::Index>(n)), std::move(basis)};
}

Vector AffineSubspace::project(const Vector& y) const {
  if (y.size() != base_.size()) {
    throw InputError("projection onto a subspace of a different ambient dimension");
  }
  Vector p = base_;
  const Vector rel = y - base_;
  for (const auto& b : basis_) {
    p += b.dot(rel) * b;
  }
  return p;
}

bool AffineSubspace::contained_in(const AffineSubspace& other, double tol) const {
  if (!other.contains(base_, tol)) {
    return false;
  }
  for (const auto& b : basis_) {
    Vector in = Vector::Zero(b.size());
    for (const auto& ob : other.basis_) {
      in += ob.dot(b) * ob;
    }
    if ((b - in).norm() > tol) {
      return false;
    }
  }
  return true;
}

AffineSubspace AffineSubspace::transformed(const SignedPermutation& pi) const {
  std::vector<Vector> basis;
  basis.reserve(basis_.size());
  for (const auto& b : basis_) {
    basis.push_back(pi.apply(b));
  }
  return {pi.apply(base_), std::move(basis)};
}

// ---------------------------------------------------------------------------
// SymmetricSet

SymmetricSet SymmetricSet::rank_at_most(std::size_t n, std::size_t r) {
  if (n == 0 || r < 1 || r > n) {
    throw InputError("rank family needs 1 <= r <= n");
  }
  return SymmetricSet(family::RankAtMost{n, r});
}

SymmetricSet SymmetricSet::equal_abs(std::size_t n, std::size_t k) {
  if (n == 0 || k < 1 || k > n) {
    throw InputError("equal_abs family needs 1 <= k <= n");
  }
  return SymmetricSet(family::EqualAbs{n, k});
}

SymmetricSet SymmetricSet::fermat(int d) {
  if (d < 2 || d % 2 != 0) {
    throw InputError("fermat family needs an even exponent d >= 2");
  }
  return SymmetricSet(family::FermatSphere{d});
}

SymmetricSet SymmetricSet::hyperbola() { return SymmetricSet(family::Hyperbola{}); }

SymmetricSet SymmetricSet::orbit(Vector a) {
  if (a.size() == 0 || !a.allFinite()) {
    throw InputError("orbit vector must be nonempty and finite");
  }
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < 0.0 || (i + 1 < a.size() && a[i] < a[i + 1])) {
      throw InputError("orbit vector must be nonnegative and nonincreasing");
    }
  }
  if (a.size() > 8) {
    throw UnsupportedError("orbit enumeration is limited to n <= 8");
  }
  return SymmetricSet(family::FiniteOrbit{std::move(a)});
}

SymmetricSet SymmetricSet::explicit_complex(std::vector<AffineSubspace> subspaces) {
  if (subspaces.empty()) {
    throw InputError("explicit complex needs at least one subspace");
  }
  const std::size_t n = subspaces.front().ambient_dim();
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != n) {
      throw InputError("explicit complex mixes ambient dimensions");
    }
  }
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
      if (i != j && subspaces[i].contained_in(subspaces[j], kBasisTol)) {
        throw InputError("complex is not minimally defined: subspace " + std::to_string(i) +
                         " is contained in subspace " + std::to_string(j));
      }
    }
  }
  // Closure under the generators implies closure under the whole group.
  for (const auto& g : signed_permutation_generators(n)) {
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
      const AffineSubspace image = subspaces[i].transformed(g);
      const bool found = std::any_of(subspaces.begin(), subspaces.end(), [&](const auto& s) {
        return s.same_as(image, kBasisTol);
      });
      if (!found) {
        throw InputError("complex is not absolutely symmetric: the image of subspace " +
                         std::to_string(i) + " under a signed permutation is missing");
      }
    }
  }
  return SymmetricSet(family::ExplicitComplex{std::move(subspaces)});
}

std::size_t SymmetricSet::ambient_dim() const {
  return std::visit(overloaded{
                        [](const family::RankAtMost& f) { return f.n; },
                        [](const family::EqualAbs& f) { return f.n; },
                        [](const family::FermatSphere&) { return std::size_t{2}; },
                        [](const family::Hyperbola&) { return std::size_t{2}; },
                        [](const family::FiniteOrbit& f) { return static_cast<std::size_t>(f.a.size()); },
                        [](const family::ExplicitComplex& f) { return f.subspaces.front().ambient_dim(); },
                    },
                    variant_);
}

std::string SymmetricSet::name() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const family::RankAtMost& f) { os << "rank(n=" << f.n << ", r=" << f.r << ")"; },
                 [&](const family::EqualAbs& f) { os << "equal_abs(n=" << f.n << ", k=" << f.k << ")"; },
                 [&](const family::FermatSphere& f) { os << "fermat(d=" << f.d << ")"; },
                 [&](const family::Hyperbola&) { os << "hyperbola"; },
                 [&](const family::FiniteOrbit& f) { os << "orbit(" << f.a.transpose() << ")"; },
                 [&](const family::ExplicitComplex& f) { os << "complex(" << f.subspaces.size() << " subspaces)"; },
             },
             variant_);
  return os.str();
}

bool SymmetricSet::is_complex() const {
  return std::holds_alternative<family::RankAtMost>(variant_) ||
         std::holds_alternative<family::EqualAbs>(variant_) ||
         std::holds_alternative<family::ExplicitComplex>(variant_);
}

// ---------------------------------------------------------------------------
// CriticalSet

void CriticalSet::normalize(double tol) {
  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return lex_less(a.x, b.x); });
  std::vector<CriticalPoint> merged;
  for (auto& p : points) {
    const bool dup = std::any_of(merged.begin(), merged.end(),
                                 [&](const CriticalPoint& q) { return (q.x - p.x).norm() <= tol; });
    if (!dup) {
      merged.push_back(std::move(p));
    }
  }
  points = std::move(merged);
}

// ---------------------------------------------------------------------------
// Operations

bool membership(const SymmetricSet& s, const Vector& x, double tol) {
  require_dim(s, x);
  return std::visit(
      overloaded{
          [&](const family::RankAtMost& f) {
            const double t = tol * scale_of(x);
            const auto nz = (x.array().abs() > t).count();
            return static_cast<std::size_t>(nz) <= f.r;
          },
          [&](const family::EqualAbs& f) {
            const double t = tol * scale_of(x);
            const Vector a = sorted_abs_desc(x);
            for (std::size_t i = 1; i < f.k; ++i) {
              if (a[0] - a[static_cast<Eigen::Index>(i)] > t) {
                return false;
              }
            }
            for (std::size_t i = f.k; i < f.n; ++i) {
              if (a[static_cast<Eigen::Index>(i)] > t) {
                return false;
              }
            }
            return true;
          },
          [&](const family::FermatSphere& f) {
            return std::abs(std::pow(x[0], f.d) + std::pow(x[1], f.d) - 1.0) <= tol;
          },
          [&](const family::Hyperbola&) { return std::abs(std::abs(x[0] * x[1]) - 1.0) <= tol; },
          [&](const family::FiniteOrbit& f) {
            return (sorted_abs_desc(x) - f.a).cwiseAbs().maxCoeff() <= tol * std::max(1.0, f.a.norm());
          },
          [&](const family::ExplicitComplex& f) {
            const double t = tol * scale_of(x);
            return std::any_of(f.subspaces.begin(), f.subspaces.end(),
                               [&](const AffineSubspace& a) { return a.contains(x, t); });
          },
      },
      s.variant());
}

CriticalSet complex_critical_points(const std::vector<AffineSubspace>& subspaces, const Vector& y,
                                    const Tolerances& tol) {
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    if (subspaces[i].ambient_dim() != static_cast<std::size_t>(y.size())) {
      throw InputError("subspace " + std::to_string(i) + " does not live in R^" +
                       std::to_string(y.size()));
    }
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
      if (i != j && subspaces[i].contained_in(subspaces[j], kBasisTol)) {
        throw InputError("collection is not minimally defined: subspace " + std::to_string(i) +
                         " is contained in subspace " + std::to_string(j));
      }
    }
  }
  const double t = tol.equality * scale_of(y);
  CriticalSet out;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    const Vector p = subspaces[i].project(y);
    bool unique = true;
    for (std::size_t j = 0; j < subspaces.size() && unique; ++j) {
      unique = j == i || !subspaces[j].contains(p, t);
    }
    if (!unique) {
      continue;
    }
    double residual = 0.0;
    for (const auto& b : subspaces[i].basis()) {
      residual = std::max(residual, std::abs((y - p).dot(b)));
    }
    out.points.push_back({p, residual, static_cast<int>(i), false});
  }
  return out;
}

std::vector<AffineSubspace> expand_complex(const SymmetricSet& s) {
  return std::visit(
      overloaded{
          [](const family::RankAtMost& f) {
            std::vector<AffineSubspace> out;
            for (const auto& axes : subsets(f.n, f.r)) {
              out.push_back(AffineSubspace::coordinate(f.n, axes));
            }
            return out;
          },
          [](const family::EqualAbs& f) {
            std::vector<AffineSubspace> out;
            const double w = 1.0 / std::sqrt(static_cast<double>(f.k));
            const auto n = static_cast<Eigen::Index>(f.n);
            for (const auto& idx : subsets(f.n, f.k)) {
              // The first chosen coordinate keeps sign +; the line is the same otherwise.
              for (std::size_t mask = 0; mask < (std::size_t{1} << (f.k - 1)); ++mask) {
                Vector dir = Vector::Zero(n);
                dir[static_cast<Eigen::Index>(idx[0])] = w;
                for (std::size_t b = 1; b < f.k; ++b) {
                  dir[static_cast<Eigen::Index>(idx[b])] = ((mask >> (b - 1)) & 1U) ? -w : w;
                }
                out.emplace_back(Vector::Zero(n), std::vector<Vector>{dir});
              }
            }
            return out;
          },
          [](const family::ExplicitComplex& f) { return f.subspaces; },
          [&](const auto&) -> std::vector<AffineSubspace> {
            throw UnsupportedError("expand_complex: " + s.name() + " is not an affine complex");
          },
      },
      s.variant());
}

CriticalSet hyperbola_branch_critical_points(int sign, const Vector& y) {
  // q(x) = x^4 - y1 x^3 + sign * y2 x - 1, points (x, sign / x).
  const RatUniPoly q(std::vector<Rational>{Rational(-1), sign * to_rational(y[1]), Rational(0),
                                           -to_rational(y[0]), Rational(1)});
  CriticalSet out;
  for (const auto& r : real_roots_detailed(q)) {
    Vector x(2);
    x[0] = r.value;
    x[1] = sign / r.value;
    out.points.push_back({x, tangential_2d(x, y, hyperbola_gradient(x)), -1, r.multiple});
  }
  return out;
}

CriticalSet fermat_critical_points(int d, const Vector& y, const Tolerances& tol) {
  if (d < 4 || d % 2 != 0) {
    throw InputError("fermat_critical_points needs an even d >= 4");
  }
  const auto du = static_cast<unsigned>(d);
  const Rational y1 = to_rational(y[0]);
  const Rational y2 = to_rational(y[1]);

  // With x2 = s x1 the curve gamma_d is linear in x1:
  //   x1 (s - s^{d-1}) = y2 - y1 s^{d-1},
  // and substituting into x1^d (1 + s^d) = 1 gives
  //   E(s) = (y2 - y1 s^{d-1})^d (1 + s^d) - (s - s^{d-1})^d.
  const RatUniPoly numer = RatUniPoly(std::vector<Rational>{y2}) -
                           RatUniPoly::monomial(y1, du - 1);
  const RatUniPoly denom = RatUniPoly::monomial(1, 1) - RatUniPoly::monomial(1, du - 1);
  const RatUniPoly one_plus = RatUniPoly::monomial(1, 0) + RatUniPoly::monomial(1, du);
  const RatUniPoly eliminant = numer.pow(du) * one_plus - denom.pow(du);

  const double gamma_tol = 1e-10 * scale_of(y);
  auto gamma = [&](const Vector& x) {
    return std::pow(x[0], d - 1) * (x[1] - y[1]) - std::pow(x[1], d - 1) * (x[0] - y[0]);
  };

  // Polishes (F, gamma) = 0 by Newton in R^2.
  auto polish = [&](Vector x) {
    for (int it = 0; it < 8; ++it) {
      const double f = std::pow(x[0], d) + std::pow(x[1], d) - 1.0;
      const double g = gamma(x);
      Eigen::Matrix2d j;
      j(0, 0) = d * std::pow(x[0], d - 1);
      j(0, 1) = d * std::pow(x[1], d - 1);
      j(1, 0) = (d - 1) * std::pow(x[0], d - 2) * (x[1] - y[1]) - std::pow(x[1], d - 1);
      j(1, 1) = std::pow(x[0], d - 1) - (d - 1) * std::pow(x[1], d - 2) * (x[0] - y[0]);
      const Eigen::Vector2d step = j.fullPivLu().solve(Eigen::Vector2d(f, g));
      if (!step.allFinite()) {
        break;
      }
      const Vector next = x - step;
      const double old_res = std::hypot(f, g);
      const double new_res = std::hypot(std::pow(next[0], d) + std::pow(next[1], d) - 1.0, gamma(next));
      if (!(new_res < old_res)) {
        break;
      }
      x = next;
    }
    return x;
  };

  CriticalSet out;
  for (const auto& r : real_roots_detailed(eliminant)) {
    const double s = r.value;
    const double den = s - std::pow(s, d - 1);
    const double num = y[1] - y[0] * std::pow(s, d - 1);
    if (std::abs(den) < 1e-12) {
      continue;  // s in {0, +-1}: covered by the special candidates below
    }
    const double magnitude = std::pow(1.0 + std::pow(s, d), -1.0 / d);
    const double x1 = (num / den) < 0.0 ? -magnitude : magnitude;
    Vector x(2);
    x[0] = x1;
    x[1] = s * x1;
    x = polish(x);
    out.points.push_back({x, tangential_2d(x, y, fermat_gradient(d, x)), -1, r.multiple});
  }

  // Points with x1 = 0, x2 = 0 or |x1| = |x2| are missed by the slope
  // parametrisation; they are critical only for y on axes or diagonals.
  const double c = std::pow(0.5, 1.0 / d);
  const double specials[][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {c, c}, {c, -c}, {-c, c}, {-c, -c}};
  for (const auto& sp : specials) {
    Vector x(2);
    x[0] = sp[0];
    x[1] = sp[1];
    if (std::abs(gamma(x)) <= gamma_tol) {
      out.points.push_back({x, tangential_2d(x, y, fermat_gradient(d, x)), -1, false});
    }
  }
  out.normalize(tol.dedup * scale_of(y));
  return out;
}

CriticalSet critical_points_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol) {
  require_dim(s, y);
  CriticalSet out = std::visit(
      overloaded{
          [&](const family::FermatSphere& f) {
            if (f.d == 2) {
              const double norm = y.norm();
              if (norm == 0.0) {
                throw DegenerateDataError("every point of the circle is critical for y = 0");
              }
              CriticalSet c;
              c.points.push_back({y / norm, 0.0, -1, false});
              c.points.push_back({-y / norm, 0.0, -1, false});
              return c;
            }
            return fermat_critical_points(f.d, y, tol);
          },
          [&](const family::Hyperbola&) {
            CriticalSet c = hyperbola_branch_critical_points(1, y);
            CriticalSet minus = hyperbola_branch_critical_points(-1, y);
            c.points.insert(c.points.end(), minus.points.begin(), minus.points.end());
            return c;
          },
          [&](const family::FiniteOrbit& f) {
            // A finite set: every point is smooth with normal space R^n.
            CriticalSet c;
            for (auto& p : orbit_points(f.a)) {
              c.points.push_back({std::move(p), 0.0, -1, false});
            }
            return c;
          },
          [&](const auto&) { return complex_critical_points(expand_complex(s), y, tol); },
      },
      s.variant());
  out.normalize(tol.dedup * scale_of(y));
  return out;
}

CriticalSet projection_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol) {
  require_dim(s, y);
  CriticalSet candidates;
  if (s.is_complex()) {
    // Every member's projection is a point of S, smooth or not.
    const auto members = expand_complex(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
      candidates.points.push_back({members[i].project(y), 0.0, static_cast<int>(i), false});
    }
  } else {
    candidates = critical_points_diag(s, y, tol);
  }
  if (candidates.points.empty()) {
    throw InternalError("no candidate nearest points for " + s.name());
  }
  double best = INFINITY;
  for (const auto& c : candidates.points) {
    best = std::min(best, (y - c.x).norm());
  }
  const double slack = tol.equality * scale_of(y);
  CriticalSet out;
  for (auto& c : candidates.points) {
    if ((y - c.x).norm() <= best + slack) {
      out.points.push_back(std::move(c));
    }
  }
  out.normalize(tol.dedup * scale_of(y));
  return out;
}

double distance_diag(const SymmetricSet& s, const Vector& y, const Tolerances& tol) {
  const CriticalSet p = projection_diag(s, y, tol);
  return (y - p.points.front().x).norm();
}

std::uint64_t count_formula(const SymmetricSet& s) {
  return std::visit(
      overloaded{
          [](const family::RankAtMost& f) { return binomial(f.n, f.r); },
          [](const family::EqualAbs& f) { return (std::uint64_t{1} << (f.k - 1)) * binomial(f.n, f.k); },
          [](const family::FermatSphere& f) { return std::uint64_t{f.d == 2 ? 2U : 8U}; },
          [](const family::Hyperbola&) { return std::uint64_t{6}; },
          [](const family::FiniteOrbit& f) {
            // 2^(#nonzero) * n! / prod(multiplicity!)
            std::uint64_t count = 1;
            for (Eigen::Index i = 1; i <= f.a.size(); ++i) {
              count *= static_cast<std::uint64_t>(i);
            }
            Eigen::Index i = 0;
            while (i < f.a.size()) {
              Eigen::Index j = i;
              while (j < f.a.size() && f.a[j] == f.a[i]) {
                ++j;
              }
              for (Eigen::Index m = 2; m <= j - i; ++m) {
                count /= static_cast<std::uint64_t>(m);
              }
              i = j;
            }
            const auto nonzero = (f.a.array() != 0.0).count();
            return count << nonzero;
          },
          [](const family::ExplicitComplex& f) { return static_cast<std::uint64_t>(f.subspaces.size()); },
      },
      s.variant());
}

double criticality_residual(const SymmetricSet& s, const Vector& x, const Vector& y,
                            const Tolerances& tol) {
  require_dim(s, x);
  require_dim(s, y);
  return std::visit(
      overloaded{
          [&](const family::FermatSphere& f) { return tangential_2d(x, y, fermat_gradient(f.d, x)); },
          [&](const family::Hyperbola&) { return tangential_2d(x, y, hyperbola_gradient(x)); },
          [&](const family::FiniteOrbit&) { return 0.0; },
          [&](const auto&) {
            const auto members = expand_complex(s);
            const double t = tol.equality * scale_of(x);
            const AffineSubspace* home = nullptr;
            for (const auto& m : members) {
              if (m.contains(x, t)) {
                if (home != nullptr) {
                  throw RefusalError("point lies on two members of the complex (not smooth)");
                }
                home = &m;
              }
            }
            if (home == nullptr) {
              throw InputError("point is not in " + s.name());
            }
            double r = 0.0;
            for (const auto& b : home->basis()) {
              r = std::max(r, std::abs((y - x).dot(b)));
            }
            return r;
          },
      },
      s.variant());
}

}  // namespace edcrit
