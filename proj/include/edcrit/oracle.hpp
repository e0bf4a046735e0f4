#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "edcrit/multipoly.hpp"
#include "edcrit/numlin.hpp"
#include "edcrit/symsets.hpp"

namespace edcrit {

/// The real zero set of polynomial equations in R^n. A point is regular when
/// the Jacobian has rank `codim` (default: the number of equations), judged
/// with a relative singular value threshold.
struct ImplicitSet {
  std::vector<MultiPoly> equations;
  std::size_t ambient_dim = 0;
  std::size_t codim = 0;
  double rank_threshold = 1e-6;

  static ImplicitSet make(std::vector<MultiPoly> equations);

  Vector values(const Vector& x) const;
  Matrix jacobian(const Vector& x) const;
  bool is_regular(const Vector& x) const;
};

struct OracleReport {
  CriticalSet critical_points;
  std::size_t starts_used = 0;
  std::size_t converged = 0;
  std::size_t duplicates_merged = 0;
  std::size_t singular_rejected = 0;
  std::uint64_t seed = 0;
};

/// Regular ED critical points of y on V by damped Newton on the Lagrange
/// system x - y + J(x)^T lambda = 0, f(x) = 0, from `starts` seeded random
/// initial points. Heuristic: a missed point lowers recall, never precision.
OracleReport oracle_critical_points(const ImplicitSet& v, const Vector& y, std::size_t starts,
                                    std::uint64_t seed);

struct CountHistogram {
  std::map<std::size_t, std::size_t> counts;  // critical point count -> samples
  std::size_t max = 0;
  std::size_t samples = 0;
  std::size_t errors = 0;
  std::vector<std::string> error_messages;  // first few, for diagnostics
  std::uint64_t seed = 0;
};

/// Applies `solver` to `samples` standard Gaussian points of R^dim. Samples on
/// which the solver throws an edcrit::Error are counted in `errors` and skipped.
CountHistogram empirical_count(const std::function<std::size_t(const Vector&)>& solver,
                               std::size_t dim, std::size_t samples, std::uint64_t seed);

/// Counts of critical_points_diag for Gaussian y in R^n.
CountHistogram empirical_count_diag(const SymmetricSet& s, std::size_t samples, std::uint64_t seed,
                                    const Tolerances& tol = {});

/// Counts of matrix_critical_points for Gaussian n x t matrices.
CountHistogram empirical_count_matrix(const SymmetricSet& s, std::size_t t, std::size_t samples,
                                      std::uint64_t seed, const Tolerances& tol = {});

}  // namespace edcrit
