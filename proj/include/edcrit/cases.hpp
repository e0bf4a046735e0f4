#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edcrit/multipoly.hpp"
#include "edcrit/numlin.hpp"
#include "edcrit/symsets.hpp"

namespace edcrit {

/// Classification of a data point by the sign of discriminant polynomials.
/// For the umbrella `predicted`/`observed` count regular critical points and
/// the `_ed` fields count all ED critical points.
struct RegionVerdict {
  std::vector<std::pair<std::string, double>> discriminants;
  int predicted = 0;
  std::optional<int> observed;
  std::optional<int> predicted_ed;
  std::optional<int> observed_ed;
  CriticalSet points;
};

namespace polys {

/// Discriminants of x^4 - y1 x^3 + y2 x - 1 and x^4 - y1 x^3 - y2 x - 1.
const MultiPoly& d_plus();
const MultiPoly& d_minus();

/// 16 y2^3 - 27 y1^2 - 24 y2^2 + 12 y2 - 2, the evolute of x2 = x1^2.
const MultiPoly& parabola_evolute();

/// Degree-12 ED discriminant of x3 (x1^2 + x2^2) = x1^3.
const MultiPoly& umbrella_discriminant();

/// The two factors of the umbrella's ED data singular locus.
const MultiPoly& umbrella_singular_factor_axis();   // y1^2 + y2^2
const MultiPoly& umbrella_singular_factor_quartic();

/// x3 (x1^2 + x2^2) - x1^3
const MultiPoly& umbrella_equation();

}  // namespace polys

/// Exact sign of p at a floating point (rational evaluation near zero).
int exact_sign(const MultiPoly& p, const Vector& y);

/// SL2 region of y: 6 critical points if D+ > 0 or D- > 0, else 4. With
/// `observe`, exact Sturm counts of both quartics are attached and must
/// agree. Throws BoundaryError when D+ or D- vanishes at y.
RegionVerdict classify_sl2(const Vector& y, bool observe = true);

/// Parabola x2 = x1^2: 3 critical points above the evolute, 1 below, with
/// the real roots of 4x^3 + (2 - 4 y2) x - 2 y1 as observation.
RegionVerdict parabola_case(const Vector& y);

/// Cartan umbrella: predicted regular count 3 when the discriminant is
/// positive, else 1; ED count adds the axis point (0, 0, y3) when y3 != 0.
/// With starts > 0 the regular points are observed by the oracle.
/// Throws BoundaryError on the discriminant or the data singular locus.
RegionVerdict umbrella_case(const Vector& y, std::size_t starts = 2000, std::uint64_t seed = 0);

struct LedgerRow {
  std::string name;
  std::uint64_t c_sharp = 0;
  std::uint64_t ed_degree = 0;
  std::optional<std::size_t> empirical_max;
  std::size_t samples = 0;
  bool pass = false;
};

/// C# <= EDdegree for each stored row; with `empirical`, each C# is also
/// recomputed as a maximum over random data and must match.
std::vector<LedgerRow> ledger_check(bool empirical = true, std::uint64_t seed = 0);

}  // namespace edcrit
