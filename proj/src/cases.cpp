#include "edcrit/cases.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <tuple>

#include "edcrit/errors.hpp"
#include "edcrit/oracle.hpp"
#include "edcrit/unipoly.hpp"

namespace edcrit {

namespace {

struct Term {
  long coef;
  int e1;
  int e2;
  int e3;
};

MultiPoly build(std::size_t nvars, std::initializer_list<Term> terms) {
  std::vector<std::pair<Exponent, Rational>> t;
  for (const auto& term : terms) {
    Exponent e{term.e1, term.e2, term.e3};
    e.resize(nvars);
    t.emplace_back(std::move(e), Rational(term.coef));
  }
  return MultiPoly::from_terms(nvars, t);
}

void require_size(const Vector& y, Eigen::Index n, const char* what) {
  if (y.size() != n) {
    throw InputError(std::string(what) + " needs a data point with " + std::to_string(n) +
                     " coordinates, got " + std::to_string(y.size()));
  }
  if (!y.allFinite()) {
    throw InputError(std::string(what) + ": data point has non-finite entries");
  }
}

std::string describe(const std::vector<std::pair<std::string, double>>& values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << (i ? ", " : "") << values[i].first << " = " << values[i].second;
  }
  return os.str();
}

}  // namespace

namespace polys {

const MultiPoly& d_plus() {
  static const MultiPoly p = build(2, {{-256, 0, 0, 0},
                                       {192, 1, 1, 0},
                                       {6, 2, 2, 0},
                                       {4, 3, 3, 0},
                                       {-27, 4, 0, 0},
                                       {-27, 0, 4, 0}});
  return p;
}

const MultiPoly& d_minus() {
  static const MultiPoly p = build(2, {{-256, 0, 0, 0},
                                       {-192, 1, 1, 0},
                                       {6, 2, 2, 0},
                                       {-4, 3, 3, 0},
                                       {-27, 4, 0, 0},
                                       {-27, 0, 4, 0}});
  return p;
}

const MultiPoly& parabola_evolute() {
  static const MultiPoly p =
      build(2, {{16, 0, 3, 0}, {-27, 2, 0, 0}, {-24, 0, 2, 0}, {12, 0, 1, 0}, {-2, 0, 0, 0}});
  return p;
}

const MultiPoly& umbrella_discriminant() {
  static const MultiPoly p = build(
      3, {{256, 12, 0, 0},      {-35328, 10, 2, 0},   {-108984, 8, 4, 0},   {-111867, 6, 6, 0},
          {-93975, 4, 8, 0},    {-9216, 2, 10, 0},    {-2048, 0, 12, 0},    {-2304, 11, 0, 1},
          {-2112, 9, 2, 1},     {-149280, 7, 4, 1},   {-116868, 5, 6, 1},   {53532, 3, 8, 1},
          {34560, 1, 10, 1},    {6912, 10, 0, 2},     {14016, 8, 2, 2},     {-28764, 6, 4, 2},
          {41502, 4, 6, 2},     {-86430, 2, 8, 2},    {-768, 0, 10, 2},     {-7936, 9, 0, 3},
          {150720, 7, 2, 3},    {-200148, 5, 4, 3},   {-411728, 3, 6, 3},   {1476, 1, 8, 3},
          {9216, 8, 0, 4},      {-46656, 6, 2, 4},    {31908, 4, 4, 4},     {110817, 2, 6, 4},
          {4953, 0, 8, 4},      {-27648, 7, 0, 5},    {23808, 5, 2, 5},     {91236, 3, 4, 5},
          {-40284, 1, 6, 5},    {28672, 6, 0, 6},     {-196992, 4, 2, 6},   {-240480, 2, 4, 6},
          {-2592, 0, 6, 6},     {-9216, 5, 0, 7},     {14208, 3, 2, 7},     {28800, 1, 4, 7},
          {27648, 4, 0, 8},     {39168, 2, 2, 8},     {2304, 0, 4, 8},      {-27648, 3, 0, 9},
          {-27648, 1, 2, 9}});
  return p;
}

const MultiPoly& umbrella_singular_factor_axis() {
  static const MultiPoly p = build(3, {{1, 2, 0, 0}, {1, 0, 2, 0}});
  return p;
}

const MultiPoly& umbrella_singular_factor_quartic() {
  static const MultiPoly p = build(3, {{4, 4, 0, 0},
                                       {8, 2, 2, 0},
                                       {4, 0, 4, 0},
                                       {4, 3, 0, 1},
                                       {36, 1, 2, 1},
                                       {27, 0, 2, 2}});
  return p;
}

const MultiPoly& umbrella_equation() {
  static const MultiPoly p = build(3, {{1, 2, 0, 1}, {1, 0, 2, 1}, {-1, 3, 0, 0}});
  return p;
}

}  // namespace polys

int exact_sign(const MultiPoly& p, const Vector& y) { return p.sign_at(y, 1e-6); }

RegionVerdict classify_sl2(const Vector& y, bool observe) {
  require_size(y, 2, "classify_sl2");
  RegionVerdict v;
  v.discriminants = {{"D+", polys::d_plus().eval(y)}, {"D-", polys::d_minus().eval(y)}};
  const int sp = exact_sign(polys::d_plus(), y);
  const int sm = exact_sign(polys::d_minus(), y);
  if (sp == 0 || sm == 0) {
    throw BoundaryError("data point lies on the SL2 discriminant locus (" +
                        describe(v.discriminants) + ")");
  }
  v.predicted = (sp > 0 || sm > 0) ? 6 : 4;
  if (observe) {
    for (int branch : {1, -1}) {
      CriticalSet c = hyperbola_branch_critical_points(branch, y);
      v.points.points.insert(v.points.points.end(), c.points.begin(), c.points.end());
    }
    v.observed = static_cast<int>(v.points.size());
    if (*v.observed != v.predicted) {
      throw InternalError("SL2 root count disagrees with the discriminant signs (" +
                          describe(v.discriminants) + ")");
    }
  }
  return v;
}

RegionVerdict parabola_case(const Vector& y) {
  require_size(y, 2, "parabola_case");
  RegionVerdict v;
  v.discriminants = {{"evolute", polys::parabola_evolute().eval(y)}};
  const int s = exact_sign(polys::parabola_evolute(), y);
  if (s == 0) {
    throw BoundaryError("data point lies on the evolute of the parabola (" +
                        describe(v.discriminants) + ")");
  }
  v.predicted = s > 0 ? 3 : 1;
  // (y - (x, x^2)) . (1, 2x) = 0, times -2.
  const RatUniPoly cubic(std::vector<Rational>{Rational(-2) * to_rational(y[0]),
                                               Rational(2) - Rational(4) * to_rational(y[1]),
                                               Rational(0), Rational(4)});
  for (const auto& r : real_roots_detailed(cubic, 1e-12)) {
    Vector x(2);
    x << r.value, r.value * r.value;
    const Vector d = y - x;
    const double residual = std::abs(d[0] + 2.0 * r.value * d[1]) / std::hypot(1.0, 2.0 * r.value);
    v.points.points.push_back({x, residual, -1, r.multiple});
  }
  v.observed = static_cast<int>(v.points.size());
  return v;
}

RegionVerdict umbrella_case(const Vector& y, std::size_t starts, std::uint64_t seed) {
  require_size(y, 3, "umbrella_case");
  RegionVerdict v;
  v.discriminants = {{"discriminant", polys::umbrella_discriminant().eval(y)},
                     {"singular_axis", polys::umbrella_singular_factor_axis().eval(y)},
                     {"singular_quartic", polys::umbrella_singular_factor_quartic().eval(y)}};
  const int sd = exact_sign(polys::umbrella_discriminant(), y);
  if (exact_sign(polys::umbrella_singular_factor_axis(), y) == 0 ||
      exact_sign(polys::umbrella_singular_factor_quartic(), y) == 0) {
    throw BoundaryError("data point lies on the ED data singular locus of the umbrella (" +
                        describe(v.discriminants) + ")");
  }
  if (sd == 0) {
    throw BoundaryError("data point lies on the ED discriminant of the umbrella (" +
                        describe(v.discriminants) + ")");
  }
  const int axis = y[2] != 0.0 ? 1 : 0;
  v.predicted = sd > 0 ? 3 : 1;
  v.predicted_ed = v.predicted + axis;
  if (starts > 0) {
    const ImplicitSet umbrella = ImplicitSet::make({polys::umbrella_equation()});
    OracleReport report = oracle_critical_points(umbrella, y, starts, seed);
    v.points = std::move(report.critical_points);
    v.observed = static_cast<int>(v.points.size());
    if (axis) {
      // Smooth but not regular: the only point of the x3-axis with
      // (y - x) orthogonal to the axis.
      Vector x(3);
      x << 0.0, 0.0, y[2];
      v.points.points.push_back({x, 0.0, -1, false});
    }
    v.observed_ed = static_cast<int>(v.points.size());
  }
  return v;
}

std::vector<LedgerRow> ledger_check(bool empirical, std::uint64_t seed) {
  std::vector<LedgerRow> rows;
  auto add = [&](std::string name, std::uint64_t c, std::uint64_t ed,
                 const std::function<CountHistogram()>& sample) {
    LedgerRow r{std::move(name), c, ed, std::nullopt, 0, c <= ed};
    if (empirical && sample) {
      const CountHistogram h = sample();
      r.empirical_max = h.max;
      r.samples = h.samples;
      r.pass = r.pass && h.max == c;
    }
    rows.push_back(std::move(r));
  };

  const auto rank = SymmetricSet::rank_at_most(3, 2);
  add("R^{3x4}_2", count_formula(rank), 3,
      [&] { return empirical_count_matrix(rank, 4, 100, seed); });
  const auto o3 = SymmetricSet::orbit(Vector::Ones(3));
  add("O^3", count_formula(o3), 8, [&] { return empirical_count_matrix(o3, 3, 100, seed); });
  const auto h = SymmetricSet::hyperbola();
  // Only about 1 in 2200 standard Gaussian points lands in the six-point region.
  add("SL2^+-", count_formula(h), 8, [&] { return empirical_count_diag(h, 20000, seed); });
  // The eliminant has degree d^2, so exact isolation gets slow for large d.
  const std::tuple<int, std::uint64_t, std::size_t> fermat[] = {
      {4, 16, 200}, {6, 34, 30}, {8, 64, 15}, {10, 98, 8}};
  for (const auto& [d, ed, samples] : fermat) {
    const auto f = SymmetricSet::fermat(d);
    add("F_{2,2," + std::to_string(d) + "}", count_formula(f), ed,
        [f, samples = samples, seed] { return empirical_count_diag(f, samples, seed); });
  }
  const auto e = SymmetricSet::equal_abs(3, 2);
  add("E", count_formula(e), 6, [&] { return empirical_count_matrix(e, 3, 100, seed); });
  add("Cartan umbrella", 4, 7, [&] {
    return empirical_count(
        [&](const Vector& y) {
          return static_cast<std::size_t>(*umbrella_case(y, 400, seed).observed_ed);
        },
        3, 40, seed);
  });
  return rows;
}

}  // namespace edcrit
