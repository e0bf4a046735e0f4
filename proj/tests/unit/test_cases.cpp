#include <map>

#include "doctest.h"
#include "edcrit/cases.hpp"
#include "edcrit/errors.hpp"

using namespace edcrit;

namespace {

double disc(const RegionVerdict& v, const std::string& name) {
  for (const auto& [k, val] : v.discriminants)
    if (k == name) return val;
  FAIL("missing discriminant " << name);
  return 0.0;
}

}  // namespace

TEST_CASE("SL2 discriminants") {
  CHECK(polys::d_plus().eval(Eigen::Vector2d(0, 0)) == -256.0);
  CHECK(polys::d_minus().eval(Eigen::Vector2d(0, 0)) == -256.0);
  // D+(a, a) = 4 (a^2 - 4)^3
  for (double a : {0.5, 1.0, 3.0}) {
    const double want = 4 * std::pow(a * a - 4, 3);
    CHECK(polys::d_plus().eval(Eigen::Vector2d(a, a)) == doctest::Approx(want));
    CHECK(polys::d_minus().eval(Eigen::Vector2d(a, -a)) == doctest::Approx(want));
  }
}

TEST_CASE("classify_sl2 examples") {
  const auto origin = classify_sl2(Eigen::Vector2d(0, 0));
  CHECK(origin.predicted == 4);
  CHECK(origin.observed == 4);
  const auto v30 = classify_sl2(Eigen::Vector2d(3, 0));
  CHECK(v30.predicted == 4);
  CHECK(disc(v30, "D+") == -2443.0);
  CHECK(disc(v30, "D-") == -2443.0);
  const auto v33 = classify_sl2(Eigen::Vector2d(3, 3));
  CHECK(disc(v33, "D+") == 500.0);  // 4 (3^2 - 4)^3
  CHECK(v33.predicted == 6);
  CHECK(v33.observed == 6);
  CHECK(v33.points.size() == 6);
  CHECK_THROWS_AS(classify_sl2(Eigen::Vector2d(2, 2)), BoundaryError);
  CHECK_THROWS_AS(classify_sl2(Eigen::Vector2d(2, -2)), BoundaryError);
  CHECK_THROWS_AS(classify_sl2(Eigen::Vector3d(1, 2, 3)), InputError);
}

TEST_CASE("parabola_case examples") {
  const auto a = parabola_case(Eigen::Vector2d(0, 1));
  CHECK(disc(a, "evolute") == 2.0);
  CHECK(a.predicted == 3);
  CHECK(a.observed == 3);
  const auto b = parabola_case(Eigen::Vector2d(0, 0));
  CHECK(disc(b, "evolute") == -2.0);
  CHECK(b.predicted == 1);
  CHECK(b.observed == 1);
  CHECK(b.points.points[0].x.norm() < 1e-15);
  CHECK_THROWS_AS(parabola_case(Eigen::Vector2d(0, 0.5)), BoundaryError);
}

TEST_CASE("umbrella polynomials") {
  const auto& sigma = polys::umbrella_discriminant();
  CHECK(sigma.terms().size() == 45);
  for (const auto& [e, c] : sigma.terms()) CHECK(e[0] + e[1] + e[2] == 12);
  CHECK(polys::umbrella_singular_factor_quartic().eval_exact({Rational(-2), Rational(-1), Rational(2)}) == 0);
  CHECK(polys::umbrella_singular_factor_axis().eval(Eigen::Vector3d(0, 0, 5)) == 0.0);
  CHECK(polys::umbrella_equation().eval(Eigen::Vector3d(1, 0, 1)) == 0.0);
}

TEST_CASE("umbrella_case") {
  CHECK_THROWS_AS(umbrella_case(Eigen::Vector3d(-2, -1, 2)), BoundaryError);
  CHECK_THROWS_AS(umbrella_case(Eigen::Vector3d(0, 0, 1.5)), BoundaryError);
  const auto v = umbrella_case(Eigen::Vector3d(1, 1, 0.1));
  CHECK((v.predicted == 1 || v.predicted == 3));
  CHECK(v.observed == v.predicted);
  CHECK(v.predicted_ed == v.predicted + 1);
  CHECK(v.observed_ed == v.predicted + 1);
  CHECK((*v.observed_ed == 2 || *v.observed_ed == 4));

  // y3 = 0: the axis point is the singular origin and is not counted
  const auto flat = umbrella_case(Eigen::Vector3d(0.7, -1.2, 0.0));
  CHECK(flat.observed == flat.predicted);
  CHECK(flat.observed_ed == flat.observed);

  // predictions only
  const auto quick = umbrella_case(Eigen::Vector3d(1, 1, 0.1), 0);
  CHECK_FALSE(quick.observed.has_value());
}

TEST_CASE("ledger rows") {
  const auto rows = ledger_check(false);
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> table;
  for (const auto& r : rows) {
    CHECK(r.c_sharp <= r.ed_degree);
    CHECK(r.pass);
    CHECK_FALSE(r.empirical_max.has_value());
    table[r.name] = {r.c_sharp, r.ed_degree};
  }
  CHECK(table["R^{3x4}_2"] == std::pair<std::uint64_t, std::uint64_t>{3, 3});
  CHECK(table["O^3"] == std::pair<std::uint64_t, std::uint64_t>{8, 8});
  CHECK(table["SL2^+-"] == std::pair<std::uint64_t, std::uint64_t>{6, 8});
  CHECK(table["F_{2,2,4}"] == std::pair<std::uint64_t, std::uint64_t>{8, 16});
  CHECK(table["F_{2,2,6}"].second == 34);
  CHECK(table["F_{2,2,8}"].second == 64);
  CHECK(table["F_{2,2,10}"].second == 98);
  CHECK(table["E"] == std::pair<std::uint64_t, std::uint64_t>{6, 6});
  CHECK(table["Cartan umbrella"] == std::pair<std::uint64_t, std::uint64_t>{4, 7});
}
