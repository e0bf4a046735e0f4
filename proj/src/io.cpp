#include "edcrit/io.hpp"

#include <fstream>
#include <sstream>

#include "edcrit/errors.hpp"

namespace edcrit::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(context + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key, const std::string& context) {
  const Json& v = field(j, key, context);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(context + ": field \"" + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double number(const Json& j, const std::string& context) {
  if (!j.is_number()) {
    throw InputError(context + ": expected a number, got " + j.dump());
  }
  return j.get<double>();
}

Rational rational_from_json(const Json& j, const std::string& context) {
  if (j.is_number_integer()) {
    return Rational(Integer(std::to_string(j.get<long long>())));
  }
  if (j.is_number()) {
    return to_rational(j.get<double>());
  }
  if (j.is_string()) {
    try {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) {
        throw InputError(context + ": zero denominator");
      }
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw InputError(context + ": cannot parse \"" + j.get<std::string>() + "\" as a rational");
    }
  }
  throw InputError(context + ": coefficient must be a number or a rational string");
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    return q.get_num().get_si();
  }
  return q.get_str();
}

}  // namespace

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + origin + " at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Vector parse_vector_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  std::size_t index = 0;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("vector entry " + std::to_string(index) + " (\"" + item + "\") is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InputError("vector entry " + std::to_string(index) + " (\"" + item + "\") is not a number");
    }
    values.push_back(v);
    ++index;
  }
  if (values.empty()) {
    throw InputError("empty vector");
  }
  Vector out = Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
  if (!out.allFinite()) {
    throw InputError("vector has non-finite entries");
  }
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("vector must be a nonempty JSON array");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number(j[i], "vector entry " + std::to_string(i));
  }
  return v;
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    j.push_back(v[i]);
  }
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows", "matrix");
  const std::size_t cols = size_field(j, "cols", "matrix");
  const Json& data = field(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows) {
    throw InputError("matrix: \"data\" must have " + std::to_string(rows) + " rows");
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!data[r].is_array() || data[r].size() != cols) {
      throw InputError("matrix: row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          number(data[r][c], "matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

SymmetricSet set_from_json(const Json& j) {
  if (!j.is_object()) {
    throw InputError("set descriptor must be a JSON object");
  }
  const Json& fam = field(j, "family", "set descriptor");
  if (!fam.is_string()) {
    throw InputError("set descriptor: \"family\" must be a string");
  }
  const std::string family = fam.get<std::string>();
  if (family == "rank") {
    return SymmetricSet::rank_at_most(size_field(j, "n", "rank"), size_field(j, "r", "rank"));
  }
  if (family == "equal_abs") {
    return SymmetricSet::equal_abs(size_field(j, "n", "equal_abs"), size_field(j, "k", "equal_abs"));
  }
  if (family == "fermat") {
    if (j.contains("n") && j.at("n") != 2) {
      throw UnsupportedError("fermat spheres are solved only for n = 2");
    }
    return SymmetricSet::fermat(static_cast<int>(size_field(j, "d", "fermat")));
  }
  if (family == "hyperbola") {
    if (j.contains("n") && j.at("n") != 2) {
      throw UnsupportedError("the hyperbola family is solved only for n = 2");
    }
    return SymmetricSet::hyperbola();
  }
  if (family == "orbit") {
    return SymmetricSet::orbit(vector_from_json(field(j, "a", "orbit")));
  }
  if (family == "complex") {
    const Json& subs = field(j, "subspaces", "complex");
    if (!subs.is_array()) {
      throw InputError("complex: \"subspaces\" must be an array");
    }
    std::vector<AffineSubspace> members;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string ctx = "complex subspace " + std::to_string(i);
      Vector base = vector_from_json(field(subs[i], "base", ctx));
      std::vector<Vector> basis;
      const Json& b = field(subs[i], "basis", ctx);
      if (!b.is_array()) {
        throw InputError(ctx + ": \"basis\" must be an array");
      }
      for (const auto& v : b) {
        basis.push_back(vector_from_json(v));
      }
      members.emplace_back(std::move(base), std::move(basis));
    }
    return SymmetricSet::explicit_complex(std::move(members));
  }
  throw InputError("unknown set family \"" + family + "\"");
}

Json to_json(const SymmetricSet& s) {
  struct Visitor {
    Json operator()(const family::RankAtMost& f) const {
      return {{"family", "rank"}, {"n", f.n}, {"r", f.r}};
    }
    Json operator()(const family::EqualAbs& f) const {
      return {{"family", "equal_abs"}, {"n", f.n}, {"k", f.k}};
    }
    Json operator()(const family::FermatSphere& f) const { return {{"family", "fermat"}, {"d", f.d}}; }
    Json operator()(const family::Hyperbola&) const { return {{"family", "hyperbola"}}; }
    Json operator()(const family::FiniteOrbit& f) const { return {{"family", "orbit"}, {"a", to_json(f.a)}}; }
    Json operator()(const family::ExplicitComplex& f) const {
      Json subs = Json::array();
      for (const auto& m : f.subspaces) {
        Json basis = Json::array();
        for (const auto& b : m.basis()) {
          basis.push_back(to_json(b));
        }
        subs.push_back({{"base", to_json(m.base())}, {"basis", std::move(basis)}});
      }
      return {{"family", "complex"}, {"subspaces", std::move(subs)}};
    }
  };
  return std::visit(Visitor{}, s.variant());
}

MultiPoly multipoly_from_json(const Json& j) {
  const std::size_t nvars = size_field(j, "nvars", "polynomial");
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) {
    throw InputError("polynomial: \"terms\" must be an array");
  }
  std::vector<std::pair<Exponent, Rational>> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string ctx = "polynomial term " + std::to_string(i);
    const Json& e = field(terms[i], "exp", ctx);
    if (!e.is_array()) {
      throw InputError(ctx + ": \"exp\" must be an array");
    }
    Exponent exp;
    for (const auto& k : e) {
      if (!k.is_number_integer()) {
        throw InputError(ctx + ": exponents must be integers");
      }
      exp.push_back(k.get<int>());
    }
    out.emplace_back(std::move(exp), rational_from_json(field(terms[i], "coef", ctx), ctx));
  }
  return MultiPoly::from_terms(nvars, out);
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exp", e}, {"coef", rational_to_json(c)}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

RatUniPoly unipoly_from_json(const Json& j) {
  const Json& c = field(j, "coeffs", "univariate polynomial");
  if (!c.is_array()) {
    throw InputError("univariate polynomial: \"coeffs\" must be an array");
  }
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    coeffs.push_back(rational_from_json(c[i], "coefficient " + std::to_string(i)));
  }
  return RatUniPoly(std::move(coeffs));
}

Json to_json(const RatUniPoly& p) {
  Json c = Json::array();
  for (const auto& q : p.coeffs()) {
    c.push_back(rational_to_json(q));
  }
  return {{"coeffs", std::move(c)}};
}

Json to_json(const CriticalSet& c) {
  Json points = Json::array();
  Json residuals = Json::array();
  Json strata = Json::array();
  Json multiple = Json::array();
  for (const auto& p : c.points) {
    points.push_back(to_json(p.x));
    residuals.push_back(p.residual);
    strata.push_back(p.stratum);
    multiple.push_back(p.multiple);
  }
  return {{"count", c.size()},
          {"points", std::move(points)},
          {"residuals", std::move(residuals)},
          {"strata", std::move(strata)},
          {"multiple", std::move(multiple)}};
}

Json to_json(const MatrixCriticalSet& c) {
  Json points = Json::array();
  Json diag = Json::array();
  for (const auto& m : c.points) {
    points.push_back(to_json(m));
  }
  for (const auto& v : c.source_diag) {
    diag.push_back(to_json(v));
  }
  return {{"count", c.size()},
          {"points", std::move(points)},
          {"source_diag", std::move(diag)},
          {"residuals", c.residuals},
          {"non_exhaustive", c.non_exhaustive}};
}

Json to_json(const RegionVerdict& v) {
  Json disc = Json::object();
  for (const auto& [name, value] : v.discriminants) {
    disc[name] = value;
  }
  Json j = {{"discriminants", std::move(disc)}, {"predicted", v.predicted}};
  j["observed"] = v.observed ? Json(*v.observed) : Json(nullptr);
  if (v.predicted_ed) {
    j["predicted_ed"] = *v.predicted_ed;
    j["observed_ed"] = v.observed_ed ? Json(*v.observed_ed) : Json(nullptr);
  }
  if (!v.points.points.empty()) {
    j["points"] = to_json(v.points)["points"];
  }
  return j;
}

Json to_json(const CountHistogram& h) {
  Json counts = Json::object();
  for (const auto& [c, n] : h.counts) {
    counts[std::to_string(c)] = n;
  }
  return {{"histogram", std::move(counts)},
          {"max", h.max},
          {"samples", h.samples},
          {"errors", h.errors},
          {"error_messages", h.error_messages},
          {"seed", h.seed}};
}

Json to_json(const OracleReport& r) {
  return {{"critical_points", to_json(r.critical_points)},
          {"starts_used", r.starts_used},
          {"converged", r.converged},
          {"duplicates_merged", r.duplicates_merged},
          {"singular_rejected", r.singular_rejected},
          {"seed", r.seed}};
}

Json to_json(const std::vector<LedgerRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"set", r.name},
                   {"c_sharp", r.c_sharp},
                   {"ed_degree", r.ed_degree},
                   {"empirical_max", r.empirical_max ? Json(*r.empirical_max) : Json(nullptr)},
                   {"samples", r.samples},
                   {"pass", r.pass}});
  }
  return out;
}

}  // namespace edcrit::io
