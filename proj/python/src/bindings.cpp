#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edcrit/cases.hpp"
#include "edcrit/errors.hpp"
#include "edcrit/io.hpp"
#include "edcrit/oracle.hpp"
#include "edcrit/symsets.hpp"
#include "edcrit/transfer.hpp"

namespace py = pybind11;
using edcrit::io::Json;

namespace {

// Results travel through the same JSON shapes the CLI prints.
py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) {
        out.append(to_py(e));
      }
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) {
        out[py::str(k)] = to_py(v);
      }
      return out;
    }
    default:
      throw edcrit::InputError("unsupported JSON value");
  }
}

Json from_py(py::handle h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    Json out = Json::object();
    for (const auto& [k, v] : h.cast<py::dict>()) {
      out[py::str(k).cast<std::string>()] = from_py(v);
    }
    return out;
  }
  if (py::isinstance<py::sequence>(h) || py::isinstance<py::array>(h)) {
    Json out = Json::array();
    for (const auto& v : py::iter(h)) {
      out.push_back(from_py(v));
    }
    return out;
  }
  // numpy scalars and anything else float-like
  return h.cast<double>();
}

edcrit::SymmetricSet as_set(py::handle h) {
  if (py::isinstance<edcrit::SymmetricSet>(h)) {
    return h.cast<edcrit::SymmetricSet>();
  }
  return edcrit::io::set_from_json(from_py(h));
}

edcrit::Tolerances tolerances(std::optional<double> tol) {
  edcrit::Tolerances t;
  if (tol) {
    t.equality = *tol;
  }
  return t;
}

py::array_t<double> as_array(py::handle y) {
  return py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(y);
}

edcrit::Vector as_vector(const py::array_t<double>& a) {
  if (a.ndim() != 1) {
    throw edcrit::InputError("expected a 1-d array");
  }
  edcrit::Vector v(a.shape(0));
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    v[i] = a.at(i);
  }
  return v;
}

edcrit::Matrix as_matrix(const py::array_t<double>& a) {
  if (a.ndim() != 2) {
    throw edcrit::InputError("expected a 2-d array");
  }
  edcrit::Matrix m(a.shape(0), a.shape(1));
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    for (py::ssize_t j = 0; j < a.shape(1); ++j) {
      m(i, j) = a.at(i, j);
    }
  }
  return m;
}

// Critical sets come back with numpy points; the other fields follow the JSON shape.
py::dict to_py(const edcrit::CriticalSet& c) {
  py::dict d = to_py(edcrit::io::to_json(c));
  py::list points;
  for (const auto& p : c.points) points.append(py::cast(p.x));
  d["points"] = points;
  return d;
}

py::dict to_py(const edcrit::MatrixCriticalSet& c) {
  py::dict d = to_py(edcrit::io::to_json(c));
  py::list points;
  py::list diag;
  for (const auto& m : c.points) points.append(py::cast(m));
  for (const auto& v : c.source_diag) diag.append(py::cast(v));
  d["points"] = points;
  d["source_diag"] = diag;
  return d;
}

py::object critical_points(py::handle set, py::handle y, std::optional<double> tol) {
  const auto s = as_set(set);
  const auto a = as_array(y);
  if (a.ndim() == 2) {
    return to_py(edcrit::matrix_critical_points(s, as_matrix(a), tolerances(tol)));
  }
  return to_py(edcrit::critical_points_diag(s, as_vector(a), tolerances(tol)));
}

py::object projection(py::handle set, py::handle y, std::optional<double> tol) {
  const auto s = as_set(set);
  const auto a = as_array(y);
  if (a.ndim() == 2) {
    return to_py(edcrit::matrix_projection(s, as_matrix(a), tolerances(tol)));
  }
  return to_py(edcrit::projection_diag(s, as_vector(a), tolerances(tol)));
}

double distance(py::handle set, py::handle y, std::optional<double> tol) {
  const auto s = as_set(set);
  const auto a = as_array(y);
  if (a.ndim() == 2) {
    return edcrit::matrix_distance(s, as_matrix(a), tolerances(tol));
  }
  return edcrit::distance_diag(s, as_vector(a), tolerances(tol));
}

bool membership(py::handle set, py::handle x, double tol) {
  const auto s = as_set(set);
  const auto a = as_array(x);
  if (a.ndim() == 2) {
    return edcrit::matrix_membership(s, as_matrix(a), tol);
  }
  return edcrit::membership(s, as_vector(a), tol);
}

py::object classify(const std::string& name, py::handle y, std::size_t starts, std::uint64_t seed) {
  const edcrit::Vector v = as_vector(as_array(y));
  if (name == "sl2") return to_py(edcrit::io::to_json(edcrit::classify_sl2(v)));
  if (name == "parabola") return to_py(edcrit::io::to_json(edcrit::parabola_case(v)));
  if (name == "umbrella") return to_py(edcrit::io::to_json(edcrit::umbrella_case(v, starts, seed)));
  throw edcrit::InputError("unknown case \"" + name + "\" (sl2, parabola, umbrella)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ED critical points on orthogonally invariant matrix sets";

  auto base = py::register_exception<edcrit::Error>(m, "EdcritError");
  py::register_exception<edcrit::InputError>(m, "InputError", base.ptr());
  auto refusal = py::register_exception<edcrit::RefusalError>(m, "RefusalError", base.ptr());
  py::register_exception<edcrit::BoundaryError>(m, "BoundaryError", refusal.ptr());
  py::register_exception<edcrit::DegenerateDataError>(m, "DegenerateDataError", refusal.ptr());
  py::register_exception<edcrit::UnsupportedError>(m, "UnsupportedError", base.ptr());
  py::register_exception<edcrit::InternalError>(m, "InternalError", base.ptr());

  py::class_<edcrit::SymmetricSet>(m, "SymmetricSet")
      .def_static("rank_at_most", &edcrit::SymmetricSet::rank_at_most, py::arg("n"), py::arg("r"))
      .def_static("equal_abs", &edcrit::SymmetricSet::equal_abs, py::arg("n"), py::arg("k"))
      .def_static("fermat", &edcrit::SymmetricSet::fermat, py::arg("d"))
      .def_static("hyperbola", &edcrit::SymmetricSet::hyperbola)
      .def_static("orbit",
                  [](py::handle a) { return edcrit::SymmetricSet::orbit(as_vector(as_array(a))); },
                  py::arg("a"))
      .def_static("from_dict",
                  [](py::handle d) { return edcrit::io::set_from_json(from_py(d)); })
      .def("to_dict", [](const edcrit::SymmetricSet& s) { return to_py(edcrit::io::to_json(s)); })
      .def_property_readonly("name", &edcrit::SymmetricSet::name)
      .def_property_readonly("ambient_dim", &edcrit::SymmetricSet::ambient_dim)
      .def("count_formula", [](const edcrit::SymmetricSet& s) { return edcrit::count_formula(s); })
      .def("__repr__", [](const edcrit::SymmetricSet& s) { return "SymmetricSet(" + s.name() + ")"; });

  m.def("critical_points", &critical_points, py::arg("set"), py::arg("y"),
        py::arg("tol") = py::none(),
        "Critical points of y on S (1-d y) or on sigma^{-1}(S) (2-d y).");
  m.def("projection", &projection, py::arg("set"), py::arg("y"), py::arg("tol") = py::none());
  m.def("distance", &distance, py::arg("set"), py::arg("y"), py::arg("tol") = py::none());
  m.def("membership", &membership, py::arg("set"), py::arg("x"), py::arg("tol") = 1e-9);
  m.def("count_formula", [](py::handle set) { return edcrit::count_formula(as_set(set)); },
        py::arg("set"));
  m.def(
      "normal_vector_check",
      [](py::handle set, py::handle x, py::handle z, double tol) {
        return edcrit::normal_vector_check(as_set(set), as_matrix(as_array(x)),
                                           as_matrix(as_array(z)), tol);
      },
      py::arg("set"), py::arg("x"), py::arg("z"), py::arg("tol") = 1e-8);
  m.def(
      "empirical_count",
      [](py::handle set, std::size_t samples, std::uint64_t seed, std::size_t cols) {
        const auto s = as_set(set);
        const auto h = cols > 0 ? edcrit::empirical_count_matrix(s, cols, samples, seed)
                                : edcrit::empirical_count_diag(s, samples, seed);
        return to_py(edcrit::io::to_json(h));
      },
      py::arg("set"), py::arg("samples") = 100, py::arg("seed") = 0, py::arg("cols") = 0);
  m.def("classify", &classify, py::arg("case"), py::arg("y"), py::arg("starts") = 2000,
        py::arg("seed") = 0);
  m.def(
      "lift",
      [](py::handle poly, std::size_t t) {
        const auto f = edcrit::io::multipoly_from_json(from_py(poly));
        return to_py(edcrit::io::to_json(edcrit::lift_invariant_poly(f, t == 0 ? f.nvars() : t)));
      },
      py::arg("poly"), py::arg("t") = 0,
      "Lift {\"nvars\", \"terms\"} to the entries of an n x t matrix (X_ij at i*t + j).");
  m.def(
      "ledger",
      [](bool empirical, std::uint64_t seed) {
        return to_py(edcrit::io::to_json(edcrit::ledger_check(empirical, seed)));
      },
      py::arg("empirical") = true, py::arg("seed") = 0);
}
