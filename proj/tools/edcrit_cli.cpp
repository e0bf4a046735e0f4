// edcrit command-line front end. Reads JSON, writes JSON (CSV for plotdata).
// Exit codes: 0 ok, 1 input error, 2 refusal, 3 unsupported, 4 internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "edcrit/cases.hpp"
#include "edcrit/errors.hpp"
#include "edcrit/io.hpp"
#include "edcrit/oracle.hpp"
#include "edcrit/symsets.hpp"
#include "edcrit/transfer.hpp"

namespace {

using edcrit::io::Json;

struct Options {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;

  std::string set;
  std::string matrix;
  std::string vector;
  std::size_t samples = 100;
  std::size_t cols = 0;
  std::string case_name;
  std::string y;
  std::size_t starts = 2000;
  std::string poly;
  std::size_t n = 0;
  std::size_t t = 0;
  bool no_empirical = false;
};

edcrit::Tolerances tolerances(const Options& o) {
  edcrit::Tolerances t;
  if (o.tol) {
    if (!(*o.tol > 0.0)) {
      throw edcrit::InputError("--tol must be positive");
    }
    t.equality = *o.tol;
  }
  return t;
}

// A descriptor is either a path or inline JSON.
Json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return edcrit::io::parse(arg, "inline argument");
  }
  return edcrit::io::load_file(arg);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) {
    throw edcrit::InputError("cannot write " + o.out);
  }
  f << text;
}

void emit_json(const Options& o, Json j) {
  j["seed"] = o.seed;
  emit(o, j.dump(2) + "\n");
}

void require_data(const Options& o) {
  if (o.matrix.empty() == o.vector.empty()) {
    throw edcrit::InputError("give exactly one of --matrix or --vector");
  }
}

void cmd_critical(const Options& o) {
  require_data(o);
  const auto s = edcrit::io::set_from_json(load_json_arg(o.set));
  const auto tol = tolerances(o);
  Json j = {{"command", "critical"}, {"set", edcrit::io::to_json(s)}};
  if (!o.matrix.empty()) {
    const edcrit::Matrix y = edcrit::io::matrix_from_json(load_json_arg(o.matrix));
    const auto c = edcrit::matrix_critical_points(s, y, tol);
    j["result"] = edcrit::io::to_json(c);
    Json dist = Json::array();
    for (const auto& x : c.points) {
      dist.push_back((y - x).norm());
    }
    j["distances"] = std::move(dist);
  } else {
    const edcrit::Vector y = edcrit::io::parse_vector_list(o.vector);
    const auto c = edcrit::critical_points_diag(s, y, tol);
    j["result"] = edcrit::io::to_json(c);
    Json dist = Json::array();
    for (const auto& p : c.points) {
      dist.push_back((y - p.x).norm());
    }
    j["distances"] = std::move(dist);
  }
  emit_json(o, std::move(j));
}

void cmd_project(const Options& o) {
  require_data(o);
  const auto s = edcrit::io::set_from_json(load_json_arg(o.set));
  const auto tol = tolerances(o);
  Json j = {{"command", "project"}, {"set", edcrit::io::to_json(s)}};
  if (!o.matrix.empty()) {
    const edcrit::Matrix y = edcrit::io::matrix_from_json(load_json_arg(o.matrix));
    j["result"] = edcrit::io::to_json(edcrit::matrix_projection(s, y, tol));
    j["distance"] = edcrit::matrix_distance(s, y, tol);
  } else {
    const edcrit::Vector y = edcrit::io::parse_vector_list(o.vector);
    j["result"] = edcrit::io::to_json(edcrit::projection_diag(s, y, tol));
    j["distance"] = edcrit::distance_diag(s, y, tol);
  }
  emit_json(o, std::move(j));
}

void cmd_count(const Options& o) {
  const auto s = edcrit::io::set_from_json(load_json_arg(o.set));
  const auto tol = tolerances(o);
  const auto h = o.cols > 0 ? edcrit::empirical_count_matrix(s, o.cols, o.samples, o.seed, tol)
                            : edcrit::empirical_count_diag(s, o.samples, o.seed, tol);
  Json j = {{"command", "count"},
            {"set", edcrit::io::to_json(s)},
            {"formula", edcrit::count_formula(s)},
            {"result", edcrit::io::to_json(h)}};
  if (o.cols > 0) {
    j["matrix_cols"] = o.cols;
  }
  emit_json(o, std::move(j));
}

void cmd_classify(const Options& o) {
  const edcrit::Vector y = edcrit::io::parse_vector_list(o.y);
  edcrit::RegionVerdict v;
  if (o.case_name == "sl2") {
    v = edcrit::classify_sl2(y);
  } else if (o.case_name == "parabola") {
    v = edcrit::parabola_case(y);
  } else if (o.case_name == "umbrella") {
    v = edcrit::umbrella_case(y, o.starts, o.seed);
  } else {
    throw edcrit::InputError("unknown case \"" + o.case_name + "\" (sl2, parabola, umbrella)");
  }
  emit_json(o, {{"command", "classify"}, {"case", o.case_name}, {"result", edcrit::io::to_json(v)}});
}

void cmd_lift(const Options& o) {
  const auto f = edcrit::io::multipoly_from_json(load_json_arg(o.poly));
  if (o.n != 0 && o.n != f.nvars()) {
    throw edcrit::InputError("--n " + std::to_string(o.n) + " does not match the polynomial's " +
                             std::to_string(f.nvars()) + " variables");
  }
  const std::size_t t = o.t != 0 ? o.t : f.nvars();
  const auto p = edcrit::lift_invariant_poly(f, t);
  emit_json(o, {{"command", "lift"},
                {"n", f.nvars()},
                {"t", t},
                {"variable_order", "X_ij has index i*t + j"},
                {"result", edcrit::io::to_json(p)}});
}

std::string plot_evolute() {
  std::ostringstream os;
  os.precision(17);
  os << "curve,y1,y2\n";
  for (int i = -200; i <= 200; ++i) {
    const double x = i / 100.0;
    os << "parabola," << x << ',' << x * x << '\n';
  }
  // The evolute polynomial is increasing in y2 for fixed y1; bisect along
  // vertical rays.
  const auto& ev = edcrit::polys::parabola_evolute();
  for (int i = -200; i <= 200; ++i) {
    const double y1 = i / 100.0;
    double lo = -10.0;
    double hi = 10.0;
    edcrit::Vector p(2);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) {
        break;
      }
      p << y1, mid;
      (edcrit::exact_sign(ev, p) < 0 ? lo : hi) = mid;
    }
    os << "evolute," << y1 << ',' << 0.5 * (lo + hi) << '\n';
  }
  return os.str();
}

std::string plot_e32() {
  std::ostringstream os;
  os.precision(17);
  os << "line,s,x1,x2,x3\n";
  const auto lines = edcrit::expand_complex(edcrit::SymmetricSet::equal_abs(3, 2));
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& dir = lines[l].basis().front();
    for (int i = -20; i <= 20; ++i) {
      const double s = i / 10.0;
      const edcrit::Vector x = lines[l].base() + s * dir;
      os << l << ',' << s << ',' << x[0] << ',' << x[1] << ',' << x[2] << '\n';
    }
  }
  return os.str();
}

std::string plot_sl2() {
  std::ostringstream os;
  os.precision(17);
  os << "y1,y2,d_plus,d_minus,count\n";
  edcrit::Vector y(2);
  for (int i = -50; i <= 50; ++i) {
    for (int j = -50; j <= 50; ++j) {
      y << i / 10.0, j / 10.0;
      const int sp = edcrit::exact_sign(edcrit::polys::d_plus(), y);
      const int sm = edcrit::exact_sign(edcrit::polys::d_minus(), y);
      os << y[0] << ',' << y[1] << ',' << edcrit::polys::d_plus().eval(y) << ','
         << edcrit::polys::d_minus().eval(y) << ',';
      if (sp != 0 && sm != 0) {
        os << ((sp > 0 || sm > 0) ? 6 : 4);
      }
      os << '\n';
    }
  }
  return os.str();
}

void cmd_plotdata(const Options& o) {
  std::string body;
  if (o.case_name == "evolute") {
    body = plot_evolute();
  } else if (o.case_name == "e32") {
    body = plot_e32();
  } else if (o.case_name == "sl2regions") {
    body = plot_sl2();
  } else {
    throw edcrit::InputError("unknown plot \"" + o.case_name + "\" (evolute, e32, sl2regions)");
  }
  emit(o, "# edcrit plotdata " + o.case_name + " seed=" + std::to_string(o.seed) + "\n" + body);
}

void cmd_ledger(const Options& o) {
  const auto rows = edcrit::ledger_check(!o.no_empirical, o.seed);
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.pass;
  }
  emit_json(o, {{"command", "ledger"}, {"rows", edcrit::io::to_json(rows)}, {"all_pass", all}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ED critical points on orthogonally invariant matrix sets"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "random seed (echoed in the output)");
  app.add_option("--tol", o.tol, "equality tolerance (relative)");
  app.add_option("--out", o.out, "write the output to this file instead of stdout");

  auto* critical = app.add_subcommand("critical", "ED critical points of data on a set");
  critical->add_option("--set", o.set, "set descriptor (JSON file or inline JSON)")->required();
  critical->add_option("--matrix", o.matrix, "data matrix (JSON file)");
  critical->add_option("--vector", o.vector, "diagonal data as \"v1,v2,...\"");

  auto* project = app.add_subcommand("project", "nearest points and distance");
  project->add_option("--set", o.set, "set descriptor")->required();
  project->add_option("--matrix", o.matrix, "data matrix (JSON file)");
  project->add_option("--vector", o.vector, "diagonal data as \"v1,v2,...\"");

  auto* count = app.add_subcommand("count", "empirical critical point counts over Gaussian data");
  count->add_option("--set", o.set, "set descriptor")->required();
  count->add_option("--samples", o.samples, "number of samples")->check(CLI::PositiveNumber);
  count->add_option("--cols", o.cols, "sample n x cols matrices instead of vectors");

  auto* classify = app.add_subcommand("classify", "region classification by discriminant signs");
  classify->add_option("--case", o.case_name, "sl2, parabola or umbrella")->required();
  classify->add_option("--y", o.y, "data point as \"y1,y2[,y3]\"")->required();
  classify->add_option("--starts", o.starts, "oracle starts for the umbrella");

  auto* lift = app.add_subcommand("lift", "lift a polynomial to matrix entries");
  lift->add_option("--poly", o.poly, "polynomial (JSON file or inline JSON)")->required();
  lift->add_option("--n", o.n, "number of variables (checked against the polynomial)");
  lift->add_option("--t", o.t, "number of matrix columns (default n)");

  auto* plotdata = app.add_subcommand("plotdata", "CSV point clouds for plots");
  plotdata->add_option("--case", o.case_name, "evolute, e32 or sl2regions")->required();

  auto* ledger = app.add_subcommand("ledger", "C# versus EDdegree table");
  ledger->add_flag("--no-empirical", o.no_empirical, "skip the sampling check");

  for (auto* sub : {critical, project, count, classify, lift, plotdata, ledger}) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--tol", o.tol, "equality tolerance");
    sub->add_option("--out", o.out, "output file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*critical) cmd_critical(o);
    else if (*project) cmd_project(o);
    else if (*count) cmd_count(o);
    else if (*classify) cmd_classify(o);
    else if (*lift) cmd_lift(o);
    else if (*plotdata) cmd_plotdata(o);
    else if (*ledger) cmd_ledger(o);
  } catch (const edcrit::InputError& e) {
    std::cerr << "edcrit: input error: " << e.what() << "\n";
    return 1;
  } catch (const edcrit::RefusalError& e) {
    std::cerr << "edcrit: refused: " << e.what() << "\n";
    return 2;
  } catch (const edcrit::UnsupportedError& e) {
    std::cerr << "edcrit: unsupported: " << e.what() << "\n";
    return 3;
  } catch (const edcrit::Error& e) {
    std::cerr << "edcrit: internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
