#include <doctest.h>

#include <cmath>
#include <regex>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev_tools/experiments.hpp"
#include "sobolev_tools/svg_plot.hpp"

using namespace sobolev;
using namespace sobolev::tools;

namespace {

CommonOptions with_solver(hiep::SolverKind kind) {
  CommonOptions o;
  o.solver = kind;
  return o;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("laguerre-roots reproduces the tables") {
  LaguerreRootsConfig t1;
  const auto r1 = cmd_laguerre_roots(t1, {});
  REQUIRE(r1.rows.size() == 10);
  CHECK(std::abs(r1.rows[4][1] - (-0.0799899984977785)) <= 1e-10);

  LaguerreRootsConfig t2{0.2, -0.9, 10, 10};
  const auto r2 = cmd_laguerre_roots(t2, {});
  CHECK(std::abs(r2.rows[7][1] - (-0.0539763658835064)) <= 1e-10);

  for (const auto& cfg : {t1, t2}) {
    const auto a = cmd_laguerre_roots(cfg, with_solver(hiep::SolverKind::arnoldi));
    const auto u = cmd_laguerre_roots(cfg, with_solver(hiep::SolverKind::update_rotations));
    const auto h = cmd_laguerre_roots(cfg, with_solver(hiep::SolverKind::update_householder));
    for (std::size_t k = 0; k < a.rows.size(); ++k) {
      CHECK(std::abs(a.rows[k][1] - u.rows[k][1]) <= 1e-10);
      CHECK(std::abs(a.rows[k][1] - h.rows[k][1]) <= 1e-10);
    }
  }

  CHECK_THROWS_AS(cmd_laguerre_roots({1.0, -1.0, 10, 10}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_laguerre_roots({0.0, -0.5, 10, 10}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_laguerre_roots({1.0, -0.5, 10, 21}, {}), std::invalid_argument);
}

TEST_CASE("CSV output format and stability") {
  const auto a = cmd_laguerre_roots({1.0, -0.5, 10, 3}, {});
  const auto b = cmd_laguerre_roots({1.0, -0.5, 10, 3}, {});
  const std::string csv = to_csv(a);
  CHECK(csv == to_csv(b));
  CHECK(csv.rfind("k,smallest_root_re,smallest_root_im\n", 0) == 0);
  const std::regex row(R"(\n1,-?\d\.\d{16}e[+-]\d{2},-?\d\.\d{16}e[+-]\d{2}\n)");
  CHECK(std::regex_search(csv, row));
  CHECK(count_of(csv, "\n") == 4);

  const auto j = to_json(a);
  CHECK(j["experiment"] == "laguerre-roots");
  CHECK(j["config"]["gamma"] == 1.0);
  CHECK(j["config"]["alpha"] == -0.5);
  CHECK(j["config"]["n_quad"] == 10);
  CHECK(j["config"]["k_max"] == 3);
  CHECK(j["config"]["solver"] == "update-rot");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0][0] == 1);
  CHECK(j.contains("wall_seconds"));
  CHECK(j["diagnostics"]["residuals"]["first_column"].get<double>() <= 1e-13);

  ExperimentReport r;
  r.columns = {{"a"}, {"b"}};
  CHECK_THROWS_AS(r.add_row({1.0}), std::logic_error);
  r.add_row({0.1, -2.0});
  CHECK(to_csv(r) == "a,b\n1.0000000000000001e-01,-2.0000000000000000e+00\n");
}

TEST_CASE("althammer-roots") {
  for (auto kind : {hiep::SolverKind::arnoldi, hiep::SolverKind::update_householder,
                    hiep::SolverKind::update_rotations}) {
    CAPTURE(hiep::to_string(kind));
    for (int n : {50, 60}) {
      const auto r = cmd_althammer_roots({n, 100.0, 60}, with_solver(kind));
      CHECK(r.rows.size() == std::size_t(n));
      CHECK(r.diagnostics["violations"]["total"] == 0);
    }
  }
  const auto one = cmd_althammer_roots({1, 100.0, 60}, {});
  REQUIRE(one.rows.size() == 1);
  CHECK(std::abs(one.rows[0][1]) <= 1e-14);
  CHECK(one.rows[0][2] == 0.0);

  CHECK_THROWS_AS(cmd_althammer_roots({121, 100.0, 60}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_althammer_roots({10, 0.0, 60}, {}), std::invalid_argument);
}

TEST_CASE("least-squares experiment") {
  LeastSquaresConfig cfg;
  for (int n = 1; n <= 10; ++n) cfg.degrees.push_back(n);
  for (int n = 11; n <= 201; n += 10) cfg.degrees.push_back(n);
  const auto r = cmd_least_squares(cfg, with_solver(hiep::SolverKind::arnoldi));
  REQUIRE(r.rows.size() == cfg.degrees.size());
  CHECK(r.columns.size() == 7);

  // degree <= 10 with gamma = 0: compare against the normal equations on monomials
  const auto rule = quadrature::gauss_legendre(cfg.m);
  std::vector<double> fv;
  for (double x : rule.nodes) fv.push_back(ls_target(x));
  for (int n = 1; n <= 10; ++n) {
    const auto c = oracle::normal_equations_fit(rule.nodes, rule.weights, fv, n);
    double err = 0.0;
    for (int i = 0; i < cfg.grid_points; ++i) {
      const double x = -1.0 + 2.0 * i / (cfg.grid_points - 1);
      err = std::max(err, std::abs(oracle::eval_real_poly(c, x) - ls_target(x)));
    }
    CHECK(std::abs(r.rows[n - 1][2] - err) <= 1e-8);
  }

  for (const auto& row : r.rows) {
    const int n = int(row[0]);
    if (n >= 51) CHECK(row[6] <= row[3]);
  }
  const auto& last = r.rows.back();
  CHECK(last[0] == 201);
  CHECK(last[1] == 200); // Legendre basis has only m = 201 members
  CHECK(last[4] == 201);
  CHECK(last[2] <= 1e-6);
  CHECK(last[5] <= 1e-6);
  // plateau observed at about 3e-15 (gamma = 0) and 1e-15 (gamma = 1/100)
  CHECK(last[2] <= 1e-13);
  CHECK(last[5] <= 1e-13);

  const std::string svg = least_squares_svg(r);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<polyline") == 4);
  CHECK(svg.find("</svg>") != std::string::npos);

  LeastSquaresConfig bad;
  bad.m = 5;
  bad.degrees = {10};
  CHECK_THROWS_AS(cmd_least_squares(bad, {}), std::invalid_argument);
  ExperimentReport other;
  other.id = "penta";
  CHECK_THROWS_AS(least_squares_svg(other), std::invalid_argument);
}

TEST_CASE("least-squares default degrees") {
  LeastSquaresConfig cfg;
  cfg.m = 21;
  cfg.gamma = 0.1;
  const auto r = cmd_least_squares(cfg, {});
  std::vector<int> degrees;
  for (const auto& row : r.rows) degrees.push_back(int(row[0]));
  CHECK(degrees == std::vector<int>{1, 11, 21});
  CHECK(r.config["gamma"] == 0.1);
}

TEST_CASE("penta experiment") {
  const auto r = cmd_penta({}, {});
  CHECK(r.rows.size() == 25);
  CHECK(r.diagnostics["off_band_relative"].get<double>() <= 1e-9);
  CHECK(r.diagnostics["cross_solver_worst"].get<double>() <= 1e-12);
  for (const auto& row : r.rows)
    if (std::abs(row[0] - row[1]) > 2) CHECK(std::hypot(row[2], row[3]) <= 1e-9);

  PentaConfig one;
  one.m = 1;
  const auto r1 = cmd_penta(one, with_solver(hiep::SolverKind::arnoldi));
  CHECK(r1.rows.size() == 1);
  CHECK(r1.diagnostics["off_band_relative"] == 0.0);

  PentaConfig bad;
  bad.alpha = -1.0;
  CHECK_THROWS_AS(cmd_penta(bad, {}), std::invalid_argument);
  bad = {};
  bad.c = 0.0;
  CHECK_NOTHROW(cmd_penta(bad, {}));
  bad.m_weight = 0.0;
  CHECK_THROWS_AS(cmd_penta(bad, {}), std::invalid_argument);
}

TEST_CASE("compare-solvers is seeded and within tolerance") {
  CompareSolversConfig cfg;
  cfg.count = 20;
  const auto a = cmd_compare_solvers(cfg, {});
  const auto b = cmd_compare_solvers(cfg, {});
  CHECK(to_csv(a) == to_csv(b));
  CHECK(a.diagnostics["worst_rel_diff_update_hh"].get<double>() <= 1e-11);
  CHECK(a.diagnostics["worst_rel_diff_update_rot"].get<double>() <= 1e-11);
  CHECK(a.spectral.size() == 20);

  cfg.seed = 1;
  CHECK(to_csv(cmd_compare_solvers(cfg, {})) != to_csv(a));
  cfg.count = 0;
  CHECK_THROWS_AS(cmd_compare_solvers(cfg, {}), std::invalid_argument);
}

TEST_CASE("trace sink receives solver events") {
  std::set<std::string> stages;
  CommonOptions o;
  o.trace = [&](const hiep::TraceEvent& e) { stages.emplace(e.stage); };
  cmd_laguerre_roots({1.0, -0.5, 4, 2}, o);
  CHECK(stages.count("merge") == 1);
  CHECK(stages.count("restored") == 1);
}

TEST_CASE("svg renderer copes with empty and non-positive data") {
  const std::string empty = render_log_plot({});
  CHECK(empty.find("</svg>") != std::string::npos);
  Panel p{"t<&>", "x", "y", {{"s", "#000", {1, 2, 3}, {0.0, -1.0, 1e-3}}}};
  const std::string svg = render_log_plot({p});
  CHECK(svg.find("t&lt;&amp;&gt;") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
}
