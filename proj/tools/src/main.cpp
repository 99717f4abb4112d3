#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sobolev/types.hpp"
#include "sobolev_tools/experiments.hpp"

namespace {

using namespace sobolev;
using namespace sobolev::tools;

struct Common {
  std::string solver = "update-rot";
  std::string out;
  std::string format = "csv";
  std::optional<std::string> dump_spectral;
  bool trace = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--solver", c.solver, "HIEP solver")
      ->check(CLI::IsMember({"arnoldi", "update-hh", "update-rot", "update"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Output file (default: stdout)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--dump-spectral", c.dump_spectral,
                  "Write the (Z, w) data as JSON; without a path it goes to <out>.spectral.json, or stderr")
      ->expected(0, 1);
  cmd->add_flag("--trace", c.trace, "Emit solver steps as JSON lines on stderr");
}

CommonOptions to_options(const Common& c) {
  CommonOptions o;
  o.solver = hiep::solver_from_string(c.solver);
  if (c.trace) {
    o.trace = [](const hiep::TraceEvent& e) {
      nlohmann::json j = {{"solver", e.solver}, {"stage", e.stage}, {"block", e.block},
                          {"column", e.column}, {"dim", e.dim},     {"value", e.value}};
      std::cerr << j.dump() << '\n';
    };
  }
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

void emit(const ExperimentReport& rep, const Common& c) {
  write_text(c.out, c.format == "json" ? to_json(rep).dump(2) + "\n" : to_csv(rep));
  if (c.dump_spectral) {
    const std::string text = rep.spectral.dump(2) + "\n";
    std::string path = *c.dump_spectral;
    if (path.empty() && !c.out.empty() && c.out != "-") path = c.out + ".spectral.json";
    if (path.empty()) {
      std::cerr << text;
    } else {
      write_text(path, text);
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sobolev orthonormal polynomials: inverse eigenvalue solvers and experiments"};
  app.require_subcommand(1);

  Common common;
  std::function<ExperimentReport(const CommonOptions&)> run;
  std::function<void(const ExperimentReport&)> after;

  LaguerreRootsConfig lag;
  auto* c_lag = app.add_subcommand("laguerre-roots", "Smallest roots of Laguerre-Sobolev polynomials");
  c_lag->add_option("--gamma", lag.gamma, "Derivative weight")->capture_default_str();
  c_lag->add_option("--alpha", lag.alpha, "Laguerre parameter (> -1)")->capture_default_str();
  c_lag->add_option("--n-quad", lag.n_quad, "Gauss-Laguerre nodes")->capture_default_str();
  c_lag->add_option("--k-max", lag.k_max, "Largest degree")->capture_default_str();
  add_common(c_lag, common);
  c_lag->callback([&] { run = [&](const CommonOptions& o) { return cmd_laguerre_roots(lag, o); }; });

  AlthammerRootsConfig alt;
  auto* c_alt = app.add_subcommand("althammer-roots", "Roots of an Althammer polynomial");
  c_alt->add_option("-n,--degree", alt.n, "Polynomial degree")->capture_default_str();
  c_alt->add_option("--gamma", alt.gamma, "Derivative weight")->capture_default_str();
  c_alt->add_option("--n-quad", alt.n_quad, "Gauss-Legendre nodes")->capture_default_str();
  add_common(c_alt, common);
  c_alt->callback([&] { run = [&](const CommonOptions& o) { return cmd_althammer_roots(alt, o); }; });

  LeastSquaresConfig lsq;
  std::string svg_path;
  auto* c_lsq = app.add_subcommand("least-squares", "Hermite least squares of exp(-100 (x - 1/5)^2)");
  c_lsq->add_option("--gamma", lsq.gamma, "Derivative weight of the Sobolev fit")->capture_default_str();
  c_lsq->add_option("-m,--nodes", lsq.m, "Gauss-Legendre nodes")->capture_default_str();
  c_lsq->add_option("--degrees", lsq.degrees, "Comma separated degrees (default 1,11,...,m)")->delimiter(',');
  c_lsq->add_option("--grid-points", lsq.grid_points, "Uniform probe points on [-1, 1]")->capture_default_str();
  c_lsq->add_option("--svg", svg_path, "SVG plot path (default: next to --out, else least-squares.svg)");
  add_common(c_lsq, common);
  c_lsq->callback([&] {
    run = [&](const CommonOptions& o) { return cmd_least_squares(lsq, o); };
    after = [&](const ExperimentReport& rep) {
      std::string path = svg_path;
      if (path.empty()) {
        path = (common.out.empty() || common.out == "-")
                   ? std::string("least-squares.svg")
                   : std::filesystem::path(common.out).replace_extension(".svg").string();
      }
      write_text(path, least_squares_svg(rep));
    };
  });

  PentaConfig pen;
  auto* c_pen = app.add_subcommand("penta", "Five-term recurrence matrix of a discrete Laguerre-Sobolev product");
  c_pen->add_option("-m,--size", pen.m, "Size of B_m")->capture_default_str();
  c_pen->add_option("--alpha", pen.alpha, "Laguerre parameter (> -1)")->capture_default_str();
  c_pen->add_option("-c,--point", pen.c, "Location of the discrete point")->capture_default_str();
  c_pen->add_option("--M", pen.m_weight, "Value weight at c")->capture_default_str();
  c_pen->add_option("--N", pen.n_weight, "Derivative weight at c")->capture_default_str();
  add_common(c_pen, common);
  c_pen->callback([&] { run = [&](const CommonOptions& o) { return cmd_penta(pen, o); }; });

  CompareSolversConfig cmp;
  auto* c_cmp = app.add_subcommand("compare-solvers", "Arnoldi vs updating procedure on random spectral data");
  c_cmp->add_option("--seed", cmp.seed, "Random seed")->capture_default_str();
  c_cmp->add_option("--count", cmp.count, "Number of instances")->capture_default_str();
  c_cmp->add_option("--max-dim", cmp.max_dim, "Largest matrix dimension")->capture_default_str();
  c_cmp->add_option("--max-block", cmp.max_block, "Largest Jordan block")->capture_default_str();
  c_cmp->add_option("--min-separation", cmp.min_separation, "Smallest distance between nodes")
      ->capture_default_str();
  add_common(c_cmp, common);
  c_cmp->callback([&] { run = [&](const CommonOptions& o) { return cmd_compare_solvers(cmp, o); }; });

  CLI11_PARSE(app, argc, argv);

  try {
    const ExperimentReport rep = run(to_options(common));
    emit(rep, common);
    if (after) after(rep);
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
