#include "sobolev_tools/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sobolev/builders.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/random.hpp"
#include "sobolev/serialization.hpp"
#include "sobolev/sop.hpp"
#include "sobolev/spectrum.hpp"
#include "sobolev_tools/svg_plot.hpp"

namespace sobolev::tools {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

nlohmann::json residuals_json(const SpectralData& data, const hiep::HiepSolution& sol) {
  const hiep::SolutionResiduals r = hiep::residuals(data, sol);
  return {{"orthogonality", r.orthogonality},
          {"similarity", r.similarity},
          {"similarity_relative", r.similarity / data.z.frobenius_norm()},
          {"first_column", r.first_column},
          {"min_subdiagonal", r.min_subdiagonal},
          {"max_subdiagonal_imag", r.max_subdiag_imag},
          {"below_band", r.below_band}};
}

double relative_difference(const CMatrix& a, const CMatrix& b) {
  const double na = a.norm();
  return na > 0.0 ? (a - b).norm() / na : (a - b).norm();
}

} // namespace

double ls_target(double x) {
  const double d = x - 0.2;
  return std::exp(-100.0 * d * d);
}

double ls_target_prime(double x) { return -200.0 * (x - 0.2) * ls_target(x); }

ExperimentReport cmd_laguerre_roots(const LaguerreRootsConfig& cfg, const CommonOptions& common) {
  if (!(cfg.alpha > -1.0)) throw std::invalid_argument("laguerre-roots: alpha must be > -1");
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("laguerre-roots: gamma must be > 0");
  if (cfg.n_quad < 1) throw std::invalid_argument("laguerre-roots: n_quad must be >= 1");
  if (cfg.k_max < 1 || cfg.k_max > 2 * cfg.n_quad)
    throw std::invalid_argument("laguerre-roots: k_max must lie in [1, 2*n_quad]");

  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "laguerre-roots";
  rep.config = {{"gamma", cfg.gamma}, {"alpha", cfg.alpha}, {"n_quad", cfg.n_quad},
                {"k_max", cfg.k_max}, {"solver", std::string(hiep::to_string(common.solver))}};
  rep.columns = {{"k", true}, {"smallest_root_re"}, {"smallest_root_im"}};

  const SpectralData data = build_same_measure(quadrature::gauss_laguerre(cfg.n_quad, cfg.alpha), {1.0, cfg.gamma});
  const hiep::HiepSolution sol = hiep::solve(data, common.solver, common.trace);
  for (int k = 1; k <= cfg.k_max; ++k) {
    const cplx r = spectrum::smallest_root(sol.h, k);
    rep.add_row({double(k), r.real(), r.imag()});
  }
  rep.spectral = to_json(data);
  rep.diagnostics["residuals"] = residuals_json(data, sol);
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport cmd_althammer_roots(const AlthammerRootsConfig& cfg, const CommonOptions& common) {
  if (cfg.n_quad < 1) throw std::invalid_argument("althammer-roots: n_quad must be >= 1");
  if (cfg.n < 1 || cfg.n > 2 * cfg.n_quad)
    throw std::invalid_argument("althammer-roots: n must lie in [1, 2*n_quad]");
  if (!(cfg.gamma > 0.0)) throw std::invalid_argument("althammer-roots: gamma must be > 0");

  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "althammer-roots";
  rep.config = {{"n", cfg.n}, {"gamma", cfg.gamma}, {"n_quad", cfg.n_quad},
                {"solver", std::string(hiep::to_string(common.solver))}};
  rep.columns = {{"index", true}, {"root_re"}, {"root_im"}};

  const SpectralData data = build_same_measure(quadrature::gauss_legendre(cfg.n_quad), {1.0, cfg.gamma});
  const hiep::HiepSolution sol = hiep::solve(data, common.solver, common.trace);
  const spectrum::Spectrum roots = spectrum::hessenberg_eigenvalues(sol.h.leading(cfg.n));

  constexpr double imag_tol = 1e-6, range_tol = 1e-8, gap_tol = 1e-10;
  int imag_violations = 0, range_violations = 0, gap_violations = 0;
  double max_imag = 0.0, min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx r = roots.eigenvalues[i];
    rep.add_row({double(i), r.real(), r.imag()});
    max_imag = std::max(max_imag, std::abs(r.imag()));
    if (std::abs(r.imag()) > imag_tol) ++imag_violations;
    if (r.real() < -1.0 - range_tol || r.real() > 1.0 + range_tol) ++range_violations;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const double gap = std::abs(r - roots.eigenvalues[j]);
      min_gap = std::min(min_gap, gap);
      if (gap <= gap_tol) ++gap_violations;
    }
  }
  rep.spectral = to_json(data);
  rep.diagnostics["violations"] = {{"imag", imag_violations},
                                   {"range", range_violations},
                                   {"gap", gap_violations},
                                   {"total", imag_violations + range_violations + gap_violations}};
  rep.diagnostics["max_abs_imag"] = max_imag;
  rep.diagnostics["min_gap"] = std::isfinite(min_gap) ? nlohmann::json(min_gap) : nlohmann::json(nullptr);
  rep.diagnostics["residuals"] = residuals_json(data, sol);
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport cmd_least_squares(const LeastSquaresConfig& cfg, const CommonOptions& common) {
  if (cfg.m < 1) throw std::invalid_argument("least-squares: m must be >= 1");
  if (!(cfg.gamma >= 0.0)) throw std::invalid_argument("least-squares: gamma must be >= 0");
  if (cfg.grid_points < 2) throw std::invalid_argument("least-squares: grid_points must be >= 2");
  std::vector<int> degrees = cfg.degrees;
  if (degrees.empty())
    for (int n = 1; n <= cfg.m; n += 10) degrees.push_back(n);
  for (int n : degrees)
    if (n < 0 || n > 2 * cfg.m - 1)
      throw std::invalid_argument("least-squares: degrees must lie in [0, 2m-1]");

  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "least-squares";
  rep.config = {{"gamma", cfg.gamma}, {"m", cfg.m}, {"degrees", degrees}, {"grid_points", cfg.grid_points},
                {"solver", std::string(hiep::to_string(common.solver))}};
  rep.columns = {{"degree", true},
                 {"legendre_effective_degree", true},
                 {"legendre_value_error"},
                 {"legendre_derivative_error"},
                 {"sobolev_effective_degree", true},
                 {"sobolev_value_error"},
                 {"sobolev_derivative_error"}};

  const quadrature::QuadratureRule rule = quadrature::gauss_legendre(cfg.m);
  std::vector<double> fv, fpv;
  for (double x : rule.nodes) {
    fv.push_back(ls_target(x));
    fpv.push_back(ls_target_prime(x));
  }

  struct Basis {
    double gamma;
    SpectralData data;
    hiep::HiepSolution sol;
    double w_norm;
  };
  auto make_basis = [&](double gamma) {
    SpectralData data = gamma > 0.0 ? build_same_measure(rule, {1.0, gamma}) : build_same_measure(rule, {1.0});
    hiep::HiepSolution sol = hiep::solve(data, common.solver, common.trace);
    const double wn = data.w.norm();
    return Basis{gamma, std::move(data), std::move(sol), wn};
  };
  const Basis legendre = make_basis(0.0);
  const Basis sobolev = make_basis(cfg.gamma);

  auto fit = [&](const Basis& b, int n) {
    const Index eff = std::min<Index>(n, b.sol.h.dim() - 1);
    sop::LsqFit f = sop::hermite_least_squares(b.sol.h, b.w_norm, rule.nodes, rule.weights, fv, fpv, b.gamma, eff);
    sop::measure_errors(f, b.sol.h, b.w_norm, ls_target, ls_target_prime, -1.0, 1.0, cfg.grid_points);
    return f;
  };
  for (int n : degrees) {
    const sop::LsqFit a = fit(legendre, n);
    const sop::LsqFit b = fit(sobolev, n);
    rep.add_row({double(n), double(a.degree), a.value_error, a.derivative_error, double(b.degree), b.value_error,
                 b.derivative_error});
  }
  rep.spectral = {{"legendre", to_json(legendre.data)}, {"sobolev", to_json(sobolev.data)}};
  rep.diagnostics["legendre_residuals"] = residuals_json(legendre.data, legendre.sol);
  rep.diagnostics["sobolev_residuals"] = residuals_json(sobolev.data, sobolev.sol);
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

std::string least_squares_svg(const ExperimentReport& report) {
  if (report.id != "least-squares") throw std::invalid_argument("least_squares_svg: not a least-squares report");
  std::vector<double> deg, lv, ld, sv, sd;
  for (const auto& row : report.rows) {
    deg.push_back(row[0]);
    lv.push_back(row[2]);
    ld.push_back(row[3]);
    sv.push_back(row[5]);
    sd.push_back(row[6]);
  }
  const double gamma = report.config.value("gamma", 0.0);
  char label[64];
  std::snprintf(label, sizeof label, "gamma = %g", gamma);
  const std::vector<Panel> panels = {
      {"max |f_n - f|", "degree n", "error",
       {{"gamma = 0", "#1f77b4", deg, lv}, {label, "#d62728", deg, sv}}},
      {"max |f_n' - f'|", "degree n", "error",
       {{"gamma = 0", "#1f77b4", deg, ld}, {label, "#d62728", deg, sd}}},
  };
  return render_log_plot(panels);
}

ExperimentReport cmd_penta(const PentaConfig& cfg, const CommonOptions& common) {
  if (cfg.m < 1) throw std::invalid_argument("penta: m must be >= 1");
  if (!(cfg.alpha > -1.0)) throw std::invalid_argument("penta: alpha must be > -1");

  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "penta";
  rep.config = {{"m", cfg.m}, {"alpha", cfg.alpha}, {"c", cfg.c}, {"M", cfg.m_weight}, {"N", cfg.n_weight},
                {"solver", std::string(hiep::to_string(common.solver))}};
  rep.columns = {{"i", true}, {"j", true}, {"re"}, {"im"}};

  const SpectralData data = build_discrete_laguerre_sobolev(quadrature::gauss_laguerre(cfg.m + 1, cfg.alpha), cfg.c,
                                                            cfg.m_weight, cfg.n_weight);
  const SpectralData shifted{data.z.shifted(cfg.c), data.w};

  const hiep::HiepSolution sol = hiep::solve(shifted, common.solver, common.trace);
  const CMatrix hm = sol.h.matrix().topLeftCorner(cfg.m + 1, cfg.m + 1);
  const CMatrix b = (hm * hm).topLeftCorner(cfg.m, cfg.m);
  for (Index i = 0; i < b.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) rep.add_row({double(i), double(j), b(i, j).real(), b(i, j).imag()});

  const double bn = b.norm();
  rep.diagnostics["off_band_norm"] = sop::off_band_norm(b);
  rep.diagnostics["off_band_relative"] = bn > 0.0 ? sop::off_band_norm(b) / bn : 0.0;
  nlohmann::json cross = nlohmann::json::object();
  double worst = 0.0;
  for (auto other : {hiep::SolverKind::arnoldi, hiep::SolverKind::update_householder,
                     hiep::SolverKind::update_rotations}) {
    if (other == common.solver) continue;
    const double d = relative_difference(b, sop::pentadiagonal_recurrence(shifted, cfg.m, other));
    cross[std::string(hiep::to_string(other))] = d;
    worst = std::max(worst, d);
  }
  rep.diagnostics["cross_solver_relative"] = cross;
  rep.diagnostics["cross_solver_worst"] = worst;
  rep.diagnostics["residuals"] = residuals_json(shifted, sol);
  rep.spectral = {{"unshifted", to_json(data)}, {"shifted", to_json(shifted)}};
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

ExperimentReport cmd_compare_solvers(const CompareSolversConfig& cfg, const CommonOptions& common) {
  if (cfg.count < 1) throw std::invalid_argument("compare-solvers: count must be >= 1");
  if (cfg.max_dim < 1 || cfg.max_block < 1)
    throw std::invalid_argument("compare-solvers: max_dim and max_block must be >= 1");
  if (!(cfg.min_separation >= 0.0)) throw std::invalid_argument("compare-solvers: min_separation must be >= 0");

  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "compare-solvers";
  rep.config = {{"seed", cfg.seed}, {"count", cfg.count}, {"max_dim", cfg.max_dim},
                {"max_block", cfg.max_block}, {"min_separation", cfg.min_separation}};
  rep.columns = {{"instance", true},        {"dim", true},           {"blocks", true},
                 {"rel_diff_update_hh"},    {"rel_diff_update_rot"}, {"worst_orthogonality"},
                 {"worst_similarity_rel"},  {"worst_first_column"},  {"min_subdiagonal"}};

  Rng rng(cfg.seed);
  RandomSpectralOptions opts;
  opts.max_dim = cfg.max_dim;
  opts.max_block = cfg.max_block;
  opts.min_separation = cfg.min_separation;

  double worst_hh = 0.0, worst_rot = 0.0, worst_orth = 0.0, worst_sim = 0.0, worst_fc = 0.0;
  double min_sub = std::numeric_limits<double>::infinity();
  nlohmann::json spectral = nlohmann::json::array();
  for (int t = 0; t < cfg.count; ++t) {
    const SpectralData data = random_spectral_data(rng, opts);
    const auto a = hiep::solve(data, hiep::SolverKind::arnoldi, common.trace);
    const auto hh = hiep::solve(data, hiep::SolverKind::update_householder, common.trace);
    const auto rot = hiep::solve(data, hiep::SolverKind::update_rotations, common.trace);
    const double dhh = relative_difference(a.h.matrix(), hh.h.matrix());
    const double drot = relative_difference(a.h.matrix(), rot.h.matrix());
    double orth = 0.0, sim = 0.0, fc = 0.0, sub = std::numeric_limits<double>::infinity();
    for (const auto* s : {&a, &hh, &rot}) {
      const hiep::SolutionResiduals r = hiep::residuals(data, *s);
      orth = std::max(orth, r.orthogonality);
      sim = std::max(sim, r.similarity / data.z.frobenius_norm());
      fc = std::max(fc, r.first_column);
      sub = std::min(sub, r.min_subdiagonal);
    }
    const Index dim = data.z.dim();
    if (dim == 1) sub = 0.0;
    rep.add_row({double(t), double(dim), double(data.z.block_count()), dhh, drot, orth, sim, fc, sub});
    worst_hh = std::max(worst_hh, dhh);
    worst_rot = std::max(worst_rot, drot);
    worst_orth = std::max(worst_orth, orth / double(dim));
    worst_sim = std::max(worst_sim, sim);
    worst_fc = std::max(worst_fc, fc);
    if (dim > 1) min_sub = std::min(min_sub, sub);
    spectral.push_back(to_json(data));
  }
  rep.diagnostics = {{"worst_rel_diff_update_hh", worst_hh},
                     {"worst_rel_diff_update_rot", worst_rot},
                     {"worst_orthogonality_per_dim", worst_orth},
                     {"worst_similarity_rel", worst_sim},
                     {"worst_first_column", worst_fc},
                     {"min_subdiagonal", std::isfinite(min_sub) ? nlohmann::json(min_sub) : nlohmann::json(nullptr)}};
  rep.spectral = spectral;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

} // namespace sobolev::tools
