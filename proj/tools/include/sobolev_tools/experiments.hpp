#pragma once

#include <cstdint>
#include <vector>

#include "sobolev/hiep.hpp"
#include "sobolev_tools/report.hpp"

namespace sobolev::tools {

struct CommonOptions {
  hiep::SolverKind solver = hiep::SolverKind::update_rotations;
  hiep::TraceSink trace;
};

struct LaguerreRootsConfig {
  double gamma = 1.0;
  double alpha = -0.5;
  int n_quad = 10;
  int k_max = 10;
};
/// Smallest roots of the Laguerre-Sobolev p_k, k = 1..k_max.
ExperimentReport cmd_laguerre_roots(const LaguerreRootsConfig& cfg, const CommonOptions& common);

struct AlthammerRootsConfig {
  int n = 50;
  double gamma = 100.0;
  int n_quad = 60;
};
/// All roots of the degree-n Althammer polynomial with violation flags.
ExperimentReport cmd_althammer_roots(const AlthammerRootsConfig& cfg, const CommonOptions& common);

struct LeastSquaresConfig {
  double gamma = 0.01;
  int m = 201;
  std::vector<int> degrees; ///< empty: 1, 11, ..., m
  int grid_points = 2001;
};
/// Hermite least squares of exp(-100 (x - 1/5)^2) in the Legendre (gamma = 0)
/// and Sobolev bases; max-norm errors per degree.
ExperimentReport cmd_least_squares(const LeastSquaresConfig& cfg, const CommonOptions& common);

/// SVG of the error curves from a least-squares report.
std::string least_squares_svg(const ExperimentReport& report);

struct PentaConfig {
  int m = 5;
  double alpha = 0.0;
  double c = -1.0;
  double m_weight = 1.0;
  double n_weight = 1.0;
};
/// Five-term recurrence matrix B_m of the discrete Laguerre-Sobolev product.
ExperimentReport cmd_penta(const PentaConfig& cfg, const CommonOptions& common);

struct CompareSolversConfig {
  std::uint64_t seed = 20240101;
  int count = 100;
  int max_dim = 40;
  int max_block = 4;
  double min_separation = 0.2;
};
/// Random valid (Z, w): Arnoldi vs both updating strategies plus contract residuals.
ExperimentReport cmd_compare_solvers(const CompareSolversConfig& cfg, const CommonOptions& common);

/// exp(-100 (x - 1/5)^2) and its derivative.
double ls_target(double x);
double ls_target_prime(double x);

} // namespace sobolev::tools
