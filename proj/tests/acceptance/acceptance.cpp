// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sobolev/builders.hpp"
#include "sobolev/hiep.hpp"
#include "sobolev/inner_product.hpp"
#include "sobolev/quadrature.hpp"
#include "sobolev/random.hpp"
#include "sobolev/sop.hpp"
#include "sobolev/spectrum.hpp"
#include "sobolev_tools/experiments.hpp"

using namespace sobolev;
using Clock = std::chrono::steady_clock;

namespace {

constexpr hiep::SolverKind kSolvers[] = {hiep::SolverKind::arnoldi, hiep::SolverKind::update_householder,
                                         hiep::SolverKind::update_rotations};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Worst solver-contract residuals over every instance solved by the suite.
struct ContractLedger {
  double orthogonality = 0.0; // ||Q^H Q - I||_F / m
  double similarity = 0.0;    // ||Q^H Z Q - H||_F / ||Z||_F
  double first_column = 0.0;
  double min_subdiagonal = std::numeric_limits<double>::infinity();
  double max_subdiag_imag = 0.0;
  int instances = 0;

  void record(const SpectralData& d, const hiep::HiepSolution& s) {
    const auto r = hiep::residuals(d, s);
    const double m = double(d.z.dim());
    orthogonality = std::max(orthogonality, r.orthogonality / m);
    similarity = std::max(similarity, r.similarity / d.z.frobenius_norm());
    first_column = std::max(first_column, r.first_column);
    if (d.z.dim() > 1) min_subdiagonal = std::min(min_subdiagonal, r.min_subdiagonal);
    max_subdiag_imag = std::max(max_subdiag_imag, r.max_subdiag_imag);
    ++instances;
  }
};

ContractLedger contract;

hiep::HiepSolution solve_recorded(const SpectralData& d, hiep::SolverKind k) {
  auto s = hiep::solve(d, k);
  contract.record(d, s);
  return s;
}

Outcome roots_table(double gamma, double alpha, const std::vector<double>& expected) {
  const auto t0 = Clock::now();
  const auto d = build_same_measure(quadrature::gauss_laguerre(10, alpha), {1.0, gamma});
  double worst = 0.0;
  for (auto kind : kSolvers) {
    const auto s = solve_recorded(d, kind);
    for (int k = 1; k <= 10; ++k) worst = std::max(worst, std::abs(spectrum::smallest_root(s.h, k) - expected[k - 1]));
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-9 && t < 1.0,
          fmt("gamma=%g alpha=%g, k=1..10, all solvers: max |root - reference| = %.2e (limit 1e-9); %.3f s (limit 1 s)",
              gamma, alpha, worst, t)};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  Rng rng(20240101);
  RandomSpectralOptions opts; // m <= 40, blocks 1..4, nodes in [-2,2]x[-1,1]i
  double hh = 0.0, rot = 0.0;
  for (int t = 0; t < 100; ++t) {
    const SpectralData d = random_spectral_data(rng, opts);
    const CMatrix a = solve_recorded(d, hiep::SolverKind::arnoldi).h.matrix();
    hh = std::max(hh, oracle::rel_diff(a, solve_recorded(d, hiep::SolverKind::update_householder).h.matrix()));
    rot = std::max(rot, oracle::rel_diff(a, solve_recorded(d, hiep::SolverKind::update_rotations).h.matrix()));
  }
  const double t = seconds_since(t0);
  return {hh <= 1e-11 && rot <= 1e-11 && t < 30.0,
          fmt("100 random (Z,w), m<=40: max rel diff vs Arnoldi update-hh %.2e, update-rot %.2e (limit 1e-11); "
              "%.2f s (limit 30 s)",
              hh, rot, t)};
}

Outcome ac4() {
  const auto t0 = Clock::now();
  Rng rng(4);
  RandomSpectralOptions opts;
  opts.max_dim = 12;
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const SpectralData d = random_spectral_data(rng, opts);
    const int m = int(d.z.dim());
    const auto pc = oracle::random_poly(rng, rng.integer(0, m - 1));
    const auto qc = oracle::random_poly(rng, rng.integer(0, m - 1));
    const CMatrix zd = d.z.dense();
    const CVector w = d.w.dense(d.z);
    const CVector x = oracle::poly_of_matrix_powers(pc, zd) * w;
    const CVector y = oracle::poly_of_matrix_powers(qc, zd) * w;
    const cplx direct = inner_product_direct(PolyCoeffs(pc), PolyCoeffs(qc), spec_of(d.z, d.w));
    worst = std::max(worst, std::abs(y.dot(x) - direct) / (x.norm() * y.norm()));
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-11 && t < 10.0,
          fmt("200 random (Z,w), m<=12: max |y^H x - <p,q>_S| / (|x||y|) = %.2e (limit 1e-11); %.2f s (limit 10 s)",
              worst, t)};
}

Outcome ac6() {
  const auto t0 = Clock::now();
  const auto d = build_same_measure(quadrature::gauss_legendre(60), {1.0, 100.0});
  int violations = 0;
  double max_imag = 0.0, min_gap = std::numeric_limits<double>::infinity(), max_abs_re = 0.0;
  for (auto kind : kSolvers) {
    const auto s = solve_recorded(d, kind);
    const auto roots = spectrum::hessenberg_eigenvalues(s.h.leading(60)).eigenvalues;
    if (roots.size() != 60) ++violations;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      max_imag = std::max(max_imag, std::abs(roots[i].imag()));
      max_abs_re = std::max(max_abs_re, std::abs(roots[i].real()));
      if (std::abs(roots[i].imag()) > 1e-6) ++violations;
      if (roots[i].real() < -1.0 - 1e-8 || roots[i].real() > 1.0 + 1e-8) ++violations;
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        const double gap = std::abs(roots[i] - roots[j]);
        min_gap = std::min(min_gap, gap);
        if (!(gap > 1e-10)) ++violations;
      }
    }
  }
  const double t = seconds_since(t0);
  return {violations == 0 && t < 5.0,
          fmt("n=60 gamma=100, all solvers: %d violations, max |imag| %.1e, max |re| %.6f, min gap %.2e; "
              "%.2f s (limit 5 s)",
              violations, max_imag, max_abs_re, min_gap, t)};
}

Outcome ac7() {
  const auto d = build_discrete_laguerre_sobolev(quadrature::gauss_laguerre(6, 0.0), -1.0, 1.0, 1.0);
  const SpectralData shifted{d.z.shifted(-1.0), d.w};
  std::vector<CMatrix> bs;
  double off = 0.0;
  for (auto kind : kSolvers) {
    const auto s = solve_recorded(shifted, kind);
    const CMatrix h = s.h.matrix().topLeftCorner(6, 6);
    bs.push_back((h * h).topLeftCorner(5, 5));
    off = std::max(off, sop::off_band_norm(bs.back()) / bs.back().norm());
  }
  const double cross = std::max(oracle::rel_diff(bs[0], bs[1]), oracle::rel_diff(bs[0], bs[2]));
  return {off <= 1e-9 && cross <= 1e-12,
          fmt("B_5, c=-1, M=N=1, alpha=0: off-band relative %.2e (limit 1e-9), cross-solver %.2e (limit 1e-12)", off,
              cross)};
}

Outcome ac8() {
  const auto t0 = Clock::now();
  tools::LeastSquaresConfig cfg; // m = 201, gamma = 1/100, degrees 1, 11, ..., 201
  tools::CommonOptions opts;
  opts.solver = hiep::SolverKind::arnoldi;
  const auto rep = tools::cmd_least_squares(cfg, opts);
  const double t = seconds_since(t0);

  std::string deriv_bad, ratio_bad;
  double worst_ratio = 0.0;
  for (const auto& row : rep.rows) {
    const int n = int(row[0]);
    const double leg_v = row[2], leg_d = row[3], sob_v = row[5], sob_d = row[6];
    if (n >= 51 && !(sob_d <= leg_d)) deriv_bad += fmt(" %d", n);
    const double ratio = std::max(leg_v / sob_v, sob_v / leg_v);
    worst_ratio = std::max(worst_ratio, ratio);
    if (!(ratio <= 3.0)) ratio_bad += fmt(" %d(%.2f)", n, ratio);
  }
  const bool pass = deriv_bad.empty() && ratio_bad.empty() && t < 60.0;
  std::string detail = fmt("m=201 gamma=0.01: derivative dominance for n>=51 %s; value-error ratio max %.2f (limit 3)",
                           deriv_bad.empty() ? "holds" : ("fails at" + deriv_bad).c_str(), worst_ratio);
  if (!ratio_bad.empty()) detail += ", exceeded at n =" + ratio_bad;
  detail += fmt("; %.2f s (limit 60 s)", t);
  return {pass, detail};
}

Outcome ac9() {
  const auto t0 = Clock::now();
  // Relative to max(|moment|, Σ w |x|^d) so that vanishing odd moments are measured meaningfully.
  auto rel = [](const quadrature::QuadratureRule& r, int d, double exact) {
    double sum = 0.0, abs_sum = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double t = r.weights[j] * std::pow(r.nodes[j], d);
      sum += t;
      abs_sum += std::abs(t);
    }
    return std::abs(sum - exact) / std::max(std::abs(exact), abs_sum);
  };
  auto legendre_moment = [](int d) { return d % 2 ? 0.0 : 2.0 / (d + 1); };
  double leg = 0.0, lag = 0.0, radau = 0.0;
  for (int n = 1; n <= 100; ++n) {
    const auto g = quadrature::gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) leg = std::max(leg, rel(g, d, legendre_moment(d)));
    for (double a : {1.0, -1.0}) {
      const auto r = quadrature::gauss_radau(n - 1, a);
      for (int d = 0; d <= 2 * (n - 1); ++d) radau = std::max(radau, rel(r, d, legendre_moment(d)));
    }
    for (double alpha : {0.0, -0.5, -0.9, 2.5}) {
      const auto l = quadrature::gauss_laguerre(n, alpha);
      for (int d = 0; d <= 2 * n - 1; ++d) {
        const double lg = std::lgamma(d + alpha + 1.0);
        double sum = 0.0;
        for (std::size_t j = 0; j < l.size(); ++j)
          sum += std::exp(std::log(l.weights[j]) + d * std::log(l.nodes[j]) - lg);
        lag = std::max(lag, std::abs(sum - 1.0));
      }
    }
  }
  const double t = seconds_since(t0);
  const double worst = std::max({leg, lag, radau});
  return {worst <= 1e-12,
          fmt("n=1..100: Gauss-Legendre %.1e, Gauss-Laguerre %.1e, Gauss-Radau %.1e (limit 1e-12); %.2f s", leg, lag,
              radau, t)};
}

Outcome ac10() {
  const auto d = build_same_measure(quadrature::gauss_legendre(8), {1.0});
  const auto jac = quadrature::legendre_jacobi(8);
  CMatrix ref = CMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) ref(i, i) = jac.diag[i];
  for (int i = 0; i < 7; ++i) ref(i + 1, i) = ref(i, i + 1) = jac.offdiag[i];
  double worst = 0.0, asym = 0.0;
  for (auto kind : kSolvers) {
    const CMatrix h = solve_recorded(d, kind).h.matrix();
    worst = std::max(worst, (h - ref).cwiseAbs().maxCoeff());
    asym = std::max(asym, (h - h.adjoint()).cwiseAbs().maxCoeff() + h.imag().cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12 && asym <= 1e-12,
          fmt("Gauss-Legendre n=8, gammas=[1], all solvers: max |H - J| = %.2e, asymmetry/imag %.2e (limit 1e-12)",
              worst, asym)};
}

Outcome ac5() {
  const bool pass = contract.orthogonality <= 1e-12 && contract.similarity <= 1e-11 &&
                    contract.first_column <= 1e-13 && contract.min_subdiagonal >= 0.0 &&
                    contract.max_subdiag_imag == 0.0;
  return {pass, fmt("%d solves: max ||Q^HQ-I||/m %.1e (1e-12), ||Q^HZQ-H||/||Z|| %.1e (1e-11), "
                    "||Qe1 - w/||w|||| %.1e (1e-13), min subdiagonal %.2e (>= 0), max imag %.1e",
                    contract.instances, contract.orthogonality, contract.similarity, contract.first_column,
                    contract.min_subdiagonal, contract.max_subdiag_imag)};
}

} // namespace

int main() {
  const std::vector<double> table1 = {0.5,
                                      0.0515973733627619,
                                      -0.0709467328567679,
                                      -0.0874916640141535,
                                      -0.0799899984977785,
                                      -0.0689833230536414,
                                      -0.059147588995331,
                                      -0.0512004191713639,
                                      -0.0449179698365336,
                                      -0.0399294766753265};
  const std::vector<double> table2 = {0.1,
                                      -0.0261349584030074,
                                      -0.0750911669982843,
                                      -0.0830880010863875,
                                      -0.0777522363825043,
                                      -0.0694388792472855,
                                      -0.0612413492735963,
                                      -0.0539763658835064,
                                      -0.047763992052076,
                                      -0.042517319218519};

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", [&] { return roots_table(1.0, -0.5, table1); }},
      {"AC2", [&] { return roots_table(0.2, -0.9, table2); }},
      {"AC3", ac3},
      {"AC4", ac4},
      {"AC6", ac6},
      {"AC7", ac7},
      {"AC8", ac8},
      {"AC9", ac9},
      {"AC10", ac10},
  };

  std::vector<std::pair<std::string, Outcome>> results;
  for (auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    results.emplace_back(name, o);
  }
  // The contract criterion covers every instance solved above.
  results.insert(results.begin() + 4, {"AC5", ac5()});

  int failed = 0;
  for (const auto& [name, o] : results) {
    std::printf("%-4s %s  %s\n", name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(results.size()) - failed, results.size());
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
