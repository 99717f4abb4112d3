#include "sobolev/sop.hpp"

#include <cmath>
#include <string>

namespace sobolev::sop {

namespace {

double subdiagonal(const hiep::HessenbergMatrix& h, Index j, std::optional<double> h_next) {
  // h_{j+1,j} in 1-based terms: the coefficient dividing p_j.
  if (j < h.dim()) return h(j, j - 1).real();
  if (j == h.dim() && h_next) return *h_next;
  throw std::invalid_argument("sop: degree " + std::to_string(j) + " exceeds the recurrence data");
}

} // namespace

SopEvaluation evaluate(const hiep::HessenbergMatrix& h, double w_norm, cplx x, Index k,
                       std::optional<double> h_next) {
  if (!(w_norm > 0.0)) throw std::invalid_argument("sop: w_norm must be positive");
  if (k < 0) throw std::invalid_argument("sop: negative degree");
  const auto n = static_cast<std::size_t>(k + 1);
  SopEvaluation ev;
  ev.values.resize(n);
  ev.derivs.resize(n);
  ev.values[0] = 1.0 / w_norm;
  ev.derivs[0] = 0.0;
  for (Index j = 1; j <= k; ++j) {
    const double sub = subdiagonal(h, j, h_next);
    if (!(sub > 0.0))
      throw std::invalid_argument("sop: zero subdiagonal before degree " + std::to_string(k));
    const auto uj = static_cast<std::size_t>(j);
    cplx v = x * ev.values[uj - 1];
    cplx d = ev.values[uj - 1] + x * ev.derivs[uj - 1];
    for (Index i = 0; i < j; ++i) {
      const cplx hij = h(i, j - 1);
      v -= hij * ev.values[static_cast<std::size_t>(i)];
      d -= hij * ev.derivs[static_cast<std::size_t>(i)];
    }
    ev.values[uj] = v / sub;
    ev.derivs[uj] = d / sub;
  }
  return ev;
}

std::vector<PolyCoeffs> monomial_coefficients(const hiep::HessenbergMatrix& h, double w_norm, Index k) {
  if (k >= h.dim()) throw std::invalid_argument("sop: monomial expansion needs k < dim(H)");
  std::vector<std::vector<cplx>> c(static_cast<std::size_t>(k + 1));
  c[0] = {cplx(1.0 / w_norm)};
  for (Index j = 1; j <= k; ++j) {
    const double sub = h(j, j - 1).real();
    if (!(sub > 0.0)) throw std::invalid_argument("sop: zero subdiagonal");
    std::vector<cplx> next(static_cast<std::size_t>(j + 1), 0.0);
    const auto& prev = c[static_cast<std::size_t>(j - 1)];
    for (std::size_t t = 0; t < prev.size(); ++t) next[t + 1] += prev[t];
    for (Index i = 0; i < j; ++i) {
      const auto& pi = c[static_cast<std::size_t>(i)];
      for (std::size_t t = 0; t < pi.size(); ++t) next[t] -= h(i, j - 1) * pi[t];
    }
    for (auto& v : next) v /= sub;
    c[static_cast<std::size_t>(j)] = std::move(next);
  }
  std::vector<PolyCoeffs> out;
  out.reserve(c.size());
  for (auto& v : c) out.emplace_back(std::move(v));
  return out;
}

std::pair<cplx, cplx> LsqFit::operator()(const hiep::HessenbergMatrix& h, double w_norm, double x) const {
  const SopEvaluation ev = evaluate(h, w_norm, x, degree);
  cplx v = 0.0, d = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    v += coefficients[j] * ev.values[j];
    d += coefficients[j] * ev.derivs[j];
  }
  return {v, d};
}

LsqFit hermite_least_squares(const hiep::HessenbergMatrix& h, double w_norm, std::span<const double> nodes,
                             std::span<const double> node_weights, std::span<const double> f_values,
                             std::span<const double> fprime_values, double gamma, Index n) {
  const std::size_t m = nodes.size();
  if (node_weights.size() != m || f_values.size() != m || fprime_values.size() != m)
    throw std::invalid_argument("least squares: node, weight and sample arrays differ in length");
  if (n < 0 || n >= h.dim())
    throw std::invalid_argument("least squares: degree " + std::to_string(n) + " needs n < dim(H) = " +
                                std::to_string(h.dim()));
  if (gamma < 0.0) throw std::invalid_argument("least squares: gamma must be non-negative");

  LsqFit fit;
  fit.degree = n;
  fit.coefficients.assign(static_cast<std::size_t>(n + 1), 0.0);
  for (std::size_t t = 0; t < m; ++t) {
    const SopEvaluation ev = evaluate(h, w_norm, nodes[t], n);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
      fit.coefficients[j] += node_weights[t] * (f_values[t] * std::conj(ev.values[j]) +
                                                gamma * fprime_values[t] * std::conj(ev.derivs[j]));
    }
  }
  return fit;
}

void measure_errors(LsqFit& fit, const hiep::HessenbergMatrix& h, double w_norm,
                    const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                    double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("least squares: probe grid needs at least 2 points");
  fit.value_error = 0.0;
  fit.derivative_error = 0.0;
  for (int t = 0; t < points; ++t) {
    const double x = lo + (hi - lo) * static_cast<double>(t) / static_cast<double>(points - 1);
    const auto [v, d] = fit(h, w_norm, x);
    fit.value_error = std::max(fit.value_error, std::abs(v - f(x)));
    fit.derivative_error = std::max(fit.derivative_error, std::abs(d - fprime(x)));
  }
}

CMatrix pentadiagonal_recurrence(const SpectralData& shifted, Index m, hiep::SolverKind solver) {
  if (m < 1) throw std::invalid_argument("pentadiagonal: m must be >= 1");
  if (shifted.z.dim() < m + 1)
    throw std::invalid_argument("pentadiagonal: spectral data too small for m = " + std::to_string(m));
  const hiep::HiepSolution sol = hiep::solve(shifted, solver);
  const CMatrix hm = sol.h.matrix().topLeftCorner(m + 1, m + 1);
  return (hm * hm).topLeftCorner(m, m);
}

double off_band_norm(const CMatrix& b, Index bandwidth) {
  double s = 0.0;
  for (Index j = 0; j < b.cols(); ++j)
    for (Index i = 0; i < b.rows(); ++i)
      if (std::abs(i - j) > bandwidth) s += std::norm(b(i, j));
  return std::sqrt(s);
}

} // namespace sobolev::sop
