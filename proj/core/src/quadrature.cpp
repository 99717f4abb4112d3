#include "sobolev/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sobolev::quadrature {

void JacobiCoefficients::validate() const {
  if (diag.empty()) throw std::invalid_argument("jacobi: empty recurrence");
  if (offdiag.size() + 1 != diag.size())
    throw std::invalid_argument("jacobi: offdiag must have size n-1");
  if (!(moment0 > 0.0)) throw std::invalid_argument("jacobi: moment0 must be positive");
  for (double b : offdiag)
    if (!(b > 0.0)) throw std::invalid_argument("jacobi: off-diagonal entries must be positive");
}

double QuadratureRule::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

JacobiCoefficients legendre_jacobi(int n) {
  if (n < 1) throw std::invalid_argument("legendre_jacobi: n must be >= 1");
  JacobiCoefficients jac;
  jac.diag.assign(static_cast<std::size_t>(n), 0.0);
  jac.offdiag.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    jac.offdiag.push_back(kk / std::sqrt(4.0 * kk * kk - 1.0));
  }
  jac.moment0 = 2.0;
  return jac;
}

JacobiCoefficients laguerre_jacobi(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("laguerre_jacobi: n must be >= 1");
  if (!(alpha > -1.0)) throw std::invalid_argument("laguerre_jacobi: alpha must be > -1");
  JacobiCoefficients jac;
  jac.diag.reserve(static_cast<std::size_t>(n));
  jac.offdiag.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n; ++k) jac.diag.push_back(2.0 * k + alpha + 1.0);
  for (int k = 1; k < n; ++k) jac.offdiag.push_back(std::sqrt(k * (k + alpha)));
  jac.moment0 = std::exp(std::lgamma(alpha + 1.0));
  return jac;
}

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n)
    throw std::invalid_argument("tridiagonal_eigenvalues: offdiag must have size n-1");

  std::vector<double> d = diag;
  // e[i] couples i and i+1; e[n-1] is a sentinel zero.
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  constexpr int kMaxSweeps = 30;
  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == kMaxSweeps)
        throw NumericalFailure("tridiagonal QL: no convergence for eigenvalue " + std::to_string(l),
                               static_cast<std::size_t>(sweeps));

      // Wilkinson shift from the leading 2x2 of the unreduced block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// Weight of the Gauss rule at an eigenvalue x of the Jacobi matrix: moment0 / Σ v_k^2,
// where v is the (unnormalized) eigenvector with v_0 = 1 generated by the
// recurrence rows 0..n-2. All terms are positive, so small weights keep their
// relative accuracy. Running rescaling keeps v finite for large x.
double christoffel_weight(const JacobiCoefficients& jac, double x) {
  const std::size_t n = jac.size();
  double prev = 0.0, cur = 1.0, sum = 1.0;
  double log_scale = 0.0; // true values = stored * exp(log_scale)
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double bprev = (k == 0) ? 0.0 : jac.offdiag[k - 1];
    double next = ((x - jac.diag[k]) * cur - bprev * prev) / jac.offdiag[k];
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (std::abs(cur) > 1e100) {
      constexpr double shrink = 1e-100;
      prev *= shrink;
      cur *= shrink;
      sum *= shrink * shrink;
      log_scale += 100.0 * std::log(10.0);
    }
  }
  return jac.moment0 * std::exp(-2.0 * log_scale) / sum;
}

// Residual of the last recurrence row, (x - a_{n-1}) v_{n-1} - b_{n-1} v_{n-2},
// and its derivative in x. Zero exactly at the eigenvalues. Scaled by a common
// positive factor, which leaves the Newton step unchanged.
std::pair<double, double> recurrence_residual(const JacobiCoefficients& jac, double x) {
  const std::size_t n = jac.size();
  double prev = 0.0, cur = 1.0, dprev = 0.0, dcur = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double bprev = (k == 0) ? 0.0 : jac.offdiag[k - 1];
    const double bnext = (k + 1 < n) ? jac.offdiag[k] : 1.0;
    const double next = ((x - jac.diag[k]) * cur - bprev * prev) / bnext;
    const double dnext = (cur + (x - jac.diag[k]) * dcur - bprev * dprev) / bnext;
    prev = cur;
    cur = next;
    dprev = dcur;
    dcur = dnext;
    const double big = std::max(std::abs(cur), std::abs(dcur));
    if (big > 1e100) {
      prev *= 1e-100;
      cur *= 1e-100;
      dprev *= 1e-100;
      dcur *= 1e-100;
    }
  }
  return {cur, dcur};
}

// Newton polish of an eigenvalue from the QL sweep. The sweep has absolute error
// of order eps * ||J||, which is large relative to the nodes near zero of the
// Laguerre rules; the weights there are sensitive to it. The step is kept only
// when it is small and does not increase the residual.
double polish_node(const JacobiCoefficients& jac, double x, double scale) {
  for (int it = 0; it < 3; ++it) {
    const auto [r, dr] = recurrence_residual(jac, x);
    if (r == 0.0 || dr == 0.0 || !std::isfinite(r) || !std::isfinite(dr)) break;
    const double step = r / dr;
    if (!(std::abs(step) <= 1e-8 * scale)) break;
    const double candidate = x - step;
    if (!(std::abs(recurrence_residual(jac, candidate).first) < std::abs(r))) break;
    x = candidate;
    if (std::abs(step) <= kEps * std::abs(x)) break;
  }
  return x;
}

QuadratureRule rule_from(const JacobiCoefficients& jac, std::vector<double> nodes, double* pinned = nullptr) {
  double scale = 0.0;
  for (double d : jac.diag) scale = std::max(scale, std::abs(d));
  for (double b : jac.offdiag) scale = std::max(scale, 2.0 * b);
  for (double& x : nodes)
    if (&x != pinned) x = polish_node(jac, x, scale);
  QuadratureRule rule;
  rule.weights.reserve(nodes.size());
  for (double x : nodes) rule.weights.push_back(christoffel_weight(jac, x));
  rule.nodes = std::move(nodes);
  return rule;
}

} // namespace

QuadratureRule golub_welsch(const JacobiCoefficients& jac) {
  jac.validate();
  return rule_from(jac, tridiagonal_eigenvalues(jac.diag, jac.offdiag));
}

QuadratureRule gauss_legendre(int n) { return golub_welsch(legendre_jacobi(n)); }

QuadratureRule gauss_laguerre(int n, double alpha) { return golub_welsch(laguerre_jacobi(n, alpha)); }

QuadratureRule gauss_radau(int n_free, double endpoint) {
  if (n_free < 0) throw std::invalid_argument("gauss_radau: n_free must be >= 0");
  if (!(std::abs(endpoint) >= 1.0))
    throw std::invalid_argument("gauss_radau: endpoint must lie on or outside [-1, 1]");

  JacobiCoefficients jac = legendre_jacobi(n_free + 1);
  const std::size_t n = jac.size();
  if (n == 1) {
    jac.diag[0] = endpoint;
  } else {
    // Solve (J_{n-1} - a I) delta = b_{n-1}^2 e_{n-1} by Thomas elimination; the
    // modified last diagonal a + delta_{n-1} makes `endpoint` an eigenvalue.
    const std::size_t k = n - 1;
    std::vector<double> cprime(k, 0.0), rhs(k, 0.0);
    rhs[k - 1] = jac.offdiag[k - 1] * jac.offdiag[k - 1];
    double denom = jac.diag[0] - endpoint;
    cprime[0] = (k > 1) ? jac.offdiag[0] / denom : 0.0;
    rhs[0] /= denom;
    for (std::size_t i = 1; i < k; ++i) {
      denom = (jac.diag[i] - endpoint) - jac.offdiag[i - 1] * cprime[i - 1];
      cprime[i] = (i + 1 < k) ? jac.offdiag[i] / denom : 0.0;
      rhs[i] = (rhs[i] - jac.offdiag[i - 1] * rhs[i - 1]) / denom;
    }
    // Only the last component of the solution is needed.
    jac.diag[n - 1] = endpoint + rhs[k - 1];
  }

  std::vector<double> nodes = tridiagonal_eigenvalues(jac.diag, jac.offdiag);
  // The pinned node is known exactly; remove the eigensolver's rounding.
  auto nearest = std::min_element(nodes.begin(), nodes.end(), [&](double a, double b) {
    return std::abs(a - endpoint) < std::abs(b - endpoint);
  });
  *nearest = endpoint;
  return rule_from(jac, std::move(nodes), &*nearest);
}

} // namespace sobolev::quadrature
