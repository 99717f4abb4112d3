#pragma once

#include <vector>

#include "sobolev/types.hpp"

namespace sobolev::quadrature {

/// Three-term recurrence data of a positive measure on the real line.
/// `offdiag[k-1]` couples degree k-1 and k; `moment0` is the total mass.
struct JacobiCoefficients {
  std::vector<double> diag;
  std::vector<double> offdiag;
  double moment0 = 0.0;

  std::size_t size() const { return diag.size(); }
  void validate() const;
};

/// Nodes ascending, weights strictly positive.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
  /// Σ w_j f(x_j)
  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) s += weights[j] * f(nodes[j]);
    return s;
  }
};

JacobiCoefficients legendre_jacobi(int n);

/// Generalized Laguerre weight x^alpha e^{-x} on [0, inf).
JacobiCoefficients laguerre_jacobi(int n, double alpha);

/// Eigenvalues of the Jacobi matrix by implicit QL with Wilkinson shifts,
/// returned ascending. Throws NumericalFailure after 30 sweeps on one eigenvalue.
std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag,
                                            const std::vector<double>& offdiag);

/// Golub-Welsch: nodes are the Jacobi eigenvalues, weights are moment0 times the
/// squared first component of the normalized eigenvectors.
QuadratureRule golub_welsch(const JacobiCoefficients& jac);

QuadratureRule gauss_legendre(int n);
QuadratureRule gauss_laguerre(int n, double alpha);

/// Gauss-Radau rule for the Legendre measure with `n_free + 1` points, one of
/// which is pinned at `endpoint` (default +1). Exact up to degree 2*n_free.
QuadratureRule gauss_radau(int n_free, double endpoint = 1.0);

inline QuadratureRule gauss_radau_right(int n_free) { return gauss_radau(n_free, 1.0); }

} // namespace sobolev::quadrature
