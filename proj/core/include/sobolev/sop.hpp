#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sobolev/hiep.hpp"
#include "sobolev/inner_product.hpp"

namespace sobolev::sop {

/// p_0(x)..p_k(x) and their first derivatives.
struct SopEvaluation {
  std::vector<cplx> values;
  std::vector<cplx> derivs;
};

/// Evaluates the orthonormal sequence defined by the recurrence
///   x p_{j-1}(x) = Σ_{i<=j} h_{i,j} p_{i-1}(x) + h_{j+1,j} p_j(x),  p_0 = 1 / w_norm,
/// with derivatives from the differentiated recurrence. Degrees up to dim(H)-1
/// need only H; degree dim(H) additionally needs `h_next` (h_{k+1,k} of a
/// truncated Arnoldi run). Throws std::invalid_argument when a zero subdiagonal
/// cuts the sequence short.
SopEvaluation evaluate(const hiep::HessenbergMatrix& h, double w_norm, cplx x, Index k,
                       std::optional<double> h_next = std::nullopt);

/// Monomial coefficients of p_0..p_k. Only sensible at small degree.
std::vector<PolyCoeffs> monomial_coefficients(const hiep::HessenbergMatrix& h, double w_norm, Index k);

/// Hermite least-squares fit expressed in the Sobolev orthonormal basis.
struct LsqFit {
  std::vector<cplx> coefficients; ///< c_0..c_n
  Index degree = 0;
  double value_error = 0.0;       ///< max |f_n - f| on the probe grid
  double derivative_error = 0.0;  ///< max |f_n' - f'| on the probe grid

  /// f_n(x) and f_n'(x).
  std::pair<cplx, cplx> operator()(const hiep::HessenbergMatrix& h, double w_norm, double x) const;
};

/// c_j = Σ_m w_m [ f(x_m) conj(p_j(x_m)) + gamma f'(x_m) conj(p_j'(x_m)) ], j = 0..n.
/// `h` must come from the matching Sobolev product and n < dim(h).
LsqFit hermite_least_squares(const hiep::HessenbergMatrix& h, double w_norm, std::span<const double> nodes,
                             std::span<const double> node_weights, std::span<const double> f_values,
                             std::span<const double> fprime_values, double gamma, Index n);

/// Fills the max-norm errors of `fit` against f and f' on a uniform grid.
void measure_errors(LsqFit& fit, const hiep::HessenbergMatrix& h, double w_norm,
                    const std::function<double(double)>& f, const std::function<double(double)>& fprime,
                    double lo = -1.0, double hi = 1.0, int points = 2001);

/// Leading m x m principal submatrix of H_{m+1}^2 where H solves the HIEP for
/// (Z - cI, w); `shifted` must already be the shifted data.
CMatrix pentadiagonal_recurrence(const SpectralData& shifted, Index m, hiep::SolverKind solver);

/// Frobenius norm of the entries with |i - j| > 2.
double off_band_norm(const CMatrix& b, Index bandwidth = 2);

} // namespace sobolev::sop
