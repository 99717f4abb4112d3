#pragma once

#include <vector>

#include "sobolev/jordan.hpp"
#include "sobolev/quadrature.hpp"

namespace sobolev {

/// mu_r = gamma_r * mu for r = 0..s, discretized by `rule`: one block of size s+1
/// per node with alpha_r = r sqrt(gamma_r / gamma_{r-1}) and beta_j = sqrt(gamma_0 w_j).
SpectralData build_same_measure(const quadrature::QuadratureRule& rule,
                                const std::vector<double>& gammas);

/// Discrete Laguerre-Sobolev product: M p(c)q(c) + N p'(c)q'(c) on top of `rule`.
/// The 2x2 block at c comes first, followed by one 1x1 block per node.
SpectralData build_discrete_laguerre_sobolev(const quadrature::QuadratureRule& rule, double c,
                                             double m_weight, double n_weight);

/// Radau rule plus gamma p'(a) q'(a) at the pinned endpoint a. The endpoint
/// block is placed first.
SpectralData build_radau_endpoint(const quadrature::QuadratureRule& rule, double gamma,
                                  double endpoint);

} // namespace sobolev
