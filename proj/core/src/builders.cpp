#include "sobolev/builders.hpp"

#include <cmath>

namespace sobolev {

SpectralData build_same_measure(const quadrature::QuadratureRule& rule,
                                const std::vector<double>& gammas) {
  if (gammas.empty()) throw std::invalid_argument("build_same_measure: need at least gamma_0");
  for (double g : gammas)
    if (!(g > 0.0)) throw std::invalid_argument("build_same_measure: gammas must be positive");

  std::vector<cplx> alphas;
  for (std::size_t r = 1; r < gammas.size(); ++r)
    alphas.emplace_back(static_cast<double>(r) * std::sqrt(gammas[r] / gammas[r - 1]));

  std::vector<JordanBlock> blocks;
  std::vector<cplx> betas;
  blocks.reserve(rule.size());
  betas.reserve(rule.size());
  for (std::size_t j = 0; j < rule.size(); ++j) {
    blocks.push_back(JordanBlock{cplx(rule.nodes[j]), alphas});
    betas.emplace_back(std::sqrt(gammas[0] * rule.weights[j]));
  }
  return {JordanOperator(std::move(blocks)), WeightVector(std::move(betas))};
}

SpectralData build_discrete_laguerre_sobolev(const quadrature::QuadratureRule& rule, double c,
                                             double m_weight, double n_weight) {
  if (!(m_weight > 0.0) || !(n_weight > 0.0))
    throw std::invalid_argument("discrete laguerre-sobolev: M and N must be positive");
  std::vector<JordanBlock> blocks;
  std::vector<cplx> betas;
  blocks.push_back(JordanBlock{cplx(c), {cplx(std::sqrt(n_weight) / std::sqrt(m_weight))}});
  betas.emplace_back(std::sqrt(m_weight));
  for (std::size_t j = 0; j < rule.size(); ++j) {
    if (rule.nodes[j] == c)
      throw std::invalid_argument("discrete laguerre-sobolev: c coincides with a quadrature node");
    blocks.push_back(JordanBlock{cplx(rule.nodes[j]), {}});
    betas.emplace_back(std::sqrt(rule.weights[j]));
  }
  return {JordanOperator(std::move(blocks)), WeightVector(std::move(betas))};
}

SpectralData build_radau_endpoint(const quadrature::QuadratureRule& rule, double gamma,
                                  double endpoint) {
  if (!(gamma > 0.0)) throw std::invalid_argument("radau endpoint: gamma must be positive");
  std::size_t pinned = rule.size();
  for (std::size_t j = 0; j < rule.size(); ++j)
    if (std::abs(rule.nodes[j] - endpoint) <= 1e-14 * std::max(1.0, std::abs(endpoint))) pinned = j;
  if (pinned == rule.size())
    throw std::invalid_argument("radau endpoint: rule does not contain the endpoint");

  const double beta0 = std::sqrt(rule.weights[pinned]);
  std::vector<JordanBlock> blocks;
  std::vector<cplx> betas;
  blocks.push_back(JordanBlock{cplx(endpoint), {cplx(std::sqrt(gamma) / beta0)}});
  betas.emplace_back(beta0);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    if (j == pinned) continue;
    blocks.push_back(JordanBlock{cplx(rule.nodes[j]), {}});
    betas.emplace_back(std::sqrt(rule.weights[j]));
  }
  return {JordanOperator(std::move(blocks)), WeightVector(std::move(betas))};
}

} // namespace sobolev
