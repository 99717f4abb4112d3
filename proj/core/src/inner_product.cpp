#include "sobolev/inner_product.hpp"

#include <cmath>
#include <string>

namespace sobolev {

cplx PolyCoeffs::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolyCoeffs PolyCoeffs::derivative() const {
  if (c_.size() <= 1) return PolyCoeffs{};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) d[i] = static_cast<double>(i + 1) * c_[i + 1];
  return PolyCoeffs(std::move(d));
}

cplx PolyCoeffs::derivative_at(int r, cplx z) const {
  PolyCoeffs d = *this;
  for (int i = 0; i < r; ++i) d = d.derivative();
  return d(z);
}

CMatrix PolyCoeffs::of_matrix(const CMatrix& a) const {
  const Index n = a.rows();
  CMatrix acc = CMatrix::Zero(n, n);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * a;
    acc.diagonal().array() += *it;
  }
  return acc;
}

void SobolevProductSpec::validate() const {
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& w = terms[j].weights;
    if (w.empty()) throw std::invalid_argument("sobolev spec: node " + std::to_string(j) + " has no weights");
    if (!(w.back() > 0.0))
      throw std::invalid_argument("sobolev spec: highest-order weight at node " + std::to_string(j) +
                                  " must be positive");
    for (std::size_t r = 0; r < w.size(); ++r) {
      if (w[r] < 0.0) throw std::invalid_argument("sobolev spec: negative weight");
      if (r > 0 && w[r] != 0.0 && w[r - 1] == 0.0)
        throw std::invalid_argument("sobolev spec: node " + std::to_string(j) +
                                    " is not sequentially dominated");
    }
  }
}

SobolevProductSpec spec_of(const JordanOperator& z, const WeightVector& w) {
  SpectralData{z, w}.validate();
  SobolevProductSpec spec;
  spec.terms.reserve(z.block_count());
  for (std::size_t j = 0; j < z.block_count(); ++j) {
    const auto& b = z.blocks()[j];
    SobolevProductSpec::Term term{b.eigenvalue, {}};
    const double beta2 = std::norm(w.betas()[j]);
    double scale2 = 1.0; // |prod alpha_i / r!|^2
    for (Index r = 0; r < b.size(); ++r) {
      if (r > 0) scale2 *= std::norm(b.superdiag[static_cast<std::size_t>(r - 1)]) / double(r * r);
      term.weights.push_back(beta2 * scale2);
    }
    spec.terms.push_back(std::move(term));
  }
  return spec;
}

cplx inner_product_direct(const PolyCoeffs& p, const PolyCoeffs& q, const SobolevProductSpec& spec) {
  cplx sum = 0.0;
  for (const auto& term : spec.terms) {
    PolyCoeffs dp = p, dq = q;
    for (std::size_t r = 0; r < term.weights.size(); ++r) {
      if (r > 0) {
        dp = dp.derivative();
        dq = dq.derivative();
      }
      if (term.weights[r] != 0.0) sum += term.weights[r] * dp(term.node) * std::conj(dq(term.node));
    }
  }
  return sum;
}

cplx inner_product_matrix(const PolyCoeffs& p, const PolyCoeffs& q, const JordanOperator& z,
                          const WeightVector& w) {
  const CMatrix zd = z.dense();
  const CVector wd = w.dense(z);
  const CVector x = p.of_matrix(zd) * wd;
  const CVector y = q.of_matrix(zd) * wd;
  return y.dot(x); // Eigen's dot conjugates the left operand
}

} // namespace sobolev
