#include "sobolev/jordan.hpp"

#include <cmath>
#include <string>

#include "sobolev/inner_product.hpp"

namespace sobolev {

CMatrix JordanBlock::dense() const {
  const Index n = size();
  CMatrix j = CMatrix::Zero(n, n);
  const Index k = n - 1;
  for (Index r = 0; r < n; ++r) j(r, r) = eigenvalue;
  for (Index r = 0; r < k; ++r) j(r, r + 1) = superdiag[static_cast<std::size_t>(k - 1 - r)];
  return j;
}

JordanOperator::JordanOperator(std::vector<JordanBlock> blocks) : blocks_(std::move(blocks)) {
  offsets_.reserve(blocks_.size());
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    for (const cplx& a : b.superdiag)
      if (a == cplx(0.0))
        throw std::invalid_argument("jordan: zero superdiagonal scaling in block " + std::to_string(j));
    for (std::size_t i = 0; i < j; ++i)
      if (blocks_[i].eigenvalue == b.eigenvalue)
        throw std::invalid_argument("jordan: duplicate eigenvalue in blocks " + std::to_string(i) +
                                    " and " + std::to_string(j));
    offsets_.push_back(dim_);
    dim_ += b.size();
  }
}

CVector JordanOperator::apply(const CVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("jordan: dimension mismatch in apply");
  CVector y(dim_);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const auto& b = blocks_[j];
    const Index o = offsets_[j];
    const Index k = b.size() - 1;
    for (Index r = 0; r < k; ++r)
      y(o + r) = b.eigenvalue * x(o + r) + b.superdiag[static_cast<std::size_t>(k - 1 - r)] * x(o + r + 1);
    y(o + k) = b.eigenvalue * x(o + k);
  }
  return y;
}

CMatrix JordanOperator::dense() const {
  CMatrix z = CMatrix::Zero(dim_, dim_);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const Index n = blocks_[j].size();
    z.block(offsets_[j], offsets_[j], n, n) = blocks_[j].dense();
  }
  return z;
}

double JordanOperator::frobenius_norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) {
    s += static_cast<double>(b.size()) * std::norm(b.eigenvalue);
    for (const cplx& a : b.superdiag) s += std::norm(a);
  }
  return std::sqrt(s);
}

JordanOperator JordanOperator::shifted(cplx shift) const {
  std::vector<JordanBlock> out = blocks_;
  for (auto& b : out) b.eigenvalue -= shift;
  return JordanOperator(std::move(out));
}

JordanOperator JordanOperator::leading(std::size_t count) const {
  if (count > blocks_.size()) throw std::invalid_argument("jordan: leading count exceeds block count");
  return JordanOperator(std::vector<JordanBlock>(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(count)));
}

WeightVector::WeightVector(std::vector<cplx> betas) : betas_(std::move(betas)) {
  for (std::size_t j = 0; j < betas_.size(); ++j)
    if (betas_[j] == cplx(0.0))
      throw std::invalid_argument("weights: beta_" + std::to_string(j) + " is zero");
}

double WeightVector::norm() const {
  double s = 0.0;
  for (const cplx& b : betas_) s += std::norm(b);
  return std::sqrt(s);
}

CVector WeightVector::dense(const JordanOperator& z) const {
  if (z.block_count() != betas_.size())
    throw std::invalid_argument("weights: block count mismatch");
  CVector w = CVector::Zero(z.dim());
  for (std::size_t j = 0; j < betas_.size(); ++j)
    w(z.offset(j) + z.blocks()[j].size() - 1) = betas_[j];
  return w;
}

WeightVector WeightVector::leading(std::size_t count) const {
  if (count > betas_.size()) throw std::invalid_argument("weights: leading count exceeds size");
  return WeightVector(std::vector<cplx>(betas_.begin(), betas_.begin() + static_cast<std::ptrdiff_t>(count)));
}

void SpectralData::validate() const {
  if (z.block_count() == 0) throw std::invalid_argument("spectral data: no blocks");
  if (z.block_count() != w.size())
    throw std::invalid_argument("spectral data: " + std::to_string(z.block_count()) + " blocks but " +
                                std::to_string(w.size()) + " weights");
}

CVector jordan_poly_column(const JordanBlock& block, std::span<const cplx> coeffs) {
  const Index n = block.size();
  const Index k = n - 1;
  PolyCoeffs p(std::vector<cplx>(coeffs.begin(), coeffs.end()));
  CVector col(n);
  cplx scale = 1.0;
  for (Index r = 0; r <= k; ++r) {
    if (r > 0) scale *= block.superdiag[static_cast<std::size_t>(r - 1)] / static_cast<double>(r);
    col(k - r) = scale * p.derivative_at(static_cast<int>(r), block.eigenvalue);
  }
  return col;
}

} // namespace sobolev
