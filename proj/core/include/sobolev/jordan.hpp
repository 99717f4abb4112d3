#pragma once

#include <span>
#include <vector>

#include "sobolev/types.hpp"

namespace sobolev {

/// One Jordan block J(z; alpha_1..alpha_k) of size k+1.
///
/// The superdiagonal is stored in the order alpha_1, ..., alpha_k where alpha_1
/// sits next to the last diagonal entry: the dense block has alpha_{k-r} at
/// position (r, r+1).
struct JordanBlock {
  cplx eigenvalue;
  std::vector<cplx> superdiag;

  Index size() const { return static_cast<Index>(superdiag.size()) + 1; }
  CMatrix dense() const;
};

/// Block-diagonal Jordan matrix Z = J_1 ⊕ ... ⊕ J_n, stored implicitly.
class JordanOperator {
public:
  JordanOperator() = default;
  /// Throws std::invalid_argument on duplicate eigenvalues or zero scalings.
  explicit JordanOperator(std::vector<JordanBlock> blocks);

  const std::vector<JordanBlock>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  Index dim() const { return dim_; }
  /// Row offset of block j within the dense matrix.
  Index offset(std::size_t j) const { return offsets_[j]; }

  /// y = Z x in O(m).
  CVector apply(const CVector& x) const;
  CMatrix dense() const;
  double frobenius_norm() const;

  /// Z - shift * I (block structure unchanged).
  JordanOperator shifted(cplx shift) const;
  /// Blocks [0, count) as a standalone operator.
  JordanOperator leading(std::size_t count) const;

private:
  std::vector<JordanBlock> blocks_;
  std::vector<Index> offsets_;
  Index dim_ = 0;
};

/// Starting vector w: beta_j in the last slot of block j, zeros elsewhere.
class WeightVector {
public:
  WeightVector() = default;
  /// Throws std::invalid_argument on any zero beta.
  explicit WeightVector(std::vector<cplx> betas);

  const std::vector<cplx>& betas() const { return betas_; }
  std::size_t size() const { return betas_.size(); }
  double norm() const;
  CVector dense(const JordanOperator& z) const;
  WeightVector leading(std::size_t count) const;

private:
  std::vector<cplx> betas_;
};

/// The (Z, w) pair that encodes a discretized Sobolev inner product.
struct SpectralData {
  JordanOperator z;
  WeightVector w;

  /// Checks block/beta alignment; throws std::invalid_argument.
  void validate() const;
};

/// Last column of p(J) for polynomial coefficients `coeffs` (monomial basis),
/// i.e. entries (prod_{i<=r} alpha_i / r!) p^{(r)}(z) with p(z) in the last slot.
CVector jordan_poly_column(const JordanBlock& block, std::span<const cplx> coeffs);

} // namespace sobolev
