#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sobolev/jordan.hpp"

namespace sobolev {

/// Polynomial in the monomial basis, c_0 + c_1 z + ... + c_d z^d.
class PolyCoeffs {
public:
  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}
  PolyCoeffs(std::initializer_list<cplx> coeffs) : c_(coeffs) {}

  const std::vector<cplx>& coeffs() const { return c_; }
  /// Formal degree (length - 1); -1 for the empty polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  cplx operator()(cplx z) const;
  PolyCoeffs derivative() const;
  /// p^{(r)}(z) computed from the exact differentiated coefficients.
  cplx derivative_at(int r, cplx z) const;
  /// p(A) by Horner's scheme on a dense matrix.
  CMatrix of_matrix(const CMatrix& a) const;

private:
  std::vector<cplx> c_;
};

/// Discretized diagonal Sobolev inner product
///   <p, q>_S = Σ_j Σ_r weights_{j,r} p^{(r)}(z_j) conj(q^{(r)}(z_j)).
struct SobolevProductSpec {
  struct Term {
    cplx node;
    std::vector<double> weights; // index r = derivative order
  };
  std::vector<Term> terms;

  /// Sequential dominance plus positive highest-order weight; throws std::invalid_argument.
  void validate() const;
};

/// Reads the derivative weights |beta_j|^2 |prod_{i<=r} alpha_i / r!|^2 off (Z, w).
SobolevProductSpec spec_of(const JordanOperator& z, const WeightVector& w);

cplx inner_product_direct(const PolyCoeffs& p, const PolyCoeffs& q, const SobolevProductSpec& spec);

/// (q(Z) w)^H (p(Z) w) through dense matrix functions. Intended for small m.
cplx inner_product_matrix(const PolyCoeffs& p, const PolyCoeffs& q, const JordanOperator& z,
                          const WeightVector& w);

} // namespace sobolev
