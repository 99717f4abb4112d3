#include "sobolev/hiep.hpp"

#include <cmath>

namespace sobolev::hiep {

HessenbergMatrix HessenbergMatrix::leading(Index k) const {
  if (k < 0 || k > dim()) throw std::invalid_argument("hessenberg: leading size out of range");
  return HessenbergMatrix(m_.topLeftCorner(k, k));
}

double HessenbergMatrix::below_band_norm() const {
  double s = 0.0;
  for (Index j = 0; j < m_.cols(); ++j)
    for (Index i = j + 2; i < m_.rows(); ++i) s += std::norm(m_(i, j));
  return std::sqrt(s);
}

PlaneRotation PlaneRotation::from_parameters(cplx a, cplx b, Index i, Index j, Index dim) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-14)
    throw std::invalid_argument("plane rotation: |a|^2 + |b|^2 must equal 1");
  if (i == j || i < 0 || j < 0 || i >= dim || j >= dim)
    throw std::invalid_argument("plane rotation: invalid coordinate pair");
  return PlaneRotation(a, b, i, j, dim);
}

PlaneRotation PlaneRotation::annihilating(cplx x, cplx y, Index i, Index j, Index dim) {
  const double rho = std::hypot(std::abs(x), std::abs(y));
  if (rho == 0.0) return PlaneRotation(1.0, 0.0, i, j, dim);
  return PlaneRotation(x / rho, -y / rho, i, j, dim);
}

void PlaneRotation::apply_left(CMatrix& m) const {
  const cplx ca = std::conj(a_), cb = std::conj(b_);
  for (Index c = 0; c < m.cols(); ++c) {
    const cplx u = m(i_, c), v = m(j_, c);
    m(i_, c) = ca * u - cb * v;
    m(j_, c) = b_ * u + a_ * v;
  }
}

void PlaneRotation::apply_left(CVector& v) const {
  const cplx u = v(i_), w = v(j_);
  v(i_) = std::conj(a_) * u - std::conj(b_) * w;
  v(j_) = b_ * u + a_ * w;
}

void PlaneRotation::apply_right_adjoint(CMatrix& m) const {
  const cplx ca = std::conj(a_), cb = std::conj(b_);
  for (Index r = 0; r < m.rows(); ++r) {
    const cplx u = m(r, i_), v = m(r, j_);
    m(r, i_) = u * a_ - v * b_;
    m(r, j_) = u * cb + v * ca;
  }
}

CMatrix PlaneRotation::dense() const {
  CMatrix p = CMatrix::Identity(dim_, dim_);
  p(i_, i_) = std::conj(a_);
  p(i_, j_) = -std::conj(b_);
  p(j_, i_) = b_;
  p(j_, j_) = a_;
  return p;
}

HouseholderReflector HouseholderReflector::from(const CVector& c) {
  const double nrm = c.norm();
  if (c.size() == 0 || nrm == 0.0) throw std::invalid_argument("householder: zero vector");
  HouseholderReflector r;
  const double c1 = std::abs(c(0));
  const cplx phase = (c1 == 0.0) ? cplx(1.0) : c(0) / c1;
  r.alpha_ = nrm * phase;
  r.y_ = c;
  r.y_(0) += r.alpha_;
  r.tau_ = 2.0 / r.y_.squaredNorm();
  return r;
}

CVector HouseholderReflector::apply(const CVector& v) const {
  return v - (tau_ * y_.dot(v)) * y_;
}

void HouseholderReflector::apply_left(CMatrix& m, std::span<const Index> idx) const {
  const Index n = static_cast<Index>(idx.size());
  for (Index c = 0; c < m.cols(); ++c) {
    cplx s = 0.0;
    for (Index t = 0; t < n; ++t) s += std::conj(y_(t)) * m(idx[t], c);
    s *= tau_;
    if (s == cplx(0.0)) continue;
    for (Index t = 0; t < n; ++t) m(idx[t], c) -= s * y_(t);
  }
}

void HouseholderReflector::apply_right(CMatrix& m, std::span<const Index> idx) const {
  const Index n = static_cast<Index>(idx.size());
  for (Index r = 0; r < m.rows(); ++r) {
    cplx s = 0.0;
    for (Index t = 0; t < n; ++t) s += m(r, idx[t]) * y_(t);
    s *= tau_;
    if (s == cplx(0.0)) continue;
    for (Index t = 0; t < n; ++t) m(r, idx[t]) -= s * std::conj(y_(t));
  }
}

CMatrix HouseholderReflector::dense() const {
  return CMatrix::Identity(size(), size()) - tau_ * y_ * y_.adjoint();
}

} // namespace sobolev::hiep
