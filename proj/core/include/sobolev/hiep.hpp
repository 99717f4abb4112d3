#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "sobolev/jordan.hpp"

namespace sobolev::hiep {

/// Dense upper Hessenberg matrix with real non-negative subdiagonal.
class HessenbergMatrix {
public:
  HessenbergMatrix() = default;
  explicit HessenbergMatrix(CMatrix m) : m_(std::move(m)) {}

  const CMatrix& matrix() const { return m_; }
  Index dim() const { return m_.rows(); }
  cplx operator()(Index i, Index j) const { return m_(i, j); }

  /// Leading k x k principal submatrix (the recurrence matrix of p_0..p_{k-1}).
  HessenbergMatrix leading(Index k) const;
  /// Frobenius norm of the entries strictly below the first subdiagonal.
  double below_band_norm() const;

private:
  CMatrix m_;
};

/// 2x2 unitary acting on coordinates (i, j):
///   [ conj(a)  -conj(b) ]
///   [   b         a     ]    with |a|^2 + |b|^2 = 1.
class PlaneRotation {
public:
  /// Throws std::invalid_argument unless |a|^2 + |b|^2 = 1 within 1e-14.
  static PlaneRotation from_parameters(cplx a, cplx b, Index i, Index j, Index dim);
  /// Rotation mapping (x, y) at (i, j) to (sqrt(|x|^2 + |y|^2), 0).
  static PlaneRotation annihilating(cplx x, cplx y, Index i, Index j, Index dim);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  Index i() const { return i_; }
  Index j() const { return j_; }

  /// m <- P m
  void apply_left(CMatrix& m) const;
  void apply_left(CVector& v) const;
  /// m <- m P^H
  void apply_right_adjoint(CMatrix& m) const;
  CMatrix dense() const;

private:
  PlaneRotation(cplx a, cplx b, Index i, Index j, Index dim) : a_(a), b_(b), i_(i), j_(j), dim_(dim) {}
  cplx a_, b_;
  Index i_, j_, dim_;
};

/// R = I - 2 y y^H / (y^H y) with y = c + alpha e_1, alpha = ||c|| e^{i arg c_1};
/// R c = -alpha e_1. R is Hermitian and unitary.
class HouseholderReflector {
public:
  /// Throws std::invalid_argument for a zero vector.
  static HouseholderReflector from(const CVector& c);

  cplx alpha() const { return alpha_; }
  const CVector& y() const { return y_; }
  Index size() const { return y_.size(); }

  CVector apply(const CVector& v) const;
  /// Rows `idx` of m are replaced by R applied to them.
  void apply_left(CMatrix& m, std::span<const Index> idx) const;
  /// Columns `idx` of m are replaced by (m[:, idx]) R.
  void apply_right(CMatrix& m, std::span<const Index> idx) const;
  CMatrix dense() const;

private:
  CVector y_;
  double tau_ = 0.0;
  cplx alpha_;
};

/// Per-step diagnostics for the `--trace` option.
struct TraceEvent {
  std::string_view solver; // "arnoldi", "update-hh", "update-rot"
  std::string_view stage;  // "step", "merge", "column", "restored"
  Index block = -1;
  Index column = -1;
  Index dim = 0;
  double value = 0.0; // subdiagonal norm or residual, depending on stage
};
using TraceSink = std::function<void(const TraceEvent&)>;

struct ArnoldiOptions {
  /// Breakdown declared when h_{l+1,l} <= breakdown_tol * ||Z||_F.
  double breakdown_tol = 1e-13;
  /// Orthogonality of q_{l+1} against Q_l checked after reorthogonalization.
  double orthogonality_tol = 1e-8;
  TraceSink trace;
};

struct ArnoldiResult {
  CMatrix q;                     ///< m x k, orthonormal columns
  HessenbergMatrix h;            ///< k x k
  double h_next = 0.0;           ///< h_{k+1,k}
  std::optional<CVector> q_next; ///< absent on breakdown
  bool breakdown = false;

  Index steps() const { return q.cols(); }
};

/// Arnoldi iteration on (Z, w) with modified Gram-Schmidt and one
/// reorthogonalization sweep. On breakdown the result is truncated at the
/// breakdown step. Throws std::invalid_argument if k > m.
ArnoldiResult arnoldi(const SpectralData& data, Index k, const ArnoldiOptions& opts = {});

enum class UpdateStrategy { householder, rotations };

struct UpdateOptions {
  /// Numerical failure if stray entries below the subdiagonal exceed this times ||Z||_F.
  double residual_tol = 1e-10;
  bool accumulate_q = true;
  TraceSink trace;
};

/// Full m x m solution of the Hessenberg inverse eigenvalue problem:
/// Q^H Z Q = H, Q e_1 = w / ||w||.
struct HiepSolution {
  HessenbergMatrix h;
  CMatrix q; ///< empty when accumulate_q was false
};

/// Updating procedure: adds one Jordan block at a time, introduces the new
/// weight with a plane rotation and restores Hessenberg form column by column.
HiepSolution update_solve(const SpectralData& data, UpdateStrategy strategy, const UpdateOptions& opts = {});

/// Solution of the single-block problem (Z = J, w = beta e_last).
HiepSolution single_block_solution(const JordanBlock& block, cplx beta);

enum class SolverKind { arnoldi, update_householder, update_rotations };

std::string_view to_string(SolverKind kind);
/// Accepts "arnoldi", "update-hh", "update-rot" (and "update" as update-rot).
SolverKind solver_from_string(std::string_view name);

/// Full m x m solve with the requested method.
HiepSolution solve(const SpectralData& data, SolverKind kind, const TraceSink& trace = {});

/// Residuals of the solver contract.
struct SolutionResiduals {
  double orthogonality;   ///< ||Q^H Q - I||_F
  double similarity;      ///< ||Q^H Z Q - H||_F
  double first_column;    ///< ||Q e_1 - w/||w|| ||_2
  double min_subdiagonal; ///< smallest real part of the subdiagonal
  double max_subdiag_imag;
  double below_band;
};
SolutionResiduals residuals(const SpectralData& data, const HiepSolution& sol);

} // namespace sobolev::hiep
