#include "sobolev/hiep.hpp"

#include <cmath>
#include <string>

namespace sobolev::hiep {

ArnoldiResult arnoldi(const SpectralData& data, Index k, const ArnoldiOptions& opts) {
  data.validate();
  const JordanOperator& z = data.z;
  const Index m = z.dim();
  if (k < 1 || k > m)
    throw std::invalid_argument("arnoldi: k = " + std::to_string(k) + " outside [1, " + std::to_string(m) + "]");

  const double tol = opts.breakdown_tol * z.frobenius_norm();
  CMatrix q(m, k);
  CMatrix h = CMatrix::Zero(k, k);
  const CVector w = data.w.dense(z);
  q.col(0) = w / w.norm();

  ArnoldiResult res;
  for (Index l = 0; l < k; ++l) {
    CVector v = z.apply(q.col(l));
    // Modified Gram-Schmidt, then one full reorthogonalization sweep.
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j <= l; ++j) {
        const cplx hj = q.col(j).dot(v);
        h(j, l) += hj;
        v -= hj * q.col(j);
      }
    }
    const double hnext = v.norm();
    if (opts.trace) opts.trace({"arnoldi", "step", -1, l, m, hnext});

    if (hnext <= tol) {
      res.q = q.leftCols(l + 1);
      res.h = HessenbergMatrix(h.topLeftCorner(l + 1, l + 1));
      res.h_next = hnext;
      res.breakdown = true;
      return res;
    }
    v /= hnext;
    const double loss = (q.leftCols(l + 1).adjoint() * v).cwiseAbs().maxCoeff();
    if (loss > opts.orthogonality_tol)
      throw NumericalFailure("arnoldi: loss of orthogonality " + std::to_string(loss) + " at step " +
                                 std::to_string(l + 1),
                             static_cast<std::size_t>(l + 1));
    if (l + 1 < k) {
      h(l + 1, l) = hnext;
      q.col(l + 1) = v;
    } else {
      res.h_next = hnext;
      res.q_next = std::move(v);
    }
  }
  res.q = std::move(q);
  res.h = HessenbergMatrix(std::move(h));
  return res;
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::arnoldi: return "arnoldi";
    case SolverKind::update_householder: return "update-hh";
    case SolverKind::update_rotations: return "update-rot";
  }
  return "unknown";
}

SolverKind solver_from_string(std::string_view name) {
  if (name == "arnoldi") return SolverKind::arnoldi;
  if (name == "update-hh") return SolverKind::update_householder;
  if (name == "update-rot" || name == "update") return SolverKind::update_rotations;
  throw std::invalid_argument("unknown solver '" + std::string(name) + "'");
}

HiepSolution solve(const SpectralData& data, SolverKind kind, const TraceSink& trace) {
  switch (kind) {
    case SolverKind::arnoldi: {
      ArnoldiOptions opts;
      opts.trace = trace;
      const Index m = data.z.dim();
      ArnoldiResult r = arnoldi(data, m, opts);
      if (r.steps() < m)
        throw NumericalFailure("arnoldi: premature breakdown at step " + std::to_string(r.steps()) +
                                   " of " + std::to_string(m),
                               static_cast<std::size_t>(r.steps()));
      return {std::move(r.h), std::move(r.q)};
    }
    case SolverKind::update_householder:
    case SolverKind::update_rotations: {
      UpdateOptions opts;
      opts.trace = trace;
      return update_solve(data,
                          kind == SolverKind::update_householder ? UpdateStrategy::householder
                                                                 : UpdateStrategy::rotations,
                          opts);
    }
  }
  throw std::invalid_argument("solve: unknown solver");
}

SolutionResiduals residuals(const SpectralData& data, const HiepSolution& sol) {
  const CMatrix& q = sol.q;
  const CMatrix& h = sol.h.matrix();
  const Index m = h.rows();
  SolutionResiduals r{};
  r.orthogonality = (q.adjoint() * q - CMatrix::Identity(m, m)).norm();
  r.similarity = (q.adjoint() * data.z.dense() * q - h).norm();
  const CVector w = data.w.dense(data.z);
  r.first_column = (q.col(0) - w / w.norm()).norm();
  r.min_subdiagonal = m > 1 ? h(1, 0).real() : 0.0;
  r.max_subdiag_imag = 0.0;
  for (Index i = 1; i < m; ++i) {
    r.min_subdiagonal = std::min(r.min_subdiagonal, h(i, i - 1).real());
    r.max_subdiag_imag = std::max(r.max_subdiag_imag, std::abs(h(i, i - 1).imag()));
  }
  r.below_band = sol.h.below_band_norm();
  return r;
}

} // namespace sobolev::hiep
