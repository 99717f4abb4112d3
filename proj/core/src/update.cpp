#include "sobolev/hiep.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace sobolev::hiep {

namespace {

// Unitary diagonal similarity fixing Q e_1 and making every subdiagonal entry
// real non-negative: D_0 = phase0, D_i = D_{i-1} * h_{i,i-1} / |h_{i,i-1}|.
void normalize_subdiagonal(CMatrix& h, CMatrix* q, cplx phase0) {
  const Index d = h.rows();
  std::vector<cplx> phase(static_cast<std::size_t>(d));
  phase[0] = phase0;
  for (Index i = 1; i < d; ++i) {
    const cplx s = h(i, i - 1);
    const double a = std::abs(s);
    phase[static_cast<std::size_t>(i)] = phase[static_cast<std::size_t>(i - 1)] * (a > 0.0 ? s / a : cplx(1.0));
  }
  for (Index c = 0; c < d; ++c) {
    const cplx pc = phase[static_cast<std::size_t>(c)];
    for (Index r = 0; r < d; ++r) h(r, c) *= std::conj(phase[static_cast<std::size_t>(r)]) * pc;
    if (q) q->col(c) *= pc;
  }
  for (Index i = 1; i < d; ++i) h(i, i - 1) = cplx(h(i, i - 1).real(), 0.0);
}

const char* solver_name(UpdateStrategy s) {
  return s == UpdateStrategy::householder ? "update-hh" : "update-rot";
}

} // namespace

HiepSolution single_block_solution(const JordanBlock& block, cplx beta) {
  if (beta == cplx(0.0)) throw std::invalid_argument("update: zero weight");
  const Index s = block.size();
  // With the flip matrix F, F^H J F is J reflected through the anti-diagonal:
  // lower bidiagonal, and F e_1 = e_last.
  CMatrix h = block.dense().reverse();
  CMatrix q = CMatrix::Zero(s, s);
  for (Index i = 0; i < s; ++i) q(s - 1 - i, i) = 1.0;
  normalize_subdiagonal(h, &q, beta / std::abs(beta));
  return {HessenbergMatrix(std::move(h)), std::move(q)};
}

HiepSolution update_solve(const SpectralData& data, UpdateStrategy strategy, const UpdateOptions& opts) {
  data.validate();
  const auto& blocks = data.z.blocks();
  const auto& betas = data.w.betas();
  const double znorm = data.z.frobenius_norm();
  const bool with_q = opts.accumulate_q;
  const char* name = solver_name(strategy);

  HiepSolution first = single_block_solution(blocks[0], betas[0]);
  CMatrix h = std::move(first.h).matrix();
  CMatrix q = with_q ? std::move(first.q) : CMatrix();
  double wnorm2 = std::norm(betas[0]);

  std::vector<Index> rows;
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const Index dhat = h.rows();
    const Index s = blocks[b].size();
    const Index d = dhat + s;

    // 1. Embed the current solution and the new single-block solution.
    HiepSolution single = single_block_solution(blocks[b], betas[b]);
    CMatrix hn = CMatrix::Zero(d, d);
    hn.topLeftCorner(dhat, dhat) = h;
    hn.bottomRightCorner(s, s) = single.h.matrix();
    CMatrix qn;
    if (with_q) {
      qn = CMatrix::Zero(d, d);
      qn.topLeftCorner(dhat, dhat) = q;
      qn.bottomRightCorner(s, s) = single.q;
    }

    // 2. Rotate basis columns 0 and dhat so the first column becomes w/||w||:
    //    Q P^H e_1 = a Q e_1 - b Q e_{dhat}.
    const double beta_abs = std::abs(betas[b]);
    const double what = std::sqrt(wnorm2);
    wnorm2 += beta_abs * beta_abs;
    const double wn = std::sqrt(wnorm2);
    const auto p = PlaneRotation::from_parameters(what / wn, -beta_abs / wn, 0, dhat, d);
    p.apply_left(hn);
    p.apply_right_adjoint(hn);
    if (with_q) p.apply_right_adjoint(qn);
    if (opts.trace) opts.trace({name, "merge", static_cast<Index>(b), -1, d, wn});

    // 3. Restore Hessenberg form column by column with transforms of the form 1 ⊕ Q̆.
    //    Column i can only violate the structure in rows of the new block, and
    //    the bulge there grows by one row per column until it spans the block.
    for (Index i = 0; i + 2 < d; ++i) {
      const Index r = std::min(s, i + 2);
      rows.clear();
      rows.push_back(i + 1);
      const Index lo = std::max(i + 2, dhat);
      const Index hi = (i + 1 >= dhat) ? d : std::min(d, dhat + r);
      for (Index row = lo; row < hi; ++row) rows.push_back(row);
      if (rows.size() < 2) continue;

      CVector c(static_cast<Index>(rows.size()));
      for (Index t = 0; t < c.size(); ++t) c(t) = hn(rows[static_cast<std::size_t>(t)], i);
      double tail = 0.0;
      for (Index t = 1; t < c.size(); ++t) tail += std::norm(c(t));
      if (opts.trace) opts.trace({name, "column", static_cast<Index>(b), i, d, std::sqrt(tail)});
      if (tail == 0.0) continue;

      if (strategy == UpdateStrategy::householder) {
        const auto refl = HouseholderReflector::from(c);
        refl.apply_left(hn, rows);
        refl.apply_right(hn, rows);
        if (with_q) refl.apply_right(qn, rows);
        hn(rows[0], i) = -refl.alpha();
      } else {
        for (std::size_t t = rows.size() - 1; t >= 1; --t) {
          const Index ri = rows[t - 1], rj = rows[t];
          const auto g = PlaneRotation::annihilating(hn(ri, i), hn(rj, i), ri, rj, d);
          g.apply_left(hn);
          g.apply_right_adjoint(hn);
          if (with_q) g.apply_right_adjoint(qn);
        }
      }
      for (std::size_t t = 1; t < rows.size(); ++t) hn(rows[t], i) = 0.0;
    }

    // Anything left below the subdiagonal was assumed structurally zero.
    const double stray = HessenbergMatrix(hn).below_band_norm();
    if (opts.trace) opts.trace({name, "restored", static_cast<Index>(b), -1, d, stray});
    if (stray > opts.residual_tol * znorm)
      throw NumericalFailure("update: Hessenberg residual " + std::to_string(stray) + " after block " +
                             std::to_string(b));
    for (Index j = 0; j < d; ++j)
      for (Index i = j + 2; i < d; ++i) hn(i, j) = 0.0;

    // 4. Real non-negative subdiagonal; D_0 = 1 keeps the first basis column.
    normalize_subdiagonal(hn, with_q ? &qn : nullptr, 1.0);
    h = std::move(hn);
    if (with_q) q = std::move(qn);
  }
  return {HessenbergMatrix(std::move(h)), std::move(q)};
}

} // namespace sobolev::hiep
