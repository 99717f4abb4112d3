#include "sobolev/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sobolev::spectrum {

namespace {

// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx l1 = d + half + disc;
  const cplx l2 = d + half - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

} // namespace

Spectrum hessenberg_eigenvalues(const CMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("eigenvalues: matrix must be square");
  const Index n = input.rows();
  CMatrix h = input;
  // Clear anything below the subdiagonal; the input is Hessenberg by contract.
  for (Index j = 0; j < n; ++j)
    for (Index i = j + 2; i < n; ++i) h(i, j) = 0.0;

  const double hnorm = h.norm();
  std::vector<cplx> eig(static_cast<std::size_t>(n));
  const Index max_its = 30 * std::max<Index>(n, 1);

  Index hi = n - 1;
  Index its = 0;
  while (hi >= 0) {
    // Deflation: look for a negligible subdiagonal entry from the bottom up.
    Index l = hi;
    for (; l > 0; --l) {
      double tst = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (tst == 0.0) tst = hnorm;
      if (std::abs(h(l, l - 1)) <= kEps * tst) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      eig[static_cast<std::size_t>(hi)] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (its >= max_its)
      throw NumericalFailure("eigenvalues: no convergence for eigenvalue " + std::to_string(hi),
                             static_cast<std::size_t>(its));

    cplx mu;
    if (its > 0 && its % 10 == 0) {
      // Exceptional shift to break cycles.
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1).real());
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    ++its;

    // Implicit single-shift QR sweep on the unreduced window [l, hi].
    cplx x = h(l, l) - mu;
    cplx y = h(l + 1, l);
    for (Index k = l; k < hi; ++k) {
      if (k > l) {
        x = h(k, k - 1);
        y = h(k + 1, k - 1);
      }
      const auto g = hiep::PlaneRotation::annihilating(x, y, 0, 1, 2);
      const cplx ca = std::conj(g.a()), cb = std::conj(g.b());
      const cplx a = g.a(), b = g.b();
      for (Index c = std::max(l, k - 1); c <= hi; ++c) {
        const cplx u = h(k, c), v = h(k + 1, c);
        h(k, c) = ca * u - cb * v;
        h(k + 1, c) = b * u + a * v;
      }
      const Index rmax = std::min(k + 2, hi);
      for (Index r = l; r <= rmax; ++r) {
        const cplx u = h(r, k), v = h(r, k + 1);
        h(r, k) = u * a - v * b;
        h(r, k + 1) = u * cb + v * ca;
      }
      if (k > l) h(k + 1, k - 1) = 0.0;
    }
  }

  std::sort(eig.begin(), eig.end(), [](cplx p, cplx q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  });
  return Spectrum{std::move(eig)};
}

cplx smallest_root(const hiep::HessenbergMatrix& h, Index k) {
  if (k < 1 || k > h.dim()) throw std::invalid_argument("smallest_root: k out of range");
  const Spectrum sp = hessenberg_eigenvalues(h.leading(k).matrix());
  return *std::min_element(sp.eigenvalues.begin(), sp.eigenvalues.end(), [](cplx p, cplx q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return std::abs(p.imag()) < std::abs(q.imag());
  });
}

} // namespace sobolev::spectrum
