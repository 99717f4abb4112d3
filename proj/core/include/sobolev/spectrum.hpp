#pragma once

#include <vector>

#include "sobolev/hiep.hpp"

namespace sobolev::spectrum {

/// Eigenvalues sorted by ascending real part, ties by ascending imaginary part.
struct Spectrum {
  std::vector<cplx> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
};

/// All eigenvalues of a square upper Hessenberg matrix by single-shift complex
/// QR with Wilkinson shifts. Throws NumericalFailure if an eigenvalue needs more
/// than 30 * dim iterations.
Spectrum hessenberg_eigenvalues(const CMatrix& h);
inline Spectrum hessenberg_eigenvalues(const hiep::HessenbergMatrix& h) {
  return hessenberg_eigenvalues(h.matrix());
}

/// Eigenvalue of the leading k x k submatrix with the smallest real part
/// (ties: smallest |imag|). These are the roots of p_k.
cplx smallest_root(const hiep::HessenbergMatrix& h, Index k);

} // namespace sobolev::spectrum
