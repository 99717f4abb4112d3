#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sobolev {

using cplx = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when an iterative numerical kernel fails to meet its own contract
/// (no convergence, lost orthogonality, residual above the acceptance level).
class NumericalFailure : public std::runtime_error {
public:
  NumericalFailure(const std::string& what, std::size_t iterations = 0)
      : std::runtime_error(what), iterations_(iterations) {}

  std::size_t iterations() const noexcept { return iterations_; }

private:
  std::size_t iterations_;
};

inline constexpr double kEps = 2.220446049250313e-16;

} // namespace sobolev
