#include "abchain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abchain/errors.hpp"

namespace abchain {

namespace {

// sigma_y tensor sigma_y in the |00>,|01>,|10>,|11> basis.
Matrix4c spin_flip_matrix() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

// Clamp the small negative eigenvalues a partial trace produces by round-off;
// reject anything genuinely negative.
Real clamped_nonnegative(Real value, const char* what) {
  if (value < -1e-8) {
    throw InvalidStateError(std::string(what) + " has negative eigenvalue " +
                            std::to_string(value));
  }
  return std::max(value, 0.0);
}

}  // namespace

TwoQubitDensity reduce_to_ac(const QuantumState& psi) {
  const SectorBasis& basis = *psi.basis;
  const int site_c = basis.n_sites() - 1;
  const SiteMask bit_a = SiteMask{1};
  const SiteMask bit_c = SiteMask{1} << site_c;
  const SiteMask interior = ~(bit_a | bit_c);

  const Index dim = basis.dimension();
  TwoQubitDensity rho = TwoQubitDensity::Zero();
  for (Index m = 0; m < dim; ++m) {
    const SiteMask mask_m = basis.mask_at(m);
    const int row = ((mask_m & bit_a) ? 2 : 0) + ((mask_m & bit_c) ? 1 : 0);
    const SiteMask rest_m = mask_m & interior;
    for (Index n = 0; n < dim; ++n) {
      const SiteMask mask_n = basis.mask_at(n);
      if ((mask_n & interior) != rest_m) continue;
      const int col = ((mask_n & bit_a) ? 2 : 0) + ((mask_n & bit_c) ? 1 : 0);
      rho(row, col) += psi.amplitudes[m] * std::conj(psi.amplitudes[n]);
    }
  }
  return rho;
}

Real concurrence(const TwoQubitDensity& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> rho_solver(rho);
  if (rho_solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on the reduced density matrix");
  }
  Eigen::Vector4d rho_eigs = rho_solver.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    rho_eigs[i] = clamped_nonnegative(rho_eigs[i], "density matrix");
  }
  const Matrix4c sqrt_rho = rho_solver.eigenvectors() *
                            rho_eigs.cwiseSqrt().asDiagonal() *
                            rho_solver.eigenvectors().adjoint();

  const Matrix4c y = spin_flip_matrix();
  const Matrix4c rho_tilde = y * rho.conjugate() * y;
  const Matrix4c m = sqrt_rho * rho_tilde * sqrt_rho;

  Eigen::SelfAdjointEigenSolver<Matrix4c> m_solver(m);
  if (m_solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on the spin-flipped product");
  }
  Eigen::Vector4d lambdas;
  for (int i = 0; i < 4; ++i) {
    lambdas[i] = std::sqrt(clamped_nonnegative(m_solver.eigenvalues()[i], "spin-flipped product"));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<Real>());
  const Real c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::clamp(c, 0.0, 1.0);
}

Real binary_entropy(Real x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

Real eof_from_concurrence(Real c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

Real eof(const TwoQubitDensity& rho) { return eof_from_concurrence(concurrence(rho)); }

Real state_fidelity(const TwoQubitDensity& rho, const Vector4c& target) {
  return (target.adjoint() * rho * target).value().real();
}

}  // namespace abchain
