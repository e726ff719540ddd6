#pragma once

#include "abchain/dynamics.hpp"
#include "abchain/types.hpp"

namespace abchain {

// Two-qubit density matrix of the end sites A = 0 and C = N-1, basis order
// |0_A 0_C>, |0_A 1_C>, |1_A 0_C>, |1_A 1_C>.
using TwoQubitDensity = Matrix4c;

// Traces out the N-2 interior sites:
// rho[(a,c),(a',c')] = sum_rest psi(a,c,rest) conj(psi(a',c',rest)),
// the sum running over interior occupation patterns present in the truncated
// sector space.
TwoQubitDensity reduce_to_ac(const QuantumState& psi);

// Wootters concurrence, C = max(0, l1 - l2 - l3 - l4) with l_i the square
// roots, in decreasing order, of the eigenvalues of
// rho (sy x sy) conj(rho) (sy x sy). Computed through the equivalent
// Hermitian form sqrt(rho) (sy x sy) conj(rho) (sy x sy) sqrt(rho), whose
// spectrum is real and non-negative. Eigenvalues in [-1e-10, 0) are clamped
// to zero; anything below -1e-8 is rejected as non-physical
// (InvalidStateError).
Real concurrence(const TwoQubitDensity& rho);

// Entanglement of formation, h((1 + sqrt(1 - C^2))/2) with h the binary
// entropy; 0 for separable states, 1 for maximally entangled ones.
Real eof(const TwoQubitDensity& rho);
Real eof_from_concurrence(Real c);

// h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
Real binary_entropy(Real x);

// <target|rho|target> for a normalized pure target state; insensitive to the
// target's global phase.
Real state_fidelity(const TwoQubitDensity& rho, const Vector4c& target);

}  // namespace abchain
