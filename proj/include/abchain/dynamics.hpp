#pragma once

#include <vector>

#include "abchain/hamiltonian.hpp"
#include "abchain/sector_basis.hpp"
#include "abchain/types.hpp"

namespace abchain {

// Complex amplitudes over the concatenated sector basis.
struct QuantumState {
  BasisPtr basis;
  ComplexVector amplitudes;

  Complex amplitude(SiteMask mask) const { return amplitudes[basis->index_of(mask)]; }
  Real norm() const { return amplitudes.norm(); }
};

// All-amplitudes-zero state (not normalized; a building block).
QuantumState zero_state(BasisPtr basis);

// |0,0,...,0>.
QuantumState vacuum_state(BasisPtr basis);

// Eigenvalues (ascending) and orthonormal eigenvectors of each sector block.
struct SpectralDecomposition {
  BasisPtr basis;
  std::vector<Vector> eigenvalues;
  std::vector<Matrix> eigenvectors;  // columns
};

// Dense symmetric eigendecomposition of every block. Throws NumericalError if
// the solver fails to converge.
SpectralDecomposition decompose(const SectorHamiltonian& h);

// Norm-preserving evolution to time t (in 1/Delta): each sector picks up
// V exp(-i lambda t) V^T. t = 0 returns the state unchanged. Sectors whose
// amplitudes are exactly zero stay untouched.
QuantumState evolve(const SpectralDecomposition& sd, const QuantumState& psi, Real t);

// Probability that `site` is excited: sum of |amplitude|^2 over basis states
// with that site's bit set.
Real occupation_probability(const QuantumState& psi, int site);

// Expectation value <psi|H|psi> of the block Hamiltonian (real by symmetry).
Real energy_expectation(const SectorHamiltonian& h, const QuantumState& psi);

// Default upper bound on the occupation of the injection site, above which
// the coefficient-mapping model of the delayed second injection breaks down.
inline constexpr Real kInjectionOccupationThreshold = 1e-6;

// Simulates the delayed second injection at site C = N-1.
//
// For Protocol::bell_ends every one-excitation amplitude c_i (i != C) moves
// to the pair state {i, C}. For Protocol::cluster the local map
// |0>_C -> (|0>_C + |1>_C)/sqrt(2) is applied: amplitudes become
// (1/sqrt(2)) (psi + c_0 |1_C> + sum_i c_i |{i,C}>).
//
// Valid only while site C is essentially unoccupied; throws InjectionError if
// occupation_probability(psi, C) exceeds the threshold, and InvalidInputError
// for Protocol::bell_centre (single injection, nothing to delay).
QuantumState inject_at_c(const QuantumState& psi, Protocol protocol,
                         Real occupation_threshold = kInjectionOccupationThreshold);

// Runs the asynchronous-injection protocol: evolves the single-injection
// state (|+,0,...,0> for cluster, |1,0,...,0> for bell_ends) to the delay
// time t_D = delay_fraction * t_entangle, applies the second injection, then
// evolves for the remaining t_entangle - t_D. The returned state is the one
// retrieved at the unperturbed entangling time, measured from the first
// injection.
QuantumState delayed_protocol_state(const SpectralDecomposition& sd, Protocol protocol,
                                    Real delay_fraction, Real t_entangle,
                                    Real occupation_threshold = kInjectionOccupationThreshold,
                                    Real max_delay_fraction = 0.1);

}  // namespace abchain
