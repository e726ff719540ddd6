#pragma once

#include <vector>

#include "abchain/chain.hpp"
#include "abchain/sector_basis.hpp"
#include "abchain/types.hpp"

namespace abchain {

// Real symmetric Hamiltonian blocks, one per excitation sector, in the basis
// enumeration order of `basis`.
struct SectorHamiltonian {
  BasisPtr basis;
  std::vector<Matrix> blocks;
};

// Assembles the XY hopping Hamiltonian with on-site terms over the truncated
// sector space: diagonal entries carry the summed on-site energies of the
// occupied sites, off-diagonal entries carry the effective bond coupling that
// hops one excitation between neighbouring sites. Throws InvalidInputError on
// dimension mismatches between chain, disorder and basis.
SectorHamiltonian build_hamiltonian(const ChainSpec& chain,
                                    const DisorderRealization& disorder,
                                    BasisPtr basis);

// Clean-chain convenience overload.
SectorHamiltonian build_hamiltonian(const ChainSpec& chain, BasisPtr basis);

}  // namespace abchain
