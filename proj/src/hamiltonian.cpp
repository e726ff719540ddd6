#include "abchain/hamiltonian.hpp"

#include <bit>
#include <utility>

#include "abchain/errors.hpp"

namespace abchain {

SectorHamiltonian build_hamiltonian(const ChainSpec& chain,
                                    const DisorderRealization& disorder,
                                    BasisPtr basis) {
  if (!basis || basis->n_sites() != chain.n_sites) {
    throw InvalidInputError("basis was built for a different chain length");
  }
  if (disorder.onsite_energies.size() != chain.n_sites ||
      disorder.bond_perturbations.size() != chain.n_sites - 1) {
    throw InvalidInputError("disorder dimensions do not match the chain");
  }

  const int n = chain.n_sites;
  const Vector& eps = disorder.onsite_energies;
  Vector j_eff = chain.bond_couplings + disorder.bond_perturbations;

  SectorHamiltonian h;
  h.basis = basis;
  h.blocks.resize(static_cast<std::size_t>(basis->n_sectors()));

  // Sector 0: the vacuum carries no on-site energy.
  h.blocks[0] = Matrix::Zero(1, 1);

  if (basis->max_excitations() >= 1) {
    // Sector 1 is tridiagonal: hopping on the bonds, on-site energies on the
    // diagonal.
    Matrix& h1 = h.blocks[1];
    h1 = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) h1(i, i) = eps[i];
    for (int i = 0; i < n - 1; ++i) {
      h1(i, i + 1) = j_eff[i];
      h1(i + 1, i) = j_eff[i];
    }
  }

  if (basis->max_excitations() >= 2) {
    // Sector 2: pair states {a,b}. Diagonal adds the two on-site energies;
    // a bond (i,i+1) with exactly one endpoint occupied hops the excitation,
    // connecting {a,b} to the pair with that endpoint toggled.
    const auto& pairs = basis->sector_states(2);
    const Index dim2 = basis->sector_size(2);
    Matrix& h2 = h.blocks[2];
    h2 = Matrix::Zero(dim2, dim2);
    const Index off2 = basis->sector_offset(2);
    for (Index p = 0; p < dim2; ++p) {
      const SiteMask mask = pairs[static_cast<std::size_t>(p)];
      const int a = std::countr_zero(mask);
      const int b = 31 - std::countl_zero(mask);
      h2(p, p) = eps[a] + eps[b];
      for (int i = 0; i < n - 1; ++i) {
        const bool lo = (mask >> i) & 1u;
        const bool hi = (mask >> (i + 1)) & 1u;
        if (lo == hi) continue;
        const SiteMask hopped = mask ^ ((SiteMask{1} << i) | (SiteMask{1} << (i + 1)));
        const Index q = basis->index_of(hopped) - off2;
        h2(p, q) = j_eff[i];
      }
    }
  }

  return h;
}

SectorHamiltonian build_hamiltonian(const ChainSpec& chain, BasisPtr basis) {
  return build_hamiltonian(chain, no_disorder(chain), std::move(basis));
}

}  // namespace abchain
