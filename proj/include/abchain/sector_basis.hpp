#pragma once

#include <memory>
#include <vector>

#include "abchain/types.hpp"

namespace abchain {

// Basis of the excitation-number-conserving subspaces of an N-site chain,
// truncated at max_excitations (0, 1 or 2). States are enumerated in a fixed
// deterministic order: sector 0 is the all-down mask, sector 1 runs by site
// index, sector 2 by (lower site, higher site) lexicographic pairs. Amplitude
// vectors over the basis concatenate the sectors in that order.
class SectorBasis {
 public:
  SectorBasis(int n_sites, int max_excitations);

  int n_sites() const { return n_sites_; }
  int max_excitations() const { return max_excitations_; }
  int n_sectors() const { return max_excitations_ + 1; }

  Index dimension() const { return static_cast<Index>(states_.size()); }
  Index sector_size(int k) const;
  Index sector_offset(int k) const;

  // All masks of sector k, in enumeration order.
  const std::vector<SiteMask>& sector_states(int k) const;

  // Mask at a flat position in the concatenated amplitude vector.
  SiteMask mask_at(Index flat) const { return states_.at(static_cast<std::size_t>(flat)); }

  // Flat position of a mask; inverse of the enumeration. Throws
  // InvalidInputError if the mask is out of range or its excitation count
  // exceeds max_excitations.
  Index index_of(SiteMask mask) const;

  int sector_of(SiteMask mask) const;

 private:
  int n_sites_;
  int max_excitations_;
  std::vector<SiteMask> states_;             // concatenated sectors
  std::vector<std::vector<SiteMask>> sectors_;
  std::vector<Index> offsets_;
};

using BasisPtr = std::shared_ptr<const SectorBasis>;

// Enumerates the sector basis for an n_sites chain. n_sites must be >= 2 and
// max_excitations in {0,1,2}.
BasisPtr build_basis(int n_sites, int max_excitations);

}  // namespace abchain
