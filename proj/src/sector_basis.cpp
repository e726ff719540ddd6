#include "abchain/sector_basis.hpp"

#include <bit>
#include <string>

#include "abchain/errors.hpp"

namespace abchain {

SectorBasis::SectorBasis(int n_sites, int max_excitations)
    : n_sites_(n_sites), max_excitations_(max_excitations) {
  if (n_sites < 2) {
    throw InvalidInputError("invalid chain: n_sites must be >= 2, got " +
                            std::to_string(n_sites));
  }
  if (max_excitations < 0 || max_excitations > 2) {
    throw InvalidInputError("max_excitations must be 0, 1 or 2, got " +
                            std::to_string(max_excitations));
  }
  if (n_sites > 31) {
    throw InvalidInputError("n_sites exceeds the 32-bit mask width");
  }

  sectors_.resize(static_cast<std::size_t>(max_excitations) + 1);
  sectors_[0] = {SiteMask{0}};
  if (max_excitations >= 1) {
    auto& one = sectors_[1];
    one.reserve(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i) one.push_back(SiteMask{1} << i);
  }
  if (max_excitations >= 2) {
    auto& two = sectors_[2];
    two.reserve(static_cast<std::size_t>(n_sites) * (n_sites - 1) / 2);
    for (int a = 0; a < n_sites; ++a) {
      for (int b = a + 1; b < n_sites; ++b) {
        two.push_back((SiteMask{1} << a) | (SiteMask{1} << b));
      }
    }
  }

  offsets_.resize(sectors_.size());
  Index offset = 0;
  for (std::size_t k = 0; k < sectors_.size(); ++k) {
    offsets_[k] = offset;
    offset += static_cast<Index>(sectors_[k].size());
  }
  states_.reserve(static_cast<std::size_t>(offset));
  for (const auto& sector : sectors_) {
    states_.insert(states_.end(), sector.begin(), sector.end());
  }
}

Index SectorBasis::sector_size(int k) const {
  return static_cast<Index>(sectors_.at(static_cast<std::size_t>(k)).size());
}

Index SectorBasis::sector_offset(int k) const {
  return offsets_.at(static_cast<std::size_t>(k));
}

const std::vector<SiteMask>& SectorBasis::sector_states(int k) const {
  return sectors_.at(static_cast<std::size_t>(k));
}

int SectorBasis::sector_of(SiteMask mask) const {
  return std::popcount(mask);
}

Index SectorBasis::index_of(SiteMask mask) const {
  if (n_sites_ < 32 && (mask >> n_sites_) != 0) {
    throw InvalidInputError("mask addresses sites beyond the chain");
  }
  const int k = std::popcount(mask);
  if (k > max_excitations_) {
    throw InvalidInputError("sector overflow: mask has " + std::to_string(k) +
                            " excitations, basis holds at most " +
                            std::to_string(max_excitations_));
  }
  switch (k) {
    case 0:
      return offsets_[0];
    case 1:
      return offsets_[1] + std::countr_zero(mask);
    default: {
      const int a = std::countr_zero(mask);
      const int b = 31 - std::countl_zero(mask);
      // Lexicographic rank of the pair (a, b) with a < b.
      const Index rank = static_cast<Index>(a) * n_sites_ -
                         static_cast<Index>(a) * (a + 1) / 2 + (b - a - 1);
      return offsets_[2] + rank;
    }
  }
}

BasisPtr build_basis(int n_sites, int max_excitations) {
  return std::make_shared<const SectorBasis>(n_sites, max_excitations);
}

}  // namespace abchain
