#pragma once

#include <cstdint>
#include <string>

#include "abchain/types.hpp"

namespace abchain {

// Dimerised chain with weak (delta) and strong (big_delta) bonds laid out so
// that the two end sites and the centre site touch only weak bonds. Energy
// units fix big_delta = 1 by convention (time is then measured in 1/Delta);
// the struct itself carries whatever couplings it was built with.
struct ChainSpec {
  int n_sites = 0;
  Real delta = 0.0;      // weak coupling
  Real big_delta = 0.0;  // strong coupling
  Vector bond_couplings; // n_sites - 1 entries

  int site_a() const { return 0; }
  int site_b() const { return (n_sites - 1) / 2; }
  int site_c() const { return n_sites - 1; }
  Real ratio() const { return delta / big_delta; }
};

// Builds the mirror-symmetric weak/strong bond pattern for n_sites = 7 + 4m.
// Counting bonds from the left, each half alternates weak, strong, ... and
// ends weak at the centre, so sites 0, (N-1)/2 and N-1 touch only weak bonds.
// Throws InvalidInputError for non-conforming n_sites or delta >= big_delta.
ChainSpec build_chain(int n_sites, Real delta, Real big_delta);

// Convenience: ABC chain with big_delta = 1 and delta = ratio.
ChainSpec chain_for_ratio(int n_sites, Real ratio);

enum class DisorderKind { none, diagonal, off_diagonal };

DisorderKind parse_disorder_kind(const std::string& name);
std::string to_string(DisorderKind kind);

// One static disorder draw. Each nonzero entry equals strength * r * delta
// with r uniform in [-1/2, 1/2). Diagonal disorder perturbs on-site energies
// only, off-diagonal disorder perturbs bond couplings only.
struct DisorderRealization {
  DisorderKind kind = DisorderKind::none;
  Real strength = 0.0;  // dimensionless E
  std::uint64_t seed = 0;
  Vector onsite_energies;     // n_sites entries
  Vector bond_perturbations;  // n_sites - 1 entries
};

// All-zero realization with the right dimensions.
DisorderRealization no_disorder(const ChainSpec& chain);

// Deterministic function of (chain, kind, strength, seed). Draw order is
// fixed: diagonal fills onsite_energies site 0..N-1, off-diagonal fills
// bond_perturbations bond 0..N-2. strength = 0 yields the zero realization.
DisorderRealization sample_disorder(const ChainSpec& chain, DisorderKind kind,
                                    Real strength, std::uint64_t seed);

}  // namespace abchain
