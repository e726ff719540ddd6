#include "abchain/chain.hpp"

#include <random>

#include "abchain/errors.hpp"
#include "abchain/rng.hpp"

namespace abchain {

ChainSpec build_chain(int n_sites, Real delta, Real big_delta) {
  if (n_sites < 7 || (n_sites - 7) % 4 != 0) {
    throw InvalidInputError("invalid geometry: n_sites must be 7 + 4m, got " +
                            std::to_string(n_sites));
  }
  if (!(delta > 0.0) || !(delta < big_delta)) {
    throw InvalidInputError("invalid couplings: need 0 < delta < big_delta");
  }

  ChainSpec chain;
  chain.n_sites = n_sites;
  chain.delta = delta;
  chain.big_delta = big_delta;
  chain.bond_couplings.resize(n_sites - 1);
  const int half = (n_sites - 1) / 2;  // bonds per half; odd, so the half ends weak
  for (int i = 0; i < half; ++i) {
    const Real j = (i % 2 == 0) ? delta : big_delta;
    chain.bond_couplings[i] = j;
    chain.bond_couplings[n_sites - 2 - i] = j;
  }
  return chain;
}

ChainSpec chain_for_ratio(int n_sites, Real ratio) {
  return build_chain(n_sites, ratio, 1.0);
}

DisorderKind parse_disorder_kind(const std::string& name) {
  if (name == "none") return DisorderKind::none;
  if (name == "diagonal") return DisorderKind::diagonal;
  if (name == "off-diagonal" || name == "off_diagonal") return DisorderKind::off_diagonal;
  throw InvalidInputError("unknown disorder kind: " + name);
}

std::string to_string(DisorderKind kind) {
  switch (kind) {
    case DisorderKind::none: return "none";
    case DisorderKind::diagonal: return "diagonal";
    case DisorderKind::off_diagonal: return "off-diagonal";
  }
  return "?";
}

DisorderRealization no_disorder(const ChainSpec& chain) {
  DisorderRealization r;
  r.kind = DisorderKind::none;
  r.onsite_energies = Vector::Zero(chain.n_sites);
  r.bond_perturbations = Vector::Zero(chain.n_sites - 1);
  return r;
}

DisorderRealization sample_disorder(const ChainSpec& chain, DisorderKind kind,
                                    Real strength, std::uint64_t seed) {
  if (!(strength >= 0.0)) {
    throw InvalidInputError("disorder strength must be >= 0");
  }
  DisorderRealization r = no_disorder(chain);
  r.kind = kind;
  r.strength = strength;
  r.seed = seed;
  if (kind == DisorderKind::none) return r;

  std::mt19937_64 gen(seed);
  const Real scale = strength * chain.delta;
  if (kind == DisorderKind::diagonal) {
    for (int i = 0; i < chain.n_sites; ++i) {
      r.onsite_energies[i] = scale * uniform_symmetric(gen);
    }
  } else {
    for (int i = 0; i < chain.n_sites - 1; ++i) {
      r.bond_perturbations[i] = scale * uniform_symmetric(gen);
    }
  }
  return r;
}

}  // namespace abchain
