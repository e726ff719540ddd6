#include "abchain/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "abchain/errors.hpp"
#include "abchain/parallel.hpp"
#include "abchain/peak_search.hpp"
#include "abchain/rng.hpp"

namespace abchain {

namespace {

struct PreparedProtocol {
  BasisPtr basis;
  SpectralDecomposition sd;
  QuantumState psi0;
};

PreparedProtocol prepare(const ChainSpec& chain, Protocol protocol) {
  PreparedProtocol p;
  p.basis = build_basis(chain.n_sites, 2);
  p.sd = decompose(build_hamiltonian(chain, p.basis));
  p.psi0 = initial_state(protocol, p.basis);
  return p;
}

}  // namespace

Real default_window_hi(const ChainSpec& chain) {
  return 8.0 * std::numbers::pi * chain.big_delta / (chain.delta * chain.delta);
}

QuantumState initial_state(Protocol protocol, BasisPtr basis) {
  if (basis->max_excitations() < 2 && protocol != Protocol::bell_centre) {
    throw InvalidInputError("protocol needs the two-excitation sector");
  }
  const int site_c = basis->n_sites() - 1;
  const SiteMask bit_a = SiteMask{1};
  const SiteMask bit_c = SiteMask{1} << site_c;
  QuantumState psi = zero_state(basis);
  switch (protocol) {
    case Protocol::cluster:
      psi.amplitudes[0] = 0.5;
      psi.amplitudes[basis->index_of(bit_a)] = 0.5;
      psi.amplitudes[basis->index_of(bit_c)] = 0.5;
      psi.amplitudes[basis->index_of(bit_a | bit_c)] = 0.5;
      break;
    case Protocol::bell_ends:
      psi.amplitudes[basis->index_of(bit_a | bit_c)] = 1.0;
      break;
    case Protocol::bell_centre: {
      const SiteMask bit_b = SiteMask{1} << ((basis->n_sites() - 1) / 2);
      psi.amplitudes[basis->index_of(bit_b)] = 1.0;
      break;
    }
  }
  return psi;
}

Real eof_at(const SpectralDecomposition& sd, const QuantumState& psi0, Real t) {
  return eof(reduce_to_ac(evolve(sd, psi0, t)));
}

std::vector<std::pair<Real, Real>> eof_trace(const ChainSpec& chain, Protocol protocol,
                                             const std::vector<Real>& t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw InvalidInputError("time grid must be ascending and non-negative");
    }
  }
  const PreparedProtocol p = prepare(chain, protocol);
  std::vector<std::pair<Real, Real>> trace;
  trace.reserve(t_grid.size());
  for (const Real t : t_grid) {
    trace.emplace_back(t, eof_at(p.sd, p.psi0, t));
  }
  return trace;
}

PeakResult find_entangling_time(const ChainSpec& chain, Protocol protocol,
                                const PeakSearchOptions& options) {
  const Real lo = options.window_lo;
  const Real hi = options.window_hi > 0.0 ? options.window_hi : default_window_hi(chain);
  if (!(lo >= 0.0) || !(hi > lo)) throw InvalidInputError("bad peak search window");
  if (options.coarse_points < 3) throw InvalidInputError("need at least 3 grid points");

  const PreparedProtocol p = prepare(chain, protocol);
  const auto eof_of = [&](Real t) { return eof_at(p.sd, p.psi0, t); };

  const int n = options.coarse_points;
  const Real step = (hi - lo) / static_cast<Real>(n - 1);
  int best = 0;
  Real best_value = -1.0;
  for (int i = 0; i < n; ++i) {
    const Real value = eof_of(lo + step * i);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  if (best == 0 || best == n - 1) {
    throw PeakNotFoundError("EOF has no interior maximum in [" + std::to_string(lo) +
                            ", " + std::to_string(hi) + "]");
  }

  const PeakEstimate peak = golden_section_maximize(
      eof_of, lo + step * (best - 1), lo + step * (best + 1), options.time_rel_tol);
  return PeakResult{chain.ratio(), peak.x, peak.value};
}

std::vector<PeakResult> ratio_sweep(int n_sites, Protocol protocol,
                                    const std::vector<Real>& ratios,
                                    const PeakSearchOptions& options, int n_threads) {
  for (const Real r : ratios) {
    if (!(r > 0.0) || !(r < 1.0)) {
      throw InvalidInputError("coupling ratios must lie in (0, 1)");
    }
  }
  std::vector<PeakResult> results(ratios.size());
  parallel_for_index(static_cast<Index>(ratios.size()), n_threads, [&](Index i) {
    const auto idx = static_cast<std::size_t>(i);
    results[idx] = find_entangling_time(chain_for_ratio(n_sites, ratios[idx]), protocol, options);
  });
  return results;
}

std::vector<PeakResult> local_peak_maxima(const std::vector<PeakResult>& sweep) {
  std::vector<PeakResult> maxima;
  for (std::size_t i = 1; i + 1 < sweep.size(); ++i) {
    if (sweep[i].eof_at_peak > sweep[i - 1].eof_at_peak &&
        sweep[i].eof_at_peak > sweep[i + 1].eof_at_peak) {
      maxima.push_back(sweep[i]);
    }
  }
  return maxima;
}

std::vector<SweepRecord> disorder_sweep(const ChainSpec& chain, Protocol protocol,
                                        DisorderKind kind, const std::vector<Real>& levels,
                                        int n_realizations, std::uint64_t base_seed,
                                        const PeakSearchOptions& options, int n_threads,
                                        std::optional<PeakResult> clean_peak) {
  if (n_realizations < 1) throw InvalidInputError("need at least one realization");
  for (const Real level : levels) {
    if (!(level >= 0.0)) throw InvalidInputError("disorder levels must be >= 0");
  }
  const PeakResult peak =
      clean_peak ? *clean_peak : find_entangling_time(chain, protocol, options);

  const BasisPtr basis = build_basis(chain.n_sites, 2);
  const QuantumState psi0 = initial_state(protocol, basis);

  // One flat task per (level, realization); every EOF lands in its own slot.
  const std::size_t n_levels = levels.size();
  std::vector<Real> eofs(n_levels * static_cast<std::size_t>(n_realizations));
  parallel_for_index(static_cast<Index>(eofs.size()), n_threads, [&](Index task) {
    const std::size_t level_idx = static_cast<std::size_t>(task) / n_realizations;
    const std::uint64_t k = static_cast<std::uint64_t>(task) % n_realizations;
    const DisorderRealization draw =
        sample_disorder(chain, kind, levels[level_idx], mix_seed(base_seed, k));
    const SpectralDecomposition sd = decompose(build_hamiltonian(chain, draw, basis));
    eofs[static_cast<std::size_t>(task)] = eof_at(sd, psi0, peak.t_entangle);
  });

  std::vector<SweepRecord> records;
  records.reserve(n_levels);
  for (std::size_t level_idx = 0; level_idx < n_levels; ++level_idx) {
    const Real* values = eofs.data() + level_idx * static_cast<std::size_t>(n_realizations);
    Real mean = 0.0;
    for (int k = 0; k < n_realizations; ++k) mean += values[k];
    mean /= n_realizations;
    Real variance = 0.0;
    for (int k = 0; k < n_realizations; ++k) {
      variance += (values[k] - mean) * (values[k] - mean);
    }
    variance = n_realizations > 1 ? variance / (n_realizations - 1) : 0.0;
    records.push_back(SweepRecord{protocol, chain.ratio(), kind, levels[level_idx],
                                  n_realizations, mean, std::sqrt(variance), base_seed});
  }
  return records;
}

std::vector<std::pair<Real, Real>> delay_sweep(const ChainSpec& chain, Protocol protocol,
                                               const std::vector<Real>& delays,
                                               const PeakSearchOptions& options, int n_threads,
                                               std::optional<PeakResult> clean_peak) {
  if (protocol == Protocol::bell_centre) {
    throw InvalidInputError("delay sweep needs a protocol with two injections");
  }
  for (const Real d : delays) {
    if (!(d >= 0.0) || d > 0.1) {
      throw InvalidInputError("delay fractions must lie in [0, 0.1]");
    }
  }
  const PeakResult peak =
      clean_peak ? *clean_peak : find_entangling_time(chain, protocol, options);
  const PreparedProtocol p = prepare(chain, protocol);

  std::vector<std::pair<Real, Real>> results(delays.size());
  parallel_for_index(static_cast<Index>(delays.size()), n_threads, [&](Index i) {
    const auto idx = static_cast<std::size_t>(i);
    const Real d = delays[idx];
    // D = 0 is the synchronous protocol; run it through the same path as the
    // clean evaluation so the two agree bit for bit.
    const Real value =
        d == 0.0 ? eof_at(p.sd, p.psi0, peak.t_entangle)
                 : eof(reduce_to_ac(delayed_protocol_state(p.sd, protocol, d, peak.t_entangle)));
    results[idx] = {d, value};
  });
  return results;
}

}  // namespace abchain
