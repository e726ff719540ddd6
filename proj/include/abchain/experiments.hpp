#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "abchain/chain.hpp"
#include "abchain/dynamics.hpp"
#include "abchain/entanglement.hpp"
#include "abchain/types.hpp"

namespace abchain {

struct PeakSearchOptions {
  Real window_lo = 0.0;
  // Upper edge of the search window; <= 0 selects the default
  // 8 pi big_delta / delta^2, which brackets the first entanglement peak at
  // every ratio >= 0.1 (defect transport is second order in delta/big_delta).
  Real window_hi = 0.0;
  int coarse_points = 4000;
  Real time_rel_tol = 1e-6;
};

Real default_window_hi(const ChainSpec& chain);

struct PeakResult {
  Real ratio = 0.0;
  Real t_entangle = 0.0;
  Real eof_at_peak = 0.0;
};

struct SweepRecord {
  Protocol protocol{};
  Real ratio = 0.0;
  DisorderKind kind{};
  Real strength = 0.0;  // dimensionless E
  int n_realizations = 0;
  Real mean_eof = 0.0;
  Real std_eof = 0.0;  // standard deviation of a single realization
  std::uint64_t base_seed = 0;
};

// Initial states: cluster puts amplitude 1/2 on vacuum, 1_A, 1_C and the pair
// {A,C}; bell_ends puts amplitude 1 on the pair {A,C}; bell_centre puts
// amplitude 1 on the centre site.
QuantumState initial_state(Protocol protocol, BasisPtr basis);

// EOF of the A-C reduced state after evolving psi0 to time t.
Real eof_at(const SpectralDecomposition& sd, const QuantumState& psi0, Real t);

// EOF(t) on the clean chain over an ascending non-negative grid.
std::vector<std::pair<Real, Real>> eof_trace(const ChainSpec& chain, Protocol protocol,
                                             const std::vector<Real>& t_grid);

// Entangling time t_E: the global maximum of EOF(t) over the window, located
// on a coarse grid and refined by golden-section search around the best grid
// point. Throws PeakNotFoundError when the best grid point sits on the window
// edge, i.e. EOF is monotone over the window.
PeakResult find_entangling_time(const ChainSpec& chain, Protocol protocol,
                                const PeakSearchOptions& options = {});

// find_entangling_time across coupling ratios, big_delta = 1 convention.
std::vector<PeakResult> ratio_sweep(int n_sites, Protocol protocol,
                                    const std::vector<Real>& ratios,
                                    const PeakSearchOptions& options = {},
                                    int n_threads = 0);

// Sweep entries whose eof_at_peak is strictly greater than both neighbours'.
std::vector<PeakResult> local_peak_maxima(const std::vector<PeakResult>& sweep);

// Monte Carlo disorder study: for each level E, n_realizations independent
// draws (realization k uses seed mix_seed(base_seed, k)), each evaluated at
// the unperturbed entangling time of the clean chain. Reduction runs in index
// order, so means are bit-identical for any worker count.
std::vector<SweepRecord> disorder_sweep(const ChainSpec& chain, Protocol protocol,
                                        DisorderKind kind, const std::vector<Real>& levels,
                                        int n_realizations, std::uint64_t base_seed,
                                        const PeakSearchOptions& options = {},
                                        int n_threads = 0,
                                        std::optional<PeakResult> clean_peak = {});

// EOF at the unperturbed t_E against the injection delay fraction D. D = 0
// follows the synchronous code path and reproduces the clean value exactly.
std::vector<std::pair<Real, Real>> delay_sweep(const ChainSpec& chain, Protocol protocol,
                                               const std::vector<Real>& delays,
                                               const PeakSearchOptions& options = {},
                                               int n_threads = 0,
                                               std::optional<PeakResult> clean_peak = {});

}  // namespace abchain
