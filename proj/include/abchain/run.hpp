#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abchain/chain.hpp"
#include "abchain/experiments.hpp"
#include "abchain/types.hpp"

namespace abchain {

inline constexpr const char* kVersion = "0.1.0";

// Fully resolved run description; what the CLI parses into and the manifest
// records. Grid defaults mirror the reference studies: N = 7 chain, 1000
// disorder realizations, disorder levels up to E = 1 (perturbations up to 50%
// of the weak coupling), delays up to 10% of the entangling time.
struct RunConfig {
  std::string command;  // trace | ratio-sweep | disorder-sweep | delay-sweep
  int n_sites = 7;
  Real ratio = 0.1;       // chain couplings delta = ratio, big_delta = 1 ...
  Real delta = 0.0;       // ... unless both explicit couplings are set
  Real big_delta = 0.0;
  Protocol protocol = Protocol::bell_ends;
  DisorderKind kind = DisorderKind::diagonal;
  std::vector<Real> times;   // trace grid; empty = auto over the peak window
  std::vector<Real> ratios;  // ratio-sweep grid
  std::vector<Real> levels;  // disorder E grid
  std::vector<Real> delays;  // delay D grid
  int n_realizations = 1000;
  std::uint64_t base_seed = 12345;
  int threads = 0;  // 0 = ABCHAIN_THREADS env or hardware concurrency
  std::string output;  // CSV path; empty = "<command>.csv"
  PeakSearchOptions peak;
};

// Parses "start:stop:step" (endpoints included within half a step), a comma
// list, or a single number.
std::vector<Real> parse_grid(const std::string& text);

// Executes the configured study and writes the results CSV plus a JSON
// manifest (config, seed, code version, wall time) at "<csv>.manifest.json".
// Returns the CSV path actually written. Throws InvalidInputError for bad
// configs, NumericalError family for failed computations, IoError for
// unwritable outputs.
std::string run(const RunConfig& config);

}  // namespace abchain
