#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "centralitylab/graph.hpp"

namespace centralitylab {

/// Discrete-time SIR settings. Recovery probability is fixed at 1: a node
/// stays infected for exactly one step.
struct SirConfig {
  double beta = 0.1;
  std::size_t runs = 1000;
  std::uint64_t master_seed = 0x5eed;
  /// Extra key mixed into every random stream, e.g. a network content hash,
  /// so different networks never share streams.
  std::uint64_t stream_salt = 0;
  /// Threads used to spread runs; results do not depend on it.
  std::size_t workers = 1;

  void validate() const;
};

/// Recovered counts of all runs plus their mean and standard deviation.
struct SirOutcome {
  std::vector<std::size_t> recovered;
  double mean = 0.0;
  double stddev = 0.0;

  double standard_error() const;
};

/// Counter-based generator: output k of a stream is splitmix64(key + k * golden).
/// Any (key, k) is reproducible without touching other streams.
class SplitMixStream {
 public:
  explicit SplitMixStream(std::uint64_t key) noexcept : state_(key) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stream key for one run: master seed, salt, seed-set digest and run index
/// folded through mix64.
std::uint64_t run_stream_key(const SirConfig& cfg, std::span<const NodeId> seeds,
                             std::uint64_t run_index) noexcept;

/// One synchronous SIR run; returns the final number of recovered nodes.
/// Each step, every susceptible node gets an independent beta trial per
/// currently infected neighbour, then every previously infected node recovers.
std::size_t run_sir(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg,
                    std::uint64_t run_index);

/// cfg.runs runs, parallelised over cfg.workers; aggregation is in run order.
SirOutcome simulate(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg);

/// Mean recovered count over cfg.runs runs seeded at {node}.
double node_influence(const Graph& g, NodeId node, const SirConfig& cfg);

/// Mean of N_R / N over cfg.runs runs.
double seedset_infection_rate(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg);

}  // namespace centralitylab
