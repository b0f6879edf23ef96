#include "centralitylab/sir.hpp"

#include <algorithm>
#include <cmath>

#include "centralitylab/error.hpp"
#include "centralitylab/parallel.hpp"

namespace centralitylab {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t SplitMixStream::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t run_stream_key(const SirConfig& cfg, std::span<const NodeId> seeds,
                             std::uint64_t run_index) noexcept {
  // Order-insensitive digest of the seed set.
  std::uint64_t seed_digest = 0;
  for (NodeId s : seeds) seed_digest += mix64(static_cast<std::uint64_t>(s) + kGolden);
  std::uint64_t key = mix64(cfg.master_seed);
  key = mix64(key ^ cfg.stream_salt);
  key = mix64(key ^ seed_digest);
  key = mix64(key ^ run_index);
  return key;
}

void SirConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw InvalidArgument("SIR beta must lie in [0, 1]");
  if (runs < 1) throw InvalidArgument("SIR runs must be >= 1");
}

double SirOutcome::standard_error() const {
  return recovered.empty() ? 0.0 : stddev / std::sqrt(static_cast<double>(recovered.size()));
}

namespace {

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw InvalidArgument("SIR: empty seed set");
  std::vector<NodeId> sorted(seeds.begin(), seeds.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= g.node_count()) throw InvalidArgument("SIR: seed index out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("SIR: duplicate seed");
  }
}

enum class State : unsigned char { Susceptible, Infected, Recovered };

std::size_t run_unchecked(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg,
                          std::uint64_t run_index) {
  std::vector<State> state(g.node_count(), State::Susceptible);
  std::vector<NodeId> infected(seeds.begin(), seeds.end());
  std::sort(infected.begin(), infected.end());
  std::vector<NodeId> next;
  for (NodeId s : seeds) state[s] = State::Infected;
  SplitMixStream rng(run_stream_key(cfg, seeds, run_index));
  std::size_t recovered = 0;

  while (!infected.empty()) {
    next.clear();
    for (NodeId u : infected) {
      for (NodeId v : g.neighbors(u)) {
        // A node already infected this step needs no further trials.
        if (state[v] != State::Susceptible) continue;
        if (rng.uniform() < cfg.beta) {
          state[v] = State::Infected;
          next.push_back(v);
        }
      }
    }
    for (NodeId u : infected) state[u] = State::Recovered;
    recovered += infected.size();
    infected.swap(next);
  }
  return recovered;
}

}  // namespace

std::size_t run_sir(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg,
                    std::uint64_t run_index) {
  cfg.validate();
  check_seeds(g, seeds);
  return run_unchecked(g, seeds, cfg, run_index);
}

SirOutcome simulate(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg) {
  cfg.validate();
  check_seeds(g, seeds);
  SirOutcome out;
  out.recovered.resize(cfg.runs);
  parallel_for(cfg.runs, cfg.workers,
               [&](std::size_t r) { out.recovered[r] = run_unchecked(g, seeds, cfg, r); });
  double sum = 0.0;
  for (auto c : out.recovered) sum += static_cast<double>(c);
  out.mean = sum / static_cast<double>(cfg.runs);
  double ss = 0.0;
  for (auto c : out.recovered) {
    const double d = static_cast<double>(c) - out.mean;
    ss += d * d;
  }
  out.stddev = cfg.runs > 1 ? std::sqrt(ss / static_cast<double>(cfg.runs - 1)) : 0.0;
  return out;
}

double node_influence(const Graph& g, NodeId node, const SirConfig& cfg) {
  const NodeId seed[] = {node};
  return simulate(g, seed, cfg).mean;
}

double seedset_infection_rate(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg) {
  return simulate(g, seeds, cfg).mean / static_cast<double>(g.node_count());
}

}  // namespace centralitylab
