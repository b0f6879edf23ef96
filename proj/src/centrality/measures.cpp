#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "centralitylab/centrality.hpp"
#include "centralitylab/error.hpp"

namespace centralitylab {

namespace {

constexpr std::array<std::string_view, kMeasureCount> kNames{
    "DC", "Katz", "Closeness", "Betweenness", "Eccentricity", "EC", "IC", "SC",
    "LC", "Coreness", "MDD", "LDD", "LocalRank", "CI", "H-index", "CR"};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view measure_name(Measure m) noexcept {
  return kNames[static_cast<std::size_t>(m)];
}

std::optional<Measure> parse_measure(std::string_view name) {
  for (std::size_t i = 0; i < kMeasureCount; ++i) {
    if (iequals(name, kNames[i])) return static_cast<Measure>(i);
  }
  if (iequals(name, "hindex")) return Measure::HIndex;
  return std::nullopt;
}

void MeasureParams::validate() const {
  if (katz_alpha && !(*katz_alpha > 0.0 && *katz_alpha < 1.0)) {
    throw InvalidArgument("Katz alpha must lie in (0, 1)");
  }
  if (!(mdd_mu >= 0.0 && mdd_mu <= 1.0)) throw InvalidArgument("MDD mu must lie in [0, 1]");
  if (ci_radius < 1) throw InvalidArgument("CI radius must be >= 1");
  if (cr_max_cycle < 3) throw InvalidArgument("CR maximum cycle length must be >= 3");
  if (!(ec_tolerance > 0.0)) throw InvalidArgument("EC tolerance must be positive");
  if (ec_max_iterations < 1) throw InvalidArgument("EC max iterations must be >= 1");
}

std::string MeasureParams::signature(Measure m) const {
  std::string s(measure_name(m));
  switch (m) {
    case Measure::Katz:
      s += katz_alpha ? ";alpha=" + fmt_double(*katz_alpha) : ";alpha=0.85/lambda1";
      break;
    case Measure::EC:
      s += ";tol=" + fmt_double(ec_tolerance) + ";iter=" + std::to_string(ec_max_iterations);
      break;
    case Measure::SC:
      s += sc_shift ? ";shift=1" : ";shift=0";
      break;
    case Measure::MDD:
      s += ";mu=" + fmt_double(mdd_mu);
      break;
    case Measure::CI:
      s += ";radius=" + std::to_string(ci_radius) + ";adaptive";
      break;
    case Measure::CR:
      s += ";max_cycle=" + std::to_string(cr_max_cycle);
      break;
    default:
      break;
  }
  return s;
}

std::vector<NodeId> rank_nodes(std::span<const double> scores) {
  for (double s : scores) {
    if (!std::isfinite(s)) throw InvalidArgument("rank_nodes: non-finite score");
  }
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

ScoreVector make_score_vector(Measure m, std::vector<double> scores) {
  ScoreVector sv;
  sv.measure = m;
  sv.ranking = rank_nodes(scores);
  sv.scores = std::move(scores);
  return sv;
}

ScoreVector compute_measure(const Graph& g, Measure m, const MeasureParams& p) {
  p.validate();
  switch (m) {
    case Measure::DC: return degree_centrality(g);
    case Measure::Katz: return katz(g, p.katz_alpha, p.dense_node_ceiling);
    case Measure::Closeness: return closeness(g);
    case Measure::Betweenness: return betweenness(g);
    case Measure::Eccentricity: return eccentricity(g);
    case Measure::EC:
      return eigenvector_centrality(g, p.ec_tolerance, p.ec_max_iterations);
    case Measure::IC: return information_centrality(g, p.dense_node_ceiling);
    case Measure::SC: return subgraph_centrality(g, p.sc_shift, p.dense_node_ceiling);
    case Measure::LC: return leverage_centrality(g);
    case Measure::Coreness: return coreness(g);
    case Measure::MDD: return mixed_degree_decomposition(g, p.mdd_mu);
    case Measure::LDD: return lowest_degree_decomposition(g);
    case Measure::LocalRank: return localrank(g);
    case Measure::CI: return collective_influence(g, p.ci_radius);
    case Measure::HIndex: return h_index(g);
    case Measure::CR: return cycle_ratio(g, p.cr_max_cycle);
  }
  throw InvalidArgument("unknown measure");
}

}  // namespace centralitylab
