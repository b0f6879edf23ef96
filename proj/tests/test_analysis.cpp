#include <doctest.h>

#include <cmath>
#include <random>

#include "centralitylab/analysis.hpp"
#include "centralitylab/error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace centralitylab;

namespace {

std::vector<double> random_vector(std::size_t n, int levels, gen::Rng& rng) {
  std::uniform_int_distribution<int> pick(0, levels - 1);
  std::vector<double> v(n);
  for (auto& x : v) x = levels > 0 ? pick(rng) : std::uniform_real_distribution<double>()(rng);
  return v;
}

NetworkScores network_with(const std::string& name, std::map<Measure, std::vector<double>> scores) {
  NetworkScores ns{name, {}};
  for (auto& [m, v] : scores) ns.scores.emplace(m, make_score_vector(m, v));
  return ns;
}

TaskResult task_result(const std::vector<double>& tau, const std::vector<double>& rate) {
  TaskResult r;
  r.measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  r.networks = {"net"};
  r.seed_grid = {10, 50};
  r.influence_tau = {tau};
  std::vector<std::vector<double>> curves;
  for (double x : rate) curves.push_back({0.0, x});
  r.infection_rate = {curves};
  return r;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("kendall tau examples") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> rev{5, 4, 3, 2, 1};
    CHECK(kendall_tau(x, x) == 1.0);
    CHECK(kendall_tau(x, rev) == -1.0);
    CHECK(kendall_tau(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}) ==
          doctest::Approx(2.0 / 3.0));
  }

  TEST_CASE("tau-a keeps tied pairs in the denominator, tau-b corrects for them") {
    const std::vector<double> x{1, 1, 2, 3};
    const std::vector<double> y{1, 2, 3, 4};
    CHECK(kendall_tau(x, y) == doctest::Approx(5.0 / 6.0));
    CHECK(kendall_tau(x, y, TauVariant::B) == doctest::Approx(5.0 / std::sqrt(5.0 * 6.0)));
    const std::vector<double> flat{2, 2, 2, 2};
    CHECK(kendall_tau(flat, y) == 0.0);
    CHECK(kendall_tau(flat, y, TauVariant::B) == 0.0);
  }

  TEST_CASE("fast tau equals pair enumeration") {
    gen::Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(trial % 60);
      const int levels = trial % 4 == 0 ? 0 : 1 + trial % 7;
      const auto x = random_vector(n, levels, rng);
      const auto y = random_vector(n, levels == 0 ? 0 : 1 + (trial * 3) % 5, rng);
      const auto fast = count_pairs(x, y);
      const auto slow = count_pairs_naive(x, y);
      CHECK(fast.concordant == slow.concordant);
      CHECK(fast.discordant == slow.discordant);
      CHECK(fast.ties_x == slow.ties_x);
      CHECK(fast.ties_y == slow.ties_y);
      CHECK(std::abs(kendall_tau(x, y) - oracle::kendall_tau_a(x, y)) <= 1e-12);
      CHECK(std::abs(kendall_tau(x, y, TauVariant::B) - kendall_tau_naive(x, y, TauVariant::B)) <= 1e-12);
    }
  }

  TEST_CASE("tau is symmetric and rank-based") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_vector(30, 6, rng);
      const auto y = random_vector(30, 4, rng);
      std::vector<double> tx;
      for (double v : x) tx.push_back(std::exp(v) * 3.0 - 7.0);
      CHECK(kendall_tau(x, y) == kendall_tau(y, x));
      CHECK(kendall_tau(tx, y) == kendall_tau(x, y));
    }
  }

  TEST_CASE("tau rejects bad input") {
    CHECK_THROWS_AS(kendall_tau(std::vector<double>{1, 2}, std::vector<double>{1}), InvalidArgument);
    CHECK_THROWS_AS(kendall_tau(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
    CHECK_THROWS_AS(kendall_tau(std::vector<double>{1, NAN}, std::vector<double>{1, 2}), InvalidArgument);
  }

  TEST_CASE("correlation matrix") {
    const std::vector<Measure> ms{Measure::DC, Measure::Katz};
    SUBCASE("identical vectors give 1") {
      const std::vector<double> v{3, 1, 2, 5};
      const std::vector<NetworkScores> nets{network_with("a", {{Measure::DC, v}, {Measure::Katz, v}})};
      const auto m = correlation_matrix(nets, ms);
      CHECK(m.at(Measure::DC, Measure::Katz) == 1.0);
    }
    SUBCASE("averages per-network tau") {
      const std::vector<double> x{1, 2, 3, 4, 5};
      // Three inversions give 0.4, two give 0.6.
      const std::vector<NetworkScores> nets{
          network_with("a", {{Measure::DC, x}, {Measure::Katz, {3, 2, 1, 4, 5}}}),
          network_with("b", {{Measure::DC, x}, {Measure::Katz, {2, 3, 1, 4, 5}}})};
      const auto m = correlation_matrix(nets, ms);
      CHECK(m.per_network[0][0][1] == doctest::Approx(0.4));
      CHECK(m.per_network[1][0][1] == doctest::Approx(0.6));
      CHECK(m.at(Measure::DC, Measure::Katz) == doctest::Approx(0.5));
      CHECK(m.at(Measure::Katz, Measure::DC) == m.at(Measure::DC, Measure::Katz));
      CHECK(m.at(Measure::DC, Measure::DC) == 1.0);
    }
    SUBCASE("ties keep the unit diagonal") {
      const std::vector<double> v{1, 1, 2};
      const std::vector<NetworkScores> nets{network_with("a", {{Measure::DC, v}, {Measure::Katz, v}})};
      CHECK(correlation_matrix(nets, ms).at(Measure::DC, Measure::DC) == 1.0);
    }
    SUBCASE("missing measure names the network and measure") {
      const std::vector<NetworkScores> nets{network_with("lonely", {{Measure::DC, {1, 2}}})};
      try {
        correlation_matrix(nets, ms);
        FAIL("expected an error");
      } catch (const InvalidArgument& e) {
        CHECK(std::string(e.what()).find("lonely") != std::string::npos);
        CHECK(std::string(e.what()).find("Katz") != std::string::npos);
      }
    }
  }

  TEST_CASE("average linkage") {
    SUBCASE("unique minimum merges first") {
      const std::vector<std::vector<double>> d{{0, 0.1, 0.9}, {0.1, 0, 0.9}, {0.9, 0.9, 0}};
      const auto t = average_linkage(d, {"A", "B", "C"});
      CHECK(t.merges[0].left == 0);
      CHECK(t.merges[0].right == 1);
      CHECK(t.merges[0].height == doctest::Approx(0.1));
    }
    SUBCASE("equal distances follow the tie-break") {
      std::vector<std::vector<double>> d(4, std::vector<double>(4, 0.5));
      for (int i = 0; i < 4; ++i) d[i][i] = 0;
      const auto t = average_linkage(d, {"a", "b", "c", "d"});
      REQUIRE(t.merges.size() == 3);
      CHECK(t.merges[0].left == 0);
      CHECK(t.merges[0].right == 1);
      CHECK(t.merges[1].left == 2);
      CHECK(t.merges[1].right == 3);
      CHECK(t.merges[2].left == 4);
      CHECK(t.merges[2].right == 5);
    }
    SUBCASE("hand-traced heights") {
      const std::vector<std::vector<double>> d{{0, 2, 6, 10}, {2, 0, 5, 9}, {6, 5, 0, 4}, {10, 9, 4, 0}};
      const auto t = average_linkage(d, {"A", "B", "C", "D"});
      REQUIRE(t.merges.size() == 3);
      CHECK(t.merges[0].height == 2.0);
      CHECK(t.merges[1].height == 4.0);
      CHECK(t.merges[2].height == 7.5);
      CHECK(t.merges[2].size == 4);
      CHECK(t.leaf_order == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("heights never decrease") {
      gen::Rng rng(21);
      for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 16);
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
        std::uniform_real_distribution<double> u(0.0, 2.0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = trial % 3 ? u(rng) : std::round(u(rng) * 2);
        const auto t = average_linkage(d, std::vector<std::string>(n, "x"));
        CHECK(t.merges.size() == n - 1);
        for (std::size_t k = 1; k < t.merges.size(); ++k) CHECK(t.merges[k].height >= t.merges[k - 1].height - 1e-12);
        CHECK(t.leaf_order.size() == n);
      }
    }
  }

  TEST_CASE("precision") {
    const std::vector<double> s{8, 7, 6, 5, 4, 3, 2, 1};
    CHECK(precision_at(s, s, 0.5) == 1.0);
    const std::vector<double> flipped{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(precision_at(s, flipped, 0.5) == 0.0);
    const std::vector<double> half{1, 2, 8, 7, 6, 5, 0, 0};
    CHECK(precision_at(s, half, 0.5) == 0.5);
    // k = max(1, floor(rho N))
    CHECK(precision_at(s, s, 0.01) == 1.0);
    gen::Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_vector(40, 5, rng);
      const auto b = random_vector(40, 9, rng);
      std::vector<double> ta;
      for (double v : a) ta.push_back(v * 10 + 3);
      for (double rho : {0.05, 0.1, 0.2, 1.0}) {
        CHECK(precision_at(a, a, rho) == 1.0);
        CHECK(precision_at(ta, b, rho) == precision_at(a, b, rho));
      }
    }
    CHECK_THROWS_AS(precision_at(s, s, 0.0), InvalidArgument);
  }

  TEST_CASE("average distance among top nodes") {
    const Graph p3 = gen::path(3);
    CHECK(top_L_avg_distance(p3, std::vector<NodeId>{0, 1}, 2) == 1.0);
    CHECK(top_L_avg_distance(p3, std::vector<NodeId>{0, 2}, 2) == 2.0);
    CHECK(top_L_avg_distance(gen::complete(3), std::vector<NodeId>{0, 1, 2}, 3) == 1.0);
    CHECK_THROWS_AS(top_L_avg_distance(p3, std::vector<NodeId>{0, 1, 2}, 1), InvalidArgument);
    CHECK_THROWS_AS(top_L_avg_distance(p3, std::vector<NodeId>{0, 1, 2}, 4), InvalidArgument);
    gen::Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = gen::random_connected(30, 0.05, rng);
      const auto perm = gen::random_permutation(30, rng);
      for (std::size_t l = 2; l <= 30; l += 7) CHECK(top_L_avg_distance(g, perm, l) >= 1.0);
    }
  }

  TEST_CASE("greedy seed sets") {
    const auto sv = make_score_vector(Measure::DC, {0.2, 0.9, 0.5, 0.5, 0.1});
    CHECK(greedy_seed_set(sv, 5).size() == 5);
    CHECK(greedy_seed_set(sv, 1) == std::vector<NodeId>{1});
    CHECK(greedy_seed_set(sv, 2) == std::vector<NodeId>{1, 2});
    CHECK_THROWS_AS(greedy_seed_set(sv, 0), InvalidArgument);
    CHECK_THROWS_AS(greedy_seed_set(sv, 6), InvalidArgument);
  }

  TEST_CASE("task rankings") {
    std::vector<double> up, down;
    for (std::size_t i = 0; i < kMeasureCount; ++i) {
      up.push_back(static_cast<double>(i));
      down.push_back(-static_cast<double>(i));
    }
    CHECK(task_rankings(task_result(up, up)).tau == 1.0);
    CHECK(task_rankings(task_result(up, down)).tau == -1.0);
    const auto r = task_rankings(task_result(up, down));
    CHECK(r.single_node.front() == kAllMeasures.back());
    CHECK(r.seed_set.front() == kAllMeasures.front());
    CHECK_THROWS_AS(task_rankings(task_result(up, up), 20), InvalidArgument);
  }
}
