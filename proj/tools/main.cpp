#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "centralitylab/pipeline.hpp"

namespace cl = centralitylab;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitTotal = 3;

struct Options {
  cl::ExperimentConfig cfg;
  std::string beta = "threshold";
  std::string corpus;
  std::vector<std::string> measures;
  double katz_alpha = 0.0;
};

void print_summary(const cl::ExperimentReport& r) {
  std::printf("networks: %zu ok, %zu failed\n", r.networks.size(), r.failures.size());
  for (const auto& f : r.failures) std::printf("  failed: %s: %s\n", f.file.c_str(), f.message.c_str());
  if (r.correlation) {
    const auto& c = *r.correlation;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t a = 0; a < c.measures.size(); ++a) {
      for (std::size_t b = a + 1; b < c.measures.size(); ++b, ++count) sum += c.values[a][b];
    }
    std::printf("mean pairwise tau: %.4f\n", count ? sum / count : 0.0);
  }
  if (r.rankings) std::printf("cross-task ranking tau: %.4f\n", r.rankings->tau);
  std::printf("content hash: %s\n", r.content_hash.c_str());
}

int run_stages(Options& o, const cl::Stages& stages, bool print_stats) {
  o.cfg.corpus = o.corpus;
  cl::ExperimentReport report;
  try {
    report = cl::run_corpus(o.cfg, stages);
  } catch (const cl::CorpusFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    for (const auto& f : e.failures()) std::fprintf(stderr, "  %s: %s\n", f.file.c_str(), f.message.c_str());
    return kExitTotal;
  }
  if (print_stats) {
    std::fputs(cl::stats_csv(report.networks).c_str(), stdout);
  } else {
    print_summary(report);
  }
  return report.failures.empty() ? 0 : kExitPartial;
}

int run_scores(Options& o) {
  std::vector<cl::Measure> measures;
  for (const auto& name : o.measures) {
    auto m = cl::parse_measure(name);
    if (!m) throw cl::InvalidArgument("unknown measure: " + name);
    measures.push_back(*m);
  }
  if (measures.empty()) measures.assign(cl::kAllMeasures.begin(), cl::kAllMeasures.end());
  o.cfg.params.validate();
  const std::filesystem::path file = o.corpus;
  cl::Graph g;
  try {
    g = cl::load_network(file, o.cfg.giant_component);
  } catch (const cl::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", file.filename().c_str(), e.what());
    return kExitTotal;
  }
  std::vector<cl::ScoreVector> columns;
  for (auto m : measures) columns.push_back(cl::cached_measure(g, m, o.cfg.params, o.cfg.out_dir / "cache"));
  const std::string csv = cl::scores_csv(g, columns);
  const auto out = o.cfg.out_dir / "scores" / (file.stem().string() + ".csv");
  std::filesystem::create_directories(out.parent_path());
  std::FILE* f = std::fopen(out.c_str(), "wb");
  if (!f) throw cl::Error("cannot write " + out.string());
  std::fputs(csv.c_str(), f);
  std::fclose(f);
  std::fputs(csv.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  auto& cfg = o.cfg;
  CLI::App app{"Node centrality benchmark: measures, rank correlation and SIR spreading tasks", "centralitylab"};
  app.set_version_flag("--version", std::string(cl::kToolVersion));
  app.set_config("--config", "", "Key=value config file mirroring the long flags; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  app.add_option("--seed", cfg.master_seed, "Master seed for every SIR random stream")->capture_default_str();
  app.add_option("--runs", cfg.runs, "SIR runs per estimate")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--beta", o.beta, "Infection probability, or 'threshold' for the epidemic threshold")
      ->capture_default_str();
  app.add_option("--rho-grid", cfg.rho_grid, "Comma-separated top fractions for precision")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--l-grid", cfg.l_grid, "Comma-separated seed-set / top-L sizes")->delimiter(',')->capture_default_str();
  app.add_option("--ranking-seed-size", cfg.ranking_seed_size, "Seed-set size used to order measures")
      ->capture_default_str();
  app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  app.add_flag("--no-giant-component", [&](std::int64_t) { cfg.giant_component = false; },
               "Keep every component instead of the largest one");
  app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--katz-alpha", o.katz_alpha, "Katz attenuation (default 0.85 / largest eigenvalue)");
  app.add_option("--mdd-mu", cfg.params.mdd_mu, "MDD exhausted-degree weight")->capture_default_str();
  app.add_option("--ci-radius", cfg.params.ci_radius, "Collective influence ball radius")->capture_default_str();
  app.add_option("--cr-max-cycle", cfg.params.cr_max_cycle, "Longest cycle considered by cycle ratio")
      ->capture_default_str();
  app.add_option("--dense-ceiling", cfg.params.dense_node_ceiling, "Node limit for Katz, IC and SC")
      ->capture_default_str();
  app.add_flag("--no-sc-shift", [&](std::int64_t) { cfg.params.sc_shift = false; },
               "Report raw subgraph centrality instead of exp(-lambda_1) scaled values");
  app.add_flag("-q,--quiet", cfg.quiet, "No progress lines on stderr");

  struct Sub {
    const char* name;
    const char* help;
    cl::Stages stages;
  };
  const Sub subs[] = {
      {"stats", "Network statistics table", cl::Stages::stats_only()},
      {"correlate", "Averaged Kendall tau matrix and dendrogram", {true, true, false, false, false}},
      {"sir-single", "Single-node spreading task (precision, tau with influence)", {true, false, true, false, false}},
      {"sir-seedset", "Seed-set spreading task (infection rate over L)", {true, false, false, true, false}},
      {"dispersion", "Average distance among top-L nodes", {true, false, false, false, true}},
      {"report", "Every stage", cl::Stages::all()},
  };
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("corpus", o.corpus, "Edge-list file or directory of edge-list files")->required();
    sub->fallthrough();
    handles.push_back(sub);
  }
  auto* scores = app.add_subcommand("scores", "Centrality scores of one network");
  scores->add_option("network", o.corpus, "Edge-list file")->required()->check(CLI::ExistingFile);
  scores->add_option("-m,--measure", o.measures, "Measure name (repeatable; default all)");
  scores->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() != 0) std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (o.beta == "threshold") {
      cfg.beta_mode = cl::BetaMode::Threshold;
    } else {
      std::size_t used = 0;
      try {
        cfg.beta = std::stod(o.beta, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != o.beta.size()) throw cl::InvalidArgument("--beta expects a number or 'threshold'");
      cfg.beta_mode = cl::BetaMode::Fixed;
    }
    if (app.get_option("--katz-alpha")->count() > 0) cfg.params.katz_alpha = o.katz_alpha;

    if (scores->parsed()) return run_scores(o);
    for (std::size_t i = 0; i < handles.size(); ++i) {
      if (handles[i]->parsed()) return run_stages(o, subs[i].stages, i == 0);
    }
  } catch (const cl::InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitTotal;
  }
  return kExitUsage;
}
