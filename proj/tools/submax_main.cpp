#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "submax/baselines.hpp"
#include "submax/bench.hpp"
#include "submax/errors.hpp"
#include "submax/io.hpp"
#include "submax/sprout.hpp"
#include "submax/sproutpp.hpp"

namespace {

// Exit codes: 0 ok, 2 usage or config, 3 degenerate instance, 4 resource
// refusal.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitResource = 4;

int g_verbose = 0;

void log_note(const std::string& msg) {
  if (g_verbose > 0) std::cerr << "[submax] " << msg << "\n";
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("SUBMOD_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw submax::ConfigError(std::string("SUBMOD_SEED is not an integer: ") + raw);
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw submax::ConfigError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw submax::ConfigError("write failed: " + path);
}

struct RunArgs {
  std::string instance_path;
  std::string algo;
  std::optional<std::uint64_t> seed;
  submax::AlgoOverrides ov;
  int jobs = 1;
  std::string out_path;
  bool pretty = false;
  bool timing = false;
};

int cmd_run(const RunArgs& a) {
  const submax::Instance inst = submax::load_instance(a.instance_path);
  log_note("instance: n=" + std::to_string(inst.n) + " matroids=" +
           std::to_string(inst.matroid_count()) + " knapsacks=" +
           std::to_string(inst.knapsack_count()));
  if (submax::singleton_feasible_pool(inst).empty()) {
    std::cerr << "error: no feasible singleton; nothing to optimize\n";
    return kExitDegenerate;
  }
  std::uint64_t seed = 0;
  if (a.seed) {
    seed = *a.seed;
  } else if (auto env = env_seed()) {
    seed = *env;
    log_note("seed from SUBMOD_SEED: " + std::to_string(seed));
  }
  const submax::ResultRecord rec = submax::run_algorithm(inst, a.algo, a.ov, seed, a.jobs);
  const std::string payload = submax::result_to_json(rec, a.pretty, a.timing) + "\n";
  std::cout << payload;
  if (!a.out_path.empty()) write_text(a.out_path, payload);
  return kExitOk;
}

struct BenchArgs {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  bool pretty = false;
  bool timing = false;
};

int cmd_bench(const BenchArgs& a) {
  submax::ExperimentConfig cfg = submax::load_experiment_config(a.config_path);
  if (a.seed) cfg.seed = *a.seed;
  if (a.jobs) cfg.jobs = *a.jobs;
  const submax::ExperimentOutput out = submax::run_experiment(cfg);
  for (const auto& note : out.notes) std::cerr << "note: " << note << "\n";
  const std::string csv = submax::records_to_csv(out.records, a.timing);
  if (a.out_path.empty()) {
    log_note("no --out; summary only");
  } else {
    write_text(a.out_path, csv);
    log_note("wrote " + std::to_string(out.records.size()) + " records to " + a.out_path);
  }
  const auto rows = submax::summarize(out.records);
  if (a.pretty) {
    submax::print_summary_table(rows, std::cout);
  } else {
    std::cout << submax::summary_to_jsonl(rows);
  }
  return kExitOk;
}

struct BruteArgs {
  std::string instance_path;
  std::optional<int> size_cap;
  bool pretty = false;
};

int cmd_brute(const BruteArgs& a) {
  const submax::Instance inst = submax::load_instance(a.instance_path);
  const submax::BruteForceResult res = submax::brute_force(inst, a.size_cap);
  submax::ResultRecord rec;
  rec.algo = "brute";
  rec.set = res.opt_set;
  rec.value = res.opt_value;
  rec.oracle_calls = res.sets_examined;
  std::cout << submax::result_to_json(rec, a.pretty, false) << "\n";
  return kExitOk;
}

struct GenArgs {
  std::string kind;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int n = 100;
  double p = 0.01;
  int cap = 10;
  double degree_budget = 100;
  double digit_budget = 40;
  bool graph_only = false;
  int count = 40;
  int dim = 2;
};

int cmd_gen(GenArgs a) {
  if (!a.seed_given) {
    if (auto env = env_seed()) a.seed = *env;
  }
  if (a.kind == "er") {
    const submax::WeightedGraph g = submax::gen_er_graph(a.n, a.p, a.seed);
    log_note("er graph: n=" + std::to_string(g.n) + " edges=" + std::to_string(g.edges.size()));
    if (a.graph_only) {
      submax::save_graph(g, a.out_path);
    } else {
      submax::save_instance_doc(
          submax::maxcut_instance_doc(g, a.cap, a.degree_budget, a.digit_budget), a.out_path);
    }
    return kExitOk;
  }
  if (a.kind == "synthetic-movies") {
    submax::save_movie_csv(submax::synthetic_movie_rows(a.count, a.seed, a.dim), a.out_path);
    return kExitOk;
  }
  throw submax::ConfigError("gen: unknown kind \"" + a.kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"submodular maximization under matroid and knapsack constraints"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", g_verbose, "log progress to stderr");

  RunArgs run_args;
  std::uint64_t run_seed = 0;
  auto* run = app.add_subcommand("run", "run one algorithm on an instance file");
  run->add_option("--instance", run_args.instance_path, "instance JSON file")->required();
  run->add_option("--algo", run_args.algo, "greedy | rp_greedy | dssgs | sprout | sproutpp")
      ->required();
  auto* run_seed_opt = run->add_option("--seed", run_seed, "seed for randomized algorithms");
  int run_c_enum = 0, run_ell = 0, run_tc = 0, run_rounds = 0, run_jobs = 1;
  double run_eps = 0, run_delta = 0, run_beta = 0, run_gamma = 0, run_alpha = 0, run_mu = 0;
  auto* o_c = run->add_option("--c-enum", run_c_enum, "seed-set size to enumerate");
  auto* o_ell = run->add_option("--ell", run_ell, "disjoint candidate count");
  auto* o_tc = run->add_option("--tc", run_tc, "filter-passing sample target");
  auto* o_rounds = run->add_option("--rounds", run_rounds, "rp_greedy round count");
  auto* o_eps = run->add_option("--eps", run_eps, "threshold decay");
  auto* o_delta = run->add_option("--delta", run_delta, "density grid resolution");
  auto* o_beta = run->add_option("--beta", run_beta, "density scale");
  auto* o_gamma = run->add_option("--gamma", run_gamma, "seed-value density weight");
  auto* o_alpha = run->add_option("--alpha", run_alpha, "sampling filter slack");
  auto* o_mu = run->add_option("--mu", run_mu, "damping of the density search");
  run->add_option("--jobs", run_jobs, "worker threads (0 = all cores)");
  run->add_option("--out", run_args.out_path, "also write the result JSON here");
  run->add_flag("--pretty", run_args.pretty, "indent the JSON output");
  run->add_flag("--timing", run_args.timing, "include measured wall time");

  BenchArgs bench_args;
  std::uint64_t bench_seed = 0;
  int bench_jobs = 0;
  auto* bench = app.add_subcommand("bench", "run an experiment sweep from a config file");
  bench->add_option("--config", bench_args.config_path, "experiment config JSON")->required();
  bench->add_option("--out", bench_args.out_path, "result CSV path");
  auto* bench_seed_opt = bench->add_option("--seed", bench_seed, "override the config seed");
  auto* bench_jobs_opt = bench->add_option("--jobs", bench_jobs, "override the config job count");
  bench->add_flag("--pretty", bench_args.pretty, "summary as a table instead of JSON lines");
  bench->add_flag("--timing", bench_args.timing, "include measured wall time in the CSV");

  BruteArgs brute_args;
  int brute_cap = 0;
  auto* brute = app.add_subcommand("brute", "exhaustive optimum of a small instance");
  brute->add_option("--instance", brute_args.instance_path, "instance JSON file")->required();
  auto* brute_cap_opt = brute->add_option("--size-cap", brute_cap, "only sets up to this size");
  brute->add_flag("--pretty", brute_args.pretty, "indent the JSON output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate an instance or dataset");
  gen->add_option("kind", gen_args.kind, "er | synthetic-movies")->required();
  gen->add_option("--out", gen_args.out_path, "output path")->required();
  auto* gen_seed_opt = gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--n", gen_args.n, "er: node count");
  gen->add_option("--p", gen_args.p, "er: edge probability");
  gen->add_option("--cap", gen_args.cap, "er: uniform matroid size");
  gen->add_option("--degree-budget", gen_args.degree_budget, "er: degree knapsack budget");
  gen->add_option("--digit-budget", gen_args.digit_budget, "er: last-digit knapsack budget");
  gen->add_flag("--graph-only", gen_args.graph_only, "er: write the edge list, not an instance");
  gen->add_option("--count", gen_args.count, "synthetic-movies: row count");
  gen->add_option("--dim", gen_args.dim, "synthetic-movies: feature dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      if (*run_seed_opt) run_args.seed = run_seed;
      if (*o_c) run_args.ov.c_enum = run_c_enum;
      if (*o_ell) run_args.ov.ell = run_ell;
      if (*o_tc) run_args.ov.tc = run_tc;
      if (*o_rounds) run_args.ov.rounds = run_rounds;
      if (*o_eps) run_args.ov.eps = run_eps;
      if (*o_delta) run_args.ov.delta = run_delta;
      if (*o_beta) run_args.ov.beta = run_beta;
      if (*o_gamma) run_args.ov.gamma = run_gamma;
      if (*o_alpha) run_args.ov.alpha = run_alpha;
      if (*o_mu) run_args.ov.mu = run_mu;
      run_args.jobs = run_jobs;
      return cmd_run(run_args);
    }
    if (bench->parsed()) {
      if (*bench_seed_opt) bench_args.seed = bench_seed;
      if (*bench_jobs_opt) bench_args.jobs = bench_jobs;
      return cmd_bench(bench_args);
    }
    if (brute->parsed()) {
      if (*brute_cap_opt) brute_args.size_cap = brute_cap;
      return cmd_brute(brute_args);
    }
    if (gen->parsed()) {
      gen_args.seed_given = gen_seed_opt->count() > 0;
      return cmd_gen(gen_args);
    }
  } catch (const submax::DegenerateInstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const submax::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const submax::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
