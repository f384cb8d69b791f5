#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "submax/instance.hpp"
#include "submax/io.hpp"
#include "submax/result.hpp"

namespace submax {

// G(n, p) with i.i.d. uniform [0, 1) edge weights; deterministic in seed.
WeightedGraph gen_er_graph(int n, double p, std::uint64_t seed);

// Max-cut benchmark instance: cut objective, uniform matroid of size cap, one
// knapsack row charging each node its degree (budget degree_budget) and one
// charging its last decimal digit (budget digit_budget). Budgets are stored
// raw in the doc; building normalizes them to 1.
InstanceDoc maxcut_instance_doc(const WeightedGraph& g, int cap = 10, double degree_budget = 100,
                                double digit_budget = 40);
Instance build_maxcut_instance(const WeightedGraph& g, int cap = 10, double degree_budget = 100,
                               double digit_budget = 40);

struct MovieInstanceParams {
  double lambda = 4;
  int genre_cap = 2;
  int total_cap = 10;
  double rating_budget = 20;
  std::pair<double, double> year_budgets{30, 30};
  bool use_third_knapsack = true;
};

// Movie-recommendation instance over row indices 0..rows-1: diversity
// objective on feature similarity; a uniform matroid of size total_cap plus
// per-genre caps (a single partition matroid when no movie carries two genres,
// otherwise one cap matroid per genre); knapsack rows 10 - rating over
// rating_budget, |1995 - year| and |1997 - year| over the year budgets, the
// second year row only when use_third_knapsack.
InstanceDoc movie_instance_doc(const std::vector<MovieRow>& rows,
                               const MovieInstanceParams& mp = {});
Instance build_movie_instance(const std::vector<MovieRow>& rows,
                              const MovieInstanceParams& mp = {});

// Deterministic stand-in rows matching the ingestion schema.
std::vector<MovieRow> synthetic_movie_rows(int count, std::uint64_t seed, int dim = 2);

struct ErMaxcutSpec {
  int n = 100;
  double p = 0.01;
  int cap = 10;
  double degree_budget = 100;
  double digit_budget = 40;
};
struct FileInstanceSpec {
  std::string path;
};
struct SyntheticMoviesSpec {
  int count = 40;
  int dim = 2;
  MovieInstanceParams movie;
};
struct MoviesCsvSpec {
  std::string path;
  MovieInstanceParams movie;
};
using InstanceSpec = std::variant<ErMaxcutSpec, FileInstanceSpec, SyntheticMoviesSpec, MoviesCsvSpec>;

// Per-algorithm knob overrides; unset fields keep each algorithm's defaults.
struct AlgoOverrides {
  std::optional<int> c_enum;
  std::optional<int> ell;
  std::optional<int> tc;
  std::optional<int> rounds;
  std::optional<double> eps;
  std::optional<double> delta;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> alpha;
  std::optional<double> mu;
};

struct ExperimentConfig {
  InstanceSpec instance;
  std::vector<std::string> algorithms;
  // At most one sweep may be given; both empty means the default budget grid.
  std::vector<double> budget_fractions;
  std::vector<int> cardinality_caps;
  int repeats = 1;
  std::uint64_t seed = 0;
  AlgoOverrides overrides;
  int jobs = 1;

  // Throws ConfigError on unknown algorithms, duplicate names, out-of-range
  // sweep values, or repeats < 1.
  void validate() const;
};

// The ten-point grid (64 + 4i) / 100, i = 0..9.
std::vector<double> default_budget_fractions();

ExperimentConfig parse_experiment_config(const std::string& json_text);
// Relative data paths inside the config resolve against its directory.
ExperimentConfig load_experiment_config(const std::string& path);

struct BenchRecord {
  std::string sweep_kind;  // "budget" or "cap"
  double sweep_value = 0;
  std::string algo;
  int repeat = 0;
  std::optional<std::uint64_t> seed;  // randomized runs only
  double value = 0;
  long long oracle_calls = 0;
  double wall_ms = 0;
  Subset set;
};

struct ExperimentOutput {
  std::vector<BenchRecord> records;  // ordered (sweep point, algo name, repeat)
  std::vector<std::string> notes;    // skipped comparator slots etc.
};

// Dispatch by algorithm name: greedy, rp_greedy, dssgs, sprout, sproutpp.
// The seed only matters for sproutpp; jobs caps the inner worker count of
// sprout and sproutpp. rp_greedy without an explicit rounds or ell override
// defaults to the ell of the theory parameters at eps = 0.25. Unknown names,
// including the reserved "fantom" slot, raise ConfigError.
ResultRecord run_algorithm(const Instance& inst, const std::string& algo, const AlgoOverrides& ov,
                           std::optional<std::uint64_t> seed = {}, int jobs = 1);

// Runs every sweep point x algorithm x repeat. Algorithm names: greedy,
// rp_greedy, dssgs, sprout, sproutpp; "fantom" is a reserved comparator slot
// that only yields a note. Deterministic algorithms run once per sweep point;
// sproutpp runs `repeats` times with seeds derived from (seed, sweep point,
// algorithm, repeat). Identical config gives identical records.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

// Header sweep_kind,sweep_value,algo,repeat,seed,value,oracle_calls,wall_ms,set.
// The set cell is space-joined ids; the seed cell is empty for deterministic
// runs; wall_ms is 0 unless include_timing.
std::string records_to_csv(const std::vector<BenchRecord>& records, bool include_timing = false);

struct SummaryRow {
  std::string sweep_kind;
  double sweep_value = 0;
  std::string algo;
  int runs = 0;
  double mean_value = 0;
  double std_value = 0;  // sample standard deviation, 0 for a single run
  double mean_calls = 0;
};

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);
std::string summary_to_jsonl(const std::vector<SummaryRow>& rows);
void print_summary_table(const std::vector<SummaryRow>& rows, std::ostream& out);

}  // namespace submax
