#include "submax/bench.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "submax/baselines.hpp"
#include "submax/errors.hpp"
#include "submax/parallel.hpp"
#include "submax/rng.hpp"
#include "submax/sprout.hpp"
#include "submax/sproutpp.hpp"

namespace submax {
namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr const char* kKnownAlgos[] = {"greedy", "rp_greedy", "dssgs", "sprout", "sproutpp",
                                       "fantom"};

bool known_algo(const std::string& name) {
  for (const char* a : kKnownAlgos) {
    if (name == a) return true;
  }
  return false;
}

}  // namespace

WeightedGraph gen_er_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ConfigError("er graph: n must be positive");
  if (!(p >= 0 && p <= 1)) throw ConfigError("er graph: p must lie in [0, 1]");
  WeightedGraph g;
  g.n = n;
  RngStream rng(seed, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) g.edges.push_back({u, v, rng.next_unit()});
    }
  }
  return g;
}

InstanceDoc maxcut_instance_doc(const WeightedGraph& g, int cap, double degree_budget,
                                double digit_budget) {
  g.validate();
  if (!(degree_budget > 0) || !(digit_budget > 0)) {
    throw ConfigError("maxcut instance: budgets must be positive");
  }
  InstanceDoc doc;
  doc.n = g.n;
  doc.objective = CutObjectiveSpec{g};
  doc.matroids.push_back(UniformMatroidSpec{cap});
  const auto deg = g.degrees();
  std::vector<double> degree_cost(g.n), digit_cost(g.n);
  for (int v = 0; v < g.n; ++v) {
    degree_cost[v] = deg[v];
    digit_cost[v] = v % 10;
  }
  doc.knapsack.costs = {std::move(degree_cost), std::move(digit_cost)};
  doc.knapsack.budgets = {degree_budget, digit_budget};
  return doc;
}

Instance build_maxcut_instance(const WeightedGraph& g, int cap, double degree_budget,
                               double digit_budget) {
  return build_instance(maxcut_instance_doc(g, cap, degree_budget, digit_budget));
}

InstanceDoc movie_instance_doc(const std::vector<MovieRow>& rows, const MovieInstanceParams& mp) {
  if (rows.empty()) throw ConfigError("movie instance: no rows");
  if (!(mp.lambda > 0)) throw ConfigError("movie instance: lambda must be positive");
  if (!(mp.rating_budget > 0) || !(mp.year_budgets.first > 0) || !(mp.year_budgets.second > 0)) {
    throw ConfigError("movie instance: budgets must be positive");
  }
  const int n = static_cast<int>(rows.size());
  InstanceDoc doc;
  doc.n = n;

  DiversityObjectiveSpec obj;
  obj.lambda = mp.lambda;
  obj.features.reserve(rows.size());
  for (const auto& row : rows) obj.features.push_back(row.features);
  doc.objective = std::move(obj);

  doc.matroids.push_back(UniformMatroidSpec{mp.total_cap});
  std::map<std::string, std::vector<int>> genre_members;
  bool multi_genre = false;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> genres = rows[i].genres;
    std::sort(genres.begin(), genres.end());
    genres.erase(std::unique(genres.begin(), genres.end()), genres.end());
    if (genres.size() > 1) multi_genre = true;
    for (const auto& genre : genres) genre_members[genre].push_back(i);
  }
  if (!genre_members.empty()) {
    if (multi_genre) {
      // Overlapping genre classes: each genre's cap is its own matroid.
      for (const auto& [name, members] : genre_members) {
        doc.matroids.push_back(PartitionMatroidSpec{{members}, {mp.genre_cap}});
      }
    } else {
      PartitionMatroidSpec part;
      for (const auto& [name, members] : genre_members) {
        part.parts.push_back(members);
        part.caps.push_back(mp.genre_cap);
      }
      doc.matroids.push_back(std::move(part));
    }
  }

  std::vector<double> rating_cost(n), year1_cost(n), year2_cost(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i].rating < 0 || rows[i].rating > 10) {
      throw ConfigError("movie instance: rating outside [0, 10] at row " + std::to_string(i));
    }
    rating_cost[i] = 10 - rows[i].rating;
    year1_cost[i] = std::abs(1995 - rows[i].year);
    year2_cost[i] = std::abs(1997 - rows[i].year);
  }
  doc.knapsack.costs = {std::move(rating_cost), std::move(year1_cost)};
  doc.knapsack.budgets = {mp.rating_budget, mp.year_budgets.first};
  if (mp.use_third_knapsack) {
    doc.knapsack.costs.push_back(std::move(year2_cost));
    doc.knapsack.budgets.push_back(mp.year_budgets.second);
  }
  return doc;
}

Instance build_movie_instance(const std::vector<MovieRow>& rows, const MovieInstanceParams& mp) {
  return build_instance(movie_instance_doc(rows, mp));
}

std::vector<MovieRow> synthetic_movie_rows(int count, std::uint64_t seed, int dim) {
  if (count < 1) throw ConfigError("synthetic movies: count must be positive");
  if (dim < 1) throw ConfigError("synthetic movies: dim must be positive");
  static const char* kGenres[] = {"action", "comedy", "crime",   "drama",
                                  "fantasy", "horror", "romance", "scifi"};
  constexpr int kGenreCount = 8;
  RngStream rng(seed, 1);
  std::vector<MovieRow> rows(count);
  for (int i = 0; i < count; ++i) {
    MovieRow& row = rows[i];
    row.id = i + 1;
    row.rating = static_cast<double>(rng.next_below(101)) / 10.0;
    row.year = 1980 + static_cast<int>(rng.next_below(41));
    const int genre_count = 1 + static_cast<int>(rng.next_below(3));
    int idx[kGenreCount];
    std::iota(idx, idx + kGenreCount, 0);
    for (int t = 0; t < genre_count; ++t) {
      const int j = t + static_cast<int>(rng.next_below(kGenreCount - t));
      std::swap(idx[t], idx[j]);
      row.genres.push_back(kGenres[idx[t]]);
    }
    std::sort(row.genres.begin(), row.genres.end());
    row.features.reserve(dim);
    for (int t = 0; t < dim; ++t) row.features.push_back(rng.next_unit());
  }
  return rows;
}

void ExperimentConfig::validate() const {
  if (repeats < 1) throw ConfigError("experiment: repeats must be >= 1");
  if (jobs < 0) throw ConfigError("experiment: jobs must be >= 0");
  if (algorithms.empty()) throw ConfigError("experiment: no algorithms given");
  for (const auto& name : algorithms) {
    if (!known_algo(name)) throw ConfigError("experiment: unknown algorithm \"" + name + "\"");
  }
  auto names = algorithms;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
    throw ConfigError("experiment: duplicate algorithm name");
  }
  if (!budget_fractions.empty() && !cardinality_caps.empty()) {
    throw ConfigError("experiment: give only one of budget_fractions and cardinality_caps");
  }
  for (const double f : budget_fractions) {
    if (!(f > 0 && f <= 1)) throw ConfigError("experiment: budget fractions must lie in (0, 1]");
  }
  for (const int c : cardinality_caps) {
    if (c < 1) throw ConfigError("experiment: cardinality caps must be >= 1");
  }
}

std::vector<double> default_budget_fractions() {
  std::vector<double> out;
  out.reserve(10);
  for (int i = 0; i < 10; ++i) out.push_back((64 + 4 * i) / 100.0);
  return out;
}

namespace {

MovieInstanceParams parse_movie_params(const json& j) {
  MovieInstanceParams mp;
  if (j.contains("lambda")) mp.lambda = j["lambda"].get<double>();
  if (j.contains("genre_cap")) mp.genre_cap = j["genre_cap"].get<int>();
  if (j.contains("total_cap")) mp.total_cap = j["total_cap"].get<int>();
  if (j.contains("rating_budget")) mp.rating_budget = j["rating_budget"].get<double>();
  if (j.contains("year_budgets")) {
    const json& yb = j["year_budgets"];
    if (!yb.is_array() || yb.size() != 2) {
      throw ConfigError("experiment: year_budgets must be [real, real]");
    }
    mp.year_budgets = {yb[0].get<double>(), yb[1].get<double>()};
  }
  if (j.contains("third_knapsack")) mp.use_third_knapsack = j["third_knapsack"].get<bool>();
  return mp;
}

InstanceSpec parse_instance_spec(const json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("experiment: \"instance\" needs a \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "er-maxcut") {
    ErMaxcutSpec s;
    if (j.contains("n")) s.n = j["n"].get<int>();
    if (j.contains("p")) s.p = j["p"].get<double>();
    if (j.contains("cap")) s.cap = j["cap"].get<int>();
    if (j.contains("degree_budget")) s.degree_budget = j["degree_budget"].get<double>();
    if (j.contains("digit_budget")) s.digit_budget = j["digit_budget"].get<double>();
    return s;
  }
  if (kind == "file") {
    if (!j.contains("path")) throw ConfigError("experiment: file instance needs \"path\"");
    return FileInstanceSpec{j["path"].get<std::string>()};
  }
  if (kind == "synthetic-movies") {
    SyntheticMoviesSpec s;
    if (j.contains("count")) s.count = j["count"].get<int>();
    if (j.contains("dim")) s.dim = j["dim"].get<int>();
    s.movie = parse_movie_params(j);
    return s;
  }
  if (kind == "movies-csv") {
    if (!j.contains("path")) throw ConfigError("experiment: movies-csv instance needs \"path\"");
    MoviesCsvSpec s;
    s.path = j["path"].get<std::string>();
    s.movie = parse_movie_params(j);
    return s;
  }
  throw ConfigError("experiment: unknown instance kind \"" + kind + "\"");
}

AlgoOverrides parse_overrides(const json& j) {
  AlgoOverrides ov;
  if (j.contains("c_enum")) ov.c_enum = j["c_enum"].get<int>();
  if (j.contains("ell")) ov.ell = j["ell"].get<int>();
  if (j.contains("tc")) ov.tc = j["tc"].get<int>();
  if (j.contains("rounds")) ov.rounds = j["rounds"].get<int>();
  if (j.contains("eps")) ov.eps = j["eps"].get<double>();
  if (j.contains("delta")) ov.delta = j["delta"].get<double>();
  if (j.contains("beta")) ov.beta = j["beta"].get<double>();
  if (j.contains("gamma")) ov.gamma = j["gamma"].get<double>();
  if (j.contains("alpha")) ov.alpha = j["alpha"].get<double>();
  if (j.contains("mu")) ov.mu = j["mu"].get<double>();
  return ov;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("experiment: ") + e.what());
  }
  try {
    if (!j.is_object()) throw ConfigError("experiment: expected a JSON object");
    ExperimentConfig cfg;
    if (!j.contains("instance")) throw ConfigError("experiment: missing \"instance\"");
    cfg.instance = parse_instance_spec(j["instance"]);
    if (!j.contains("algorithms")) throw ConfigError("experiment: missing \"algorithms\"");
    cfg.algorithms = j["algorithms"].get<std::vector<std::string>>();
    if (j.contains("sweep")) {
      const json& sw = j["sweep"];
      if (sw.contains("budget_fractions")) {
        cfg.budget_fractions = sw["budget_fractions"].get<std::vector<double>>();
      }
      if (sw.contains("cardinality_caps")) {
        cfg.cardinality_caps = sw["cardinality_caps"].get<std::vector<int>>();
      }
    }
    if (j.contains("repeats")) cfg.repeats = j["repeats"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("params")) cfg.overrides = parse_overrides(j["params"]);
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment: ") + e.what());
  }
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  ExperimentConfig cfg;
  try {
    cfg = parse_experiment_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  const auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&](std::string& p) {
    if (!p.empty() && std::filesystem::path(p).is_relative()) {
      p = (base / p).string();
    }
  };
  if (auto* f = std::get_if<FileInstanceSpec>(&cfg.instance)) resolve(f->path);
  if (auto* m = std::get_if<MoviesCsvSpec>(&cfg.instance)) resolve(m->path);
  return cfg;
}

namespace {

InstanceDoc make_base_doc(const InstanceSpec& spec, std::uint64_t seed) {
  return std::visit(
      overloaded{
          [&](const ErMaxcutSpec& s) {
            return maxcut_instance_doc(gen_er_graph(s.n, s.p, seed), s.cap, s.degree_budget,
                                       s.digit_budget);
          },
          [&](const FileInstanceSpec& s) { return load_instance_doc(s.path); },
          [&](const SyntheticMoviesSpec& s) {
            return movie_instance_doc(synthetic_movie_rows(s.count, seed, s.dim), s.movie);
          },
          [&](const MoviesCsvSpec& s) { return movie_instance_doc(load_movie_csv(s.path), s.movie); },
      },
      spec);
}

InstanceDoc doc_for_sweep(const InstanceDoc& base, bool cap_sweep, double sweep_value) {
  InstanceDoc doc = base;
  if (cap_sweep) {
    bool found = false;
    for (auto& m : doc.matroids) {
      if (auto* u = std::get_if<UniformMatroidSpec>(&m)) {
        u->cap = static_cast<int>(sweep_value);
        found = true;
      }
    }
    if (!found) throw ConfigError("cap sweep: instance has no uniform matroid to vary");
  } else {
    doc.knapsack = base.knapsack.scaled_budgets(sweep_value);
  }
  return doc;
}

SproutParams sprout_params_from(const AlgoOverrides& ov, int jobs) {
  SproutParams p;
  if (ov.c_enum) p.c_enum = *ov.c_enum;
  if (ov.eps) p.eps = *ov.eps;
  p.delta = ov.delta;
  p.ell = ov.ell;
  p.beta = ov.beta;
  p.gamma = ov.gamma;
  p.jobs = jobs;
  return p;
}

}  // namespace

ResultRecord run_algorithm(const Instance& inst, const std::string& algo, const AlgoOverrides& ov,
                           std::optional<std::uint64_t> seed, int jobs) {
  if (algo == "greedy") return greedy(inst);
  if (algo == "rp_greedy") {
    int rounds;
    if (ov.rounds) {
      rounds = *ov.rounds;
    } else if (ov.ell) {
      rounds = *ov.ell;
    } else {
      rounds = theory_params(inst.matroid_count(), inst.knapsack_count(), 0.25).ell;
    }
    return repeated_greedy(inst, rounds);
  }
  if (algo == "dssgs") return density_search_sgs(inst, sprout_params_from(ov, 1));
  if (algo == "sprout") return sprout(inst, sprout_params_from(ov, jobs));
  if (algo == "sproutpp") {
    SproutPPParams p;
    p.seed = seed.value_or(0);
    if (ov.tc) p.t_counter = ov.tc;
    if (ov.alpha) p.alpha = *ov.alpha;
    if (ov.mu) p.mu = *ov.mu;
    if (ov.ell) p.ell = *ov.ell;
    if (ov.eps) p.eps = *ov.eps;
    if (ov.delta) p.delta = ov.delta;
    if (ov.beta) p.beta = *ov.beta;
    if (ov.gamma) p.gamma = *ov.gamma;
    p.jobs = jobs;
    return sproutpp(inst, p).record;
  }
  throw ConfigError("unknown algorithm \"" + algo + "\"");
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentOutput out;
  const InstanceDoc base = make_base_doc(cfg.instance, cfg.seed);

  const bool cap_sweep = !cfg.cardinality_caps.empty();
  std::vector<double> sweep_vals;
  if (cap_sweep) {
    sweep_vals.assign(cfg.cardinality_caps.begin(), cfg.cardinality_caps.end());
  } else if (cfg.budget_fractions.empty()) {
    sweep_vals = default_budget_fractions();
  } else {
    sweep_vals = cfg.budget_fractions;
  }
  const std::string kind = cap_sweep ? "cap" : "budget";

  std::vector<int> algo_order(cfg.algorithms.size());
  std::iota(algo_order.begin(), algo_order.end(), 0);
  std::sort(algo_order.begin(), algo_order.end(),
            [&](int a, int b) { return cfg.algorithms[a] < cfg.algorithms[b]; });

  struct Task {
    int sweep_idx;
    int algo_idx;
    int repeat;
    std::optional<std::uint64_t> seed;
  };
  std::vector<Task> tasks;
  for (int si = 0; si < static_cast<int>(sweep_vals.size()); ++si) {
    for (const int ai : algo_order) {
      const std::string& algo = cfg.algorithms[ai];
      if (algo == "fantom") {
        if (si == 0) {
          out.notes.push_back("fantom: comparator slot reserved, not implemented; skipping");
        }
        continue;
      }
      if (algo == "sproutpp") {
        for (int r = 0; r < cfg.repeats; ++r) {
          tasks.push_back({si, ai, r, derive_seed(cfg.seed, si, ai, r)});
        }
      } else {
        tasks.push_back({si, ai, 0, std::nullopt});
      }
    }
  }

  out.records.resize(tasks.size());
  parallel_for(cfg.jobs, static_cast<int>(tasks.size()), [&](int t) {
    const Task& task = tasks[t];
    const Instance inst = build_instance(doc_for_sweep(base, cap_sweep, sweep_vals[task.sweep_idx]));
    const ResultRecord rr =
        run_algorithm(inst, cfg.algorithms[task.algo_idx], cfg.overrides, task.seed, 1);
    BenchRecord& br = out.records[t];
    br.sweep_kind = kind;
    br.sweep_value = sweep_vals[task.sweep_idx];
    br.algo = cfg.algorithms[task.algo_idx];
    br.repeat = task.repeat;
    br.seed = task.seed;
    br.value = rr.value;
    br.oracle_calls = rr.oracle_calls;
    br.wall_ms = rr.wall_ms;
    br.set = rr.set;
  });
  return out;
}

std::string records_to_csv(const std::vector<BenchRecord>& records, bool include_timing) {
  std::ostringstream out;
  out << "sweep_kind,sweep_value,algo,repeat,seed,value,oracle_calls,wall_ms,set\n";
  for (const auto& r : records) {
    out << r.sweep_kind << ',' << format_double(r.sweep_value) << ',' << r.algo << ',' << r.repeat
        << ',';
    if (r.seed) out << *r.seed;
    out << ',' << format_double(r.value) << ',' << r.oracle_calls << ','
        << format_double(include_timing ? r.wall_ms : 0.0) << ',' << ids_to_string(r.set) << '\n';
  }
  return out.str();
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  std::vector<SummaryRow> rows;
  std::map<std::tuple<std::string, double, std::string>, size_t> slot;
  std::vector<std::vector<std::pair<double, double>>> samples;  // (value, calls) per row
  for (const auto& r : records) {
    const auto key = std::make_tuple(r.sweep_kind, r.sweep_value, r.algo);
    auto it = slot.find(key);
    if (it == slot.end()) {
      it = slot.emplace(key, rows.size()).first;
      SummaryRow row;
      row.sweep_kind = r.sweep_kind;
      row.sweep_value = r.sweep_value;
      row.algo = r.algo;
      rows.push_back(std::move(row));
      samples.emplace_back();
    }
    samples[it->second].push_back({r.value, static_cast<double>(r.oracle_calls)});
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& vs = samples[i];
    const int k = static_cast<int>(vs.size());
    rows[i].runs = k;
    double sum = 0, calls = 0;
    for (const auto& [v, c] : vs) {
      sum += v;
      calls += c;
    }
    rows[i].mean_value = sum / k;
    rows[i].mean_calls = calls / k;
    if (k > 1) {
      double ss = 0;
      for (const auto& [v, c] : vs) ss += (v - rows[i].mean_value) * (v - rows[i].mean_value);
      rows[i].std_value = std::sqrt(ss / (k - 1));
    }
  }
  return rows;
}

std::string summary_to_jsonl(const std::vector<SummaryRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    json j;
    j["sweep_kind"] = r.sweep_kind;
    j["sweep_value"] = r.sweep_value;
    j["algo"] = r.algo;
    j["runs"] = r.runs;
    j["mean_value"] = r.mean_value;
    j["std_value"] = r.std_value;
    j["mean_calls"] = r.mean_calls;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void print_summary_table(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << std::left << std::setw(8) << "sweep" << std::setw(12) << "value" << std::setw(10) << "algo"
      << std::right << std::setw(6) << "runs" << std::setw(14) << "mean" << std::setw(12) << "std"
      << std::setw(12) << "calls" << '\n';
  for (const auto& r : rows) {
    out << std::left << std::setw(8) << r.sweep_kind << std::setw(12) << format_double(r.sweep_value)
        << std::setw(10) << r.algo << std::right << std::setw(6) << r.runs << std::setw(14)
        << format_double(r.mean_value) << std::setw(12) << format_double(r.std_value)
        << std::setw(12) << format_double(r.mean_calls) << '\n';
  }
}

}  // namespace submax
