#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "submax/instance.hpp"
#include "submax/objectives.hpp"
#include "submax/result.hpp"

namespace submax {

// Declarative instance description, round-trippable through JSON:
// {
//   "n": int,
//   "objective": {"kind": "cut", "edges": [[u, v, w], ...]}
//              | {"kind": "diversity", "similarity": [[...], ...]}
//              | {"kind": "diversity", "features": [[...], ...], "lambda": real}
//              | {"kind": "modular", "weights": [...]},
//   "matroids": [{"kind": "uniform", "cap": int}
//              | {"kind": "partition", "parts": [[ids], ...], "caps": [ints]}, ...],
//   "knapsacks": {"costs": [[...], ...], "budgets": [...]}
// }
struct CutObjectiveSpec {
  WeightedGraph graph;
};
struct DiversityObjectiveSpec {
  std::optional<SimilarityMatrix> similarity;  // either this...
  std::vector<std::vector<double>> features;   // ...or these
  double lambda = 4.0;
};
struct ModularObjectiveSpec {
  std::vector<double> weights;
};
using ObjectiveSpec = std::variant<CutObjectiveSpec, DiversityObjectiveSpec, ModularObjectiveSpec>;

struct InstanceDoc {
  int n = 0;
  ObjectiveSpec objective;
  std::vector<MatroidSpec> matroids;
  Knapsack knapsack;
};

// Validates everything it touches; throws ConfigError with a reason.
Instance build_instance(const InstanceDoc& doc);

InstanceDoc parse_instance_doc(const std::string& json_text);
InstanceDoc load_instance_doc(const std::string& path);
Instance load_instance(const std::string& path);
std::string instance_doc_to_json(const InstanceDoc& doc);
void save_instance_doc(const InstanceDoc& doc, const std::string& path);

// Plain-text graph format: first line "n <count>", then one "u v weight" per
// line.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph load_graph(const std::string& path);
void write_graph(const WeightedGraph& g, std::ostream& out);
void save_graph(const WeightedGraph& g, const std::string& path);

// Movie table: header "id,rating,year,genres,f1,...,fd"; genres are
// semicolon-separated inside the field; ratings lie in [0, 10].
struct MovieRow {
  int id = 0;
  double rating = 0;
  int year = 0;
  std::vector<std::string> genres;
  std::vector<double> features;
};
std::vector<MovieRow> parse_movie_csv(std::istream& in);
std::vector<MovieRow> load_movie_csv(const std::string& path);
void write_movie_csv(const std::vector<MovieRow>& rows, std::ostream& out);
void save_movie_csv(const std::vector<MovieRow>& rows, const std::string& path);

// One result as a JSON object. Timing is written as 0 unless requested, so
// seeded reruns serialize identically.
std::string result_to_json(const ResultRecord& rec, bool pretty = false,
                           bool include_timing = false);

// Shortest round-trip decimal form; the deterministic float format used by
// every text artifact.
std::string format_double(double x);

}  // namespace submax
