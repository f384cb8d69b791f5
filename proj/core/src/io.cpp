#include "submax/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "submax/errors.hpp"

namespace submax {
namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spew(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw ConfigError("write failed: " + path);
}

const json& need(const json& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(ctx + ": missing \"" + key + "\"");
  return *it;
}

int as_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ConfigError(ctx + ": expected an integer");
  return j.get<int>();
}

double as_double(const json& j, const std::string& ctx) {
  if (!j.is_number()) throw ConfigError(ctx + ": expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ConfigError(ctx + ": expected a string");
  return j.get<std::string>();
}

std::vector<double> as_double_vec(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ConfigError(ctx + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_double(j[i], ctx + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> as_int_vec(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ConfigError(ctx + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_int(j[i], ctx + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ObjectiveSpec parse_objective(const json& j, int n) {
  if (!j.is_object()) throw ConfigError("objective: expected an object");
  const std::string kind = as_string(need(j, "kind", "objective"), "objective.kind");
  if (kind == "cut") {
    CutObjectiveSpec spec;
    spec.graph.n = n;
    const json& edges = need(j, "edges", "cut objective");
    if (!edges.is_array()) throw ConfigError("cut objective: \"edges\" must be an array");
    spec.graph.edges.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
      const std::string ctx = "cut objective edge " + std::to_string(i);
      const json& e = edges[i];
      if (!e.is_array() || e.size() != 3) throw ConfigError(ctx + ": expected [u, v, w]");
      spec.graph.edges.push_back(
          {as_int(e[0], ctx), as_int(e[1], ctx), as_double(e[2], ctx)});
    }
    return spec;
  }
  if (kind == "diversity") {
    DiversityObjectiveSpec spec;
    const bool has_sim = j.contains("similarity");
    const bool has_feat = j.contains("features");
    if (has_sim == has_feat) {
      throw ConfigError(
          "diversity objective: give exactly one of \"similarity\" and \"features\"");
    }
    if (has_sim) {
      const json& rows = j["similarity"];
      if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw ConfigError("diversity objective: \"similarity\" must have n rows");
      }
      SimilarityMatrix sim;
      sim.n = n;
      sim.s.reserve(static_cast<size_t>(n) * n);
      for (size_t i = 0; i < rows.size(); ++i) {
        auto row = as_double_vec(rows[i], "similarity row " + std::to_string(i));
        if (static_cast<int>(row.size()) != n) {
          throw ConfigError("similarity row " + std::to_string(i) + ": expected n entries");
        }
        sim.s.insert(sim.s.end(), row.begin(), row.end());
      }
      spec.similarity = std::move(sim);
    } else {
      const json& rows = j["features"];
      if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
        throw ConfigError("diversity objective: \"features\" must have n rows");
      }
      for (size_t i = 0; i < rows.size(); ++i) {
        spec.features.push_back(as_double_vec(rows[i], "feature row " + std::to_string(i)));
      }
      if (j.contains("lambda")) spec.lambda = as_double(j["lambda"], "objective.lambda");
      if (!(spec.lambda > 0)) throw ConfigError("diversity objective: lambda must be positive");
    }
    return spec;
  }
  if (kind == "modular") {
    ModularObjectiveSpec spec;
    spec.weights = as_double_vec(need(j, "weights", "modular objective"), "modular weights");
    return spec;
  }
  throw ConfigError("objective: unknown kind \"" + kind + "\"");
}

MatroidSpec parse_matroid(const json& j, size_t idx) {
  const std::string ctx = "matroids[" + std::to_string(idx) + "]";
  if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
  const std::string kind = as_string(need(j, "kind", ctx), ctx + ".kind");
  if (kind == "uniform") {
    return UniformMatroidSpec{as_int(need(j, "cap", ctx), ctx + ".cap")};
  }
  if (kind == "partition") {
    PartitionMatroidSpec spec;
    const json& parts = need(j, "parts", ctx);
    if (!parts.is_array()) throw ConfigError(ctx + ".parts: expected an array");
    for (size_t p = 0; p < parts.size(); ++p) {
      spec.parts.push_back(as_int_vec(parts[p], ctx + ".parts[" + std::to_string(p) + "]"));
    }
    spec.caps = as_int_vec(need(j, "caps", ctx), ctx + ".caps");
    return spec;
  }
  throw ConfigError(ctx + ": unknown kind \"" + kind + "\"");
}

Knapsack parse_knapsack(const json& j) {
  if (!j.is_object()) throw ConfigError("knapsacks: expected an object");
  Knapsack kn;
  const json& costs = need(j, "costs", "knapsacks");
  if (!costs.is_array()) throw ConfigError("knapsacks.costs: expected an array of rows");
  for (size_t r = 0; r < costs.size(); ++r) {
    kn.costs.push_back(as_double_vec(costs[r], "knapsack row " + std::to_string(r)));
  }
  kn.budgets = as_double_vec(need(j, "budgets", "knapsacks"), "knapsacks.budgets");
  return kn;
}

json objective_to_json(const ObjectiveSpec& spec) {
  return std::visit(
      overloaded{
          [](const CutObjectiveSpec& s) {
            json edges = json::array();
            for (const auto& e : s.graph.edges) edges.push_back({e.u, e.v, e.w});
            return json{{"kind", "cut"}, {"edges", std::move(edges)}};
          },
          [](const DiversityObjectiveSpec& s) {
            if (s.similarity) {
              json rows = json::array();
              for (int i = 0; i < s.similarity->n; ++i) {
                json row = json::array();
                for (int j2 = 0; j2 < s.similarity->n; ++j2) row.push_back(s.similarity->at(i, j2));
                rows.push_back(std::move(row));
              }
              return json{{"kind", "diversity"}, {"similarity", std::move(rows)}};
            }
            return json{{"kind", "diversity"},
                        {"features", s.features},
                        {"lambda", s.lambda}};
          },
          [](const ModularObjectiveSpec& s) {
            return json{{"kind", "modular"}, {"weights", s.weights}};
          },
      },
      spec);
}

json matroid_to_json(const MatroidSpec& spec) {
  return std::visit(
      overloaded{
          [](const UniformMatroidSpec& s) { return json{{"kind", "uniform"}, {"cap", s.cap}}; },
          [](const PartitionMatroidSpec& s) {
            return json{{"kind", "partition"}, {"parts", s.parts}, {"caps", s.caps}};
          },
      },
      spec);
}

std::string trim_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int_field(const std::string& text, const std::string& ctx) {
  int v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) throw ConfigError(ctx + ": bad integer \"" + text + "\"");
  return v;
}

double parse_double_field(const std::string& text, const std::string& ctx) {
  double v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) throw ConfigError(ctx + ": bad number \"" + text + "\"");
  return v;
}

}  // namespace

Instance build_instance(const InstanceDoc& doc) {
  if (doc.n <= 0) throw ConfigError("instance: n must be positive");
  Instance inst;
  inst.n = doc.n;
  inst.objective = std::visit(
      overloaded{
          [&](const CutObjectiveSpec& s) -> std::shared_ptr<const ValueOracle> {
            if (s.graph.n != doc.n) throw ConfigError("instance: graph size disagrees with n");
            return std::make_shared<CutObjective>(std::make_shared<WeightedGraph>(s.graph));
          },
          [&](const DiversityObjectiveSpec& s) -> std::shared_ptr<const ValueOracle> {
            if (s.similarity) {
              if (s.similarity->n != doc.n) {
                throw ConfigError("instance: similarity size disagrees with n");
              }
              return std::make_shared<DiversityObjective>(
                  std::make_shared<SimilarityMatrix>(*s.similarity));
            }
            if (static_cast<int>(s.features.size()) != doc.n) {
              throw ConfigError("instance: feature row count disagrees with n");
            }
            return std::make_shared<DiversityObjective>(std::make_shared<SimilarityMatrix>(
                similarity_from_features(s.features, s.lambda)));
          },
          [&](const ModularObjectiveSpec& s) -> std::shared_ptr<const ValueOracle> {
            if (static_cast<int>(s.weights.size()) != doc.n) {
              throw ConfigError("instance: weight count disagrees with n");
            }
            return std::make_shared<ModularObjective>(s.weights);
          },
      },
      doc.objective);
  if (doc.matroids.empty()) throw ConfigError("instance: at least one matroid is required");
  std::vector<MatroidPtr> members;
  members.reserve(doc.matroids.size());
  for (const auto& spec : doc.matroids) members.push_back(build_matroid(spec, doc.n));
  inst.matroids = MatroidIntersection(std::move(members));
  if (doc.knapsack.rows() == 0) throw ConfigError("instance: at least one knapsack row is required");
  doc.knapsack.validate();
  if (doc.knapsack.ground_size() != doc.n) {
    throw ConfigError("instance: knapsack width disagrees with n");
  }
  inst.knapsack = doc.knapsack.normalized();
  inst.validate();
  return inst;
}

InstanceDoc parse_instance_doc(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("instance: expected a JSON object");
  InstanceDoc doc;
  doc.n = as_int(need(j, "n", "instance"), "instance.n");
  doc.objective = parse_objective(need(j, "objective", "instance"), doc.n);
  const json& matroids = need(j, "matroids", "instance");
  if (!matroids.is_array()) throw ConfigError("instance: \"matroids\" must be an array");
  for (size_t i = 0; i < matroids.size(); ++i) {
    doc.matroids.push_back(parse_matroid(matroids[i], i));
  }
  doc.knapsack = parse_knapsack(need(j, "knapsacks", "instance"));
  return doc;
}

InstanceDoc load_instance_doc(const std::string& path) {
  try {
    return parse_instance_doc(slurp(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  try {
    return build_instance(load_instance_doc(path));
  } catch (const ConfigError& e) {
    // load_instance_doc already prefixed the path for parse failures.
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ConfigError(path + ": " + msg);
  }
}

std::string instance_doc_to_json(const InstanceDoc& doc) {
  json j;
  j["n"] = doc.n;
  j["objective"] = objective_to_json(doc.objective);
  json matroids = json::array();
  for (const auto& spec : doc.matroids) matroids.push_back(matroid_to_json(spec));
  j["matroids"] = std::move(matroids);
  j["knapsacks"] = json{{"costs", doc.knapsack.costs}, {"budgets", doc.knapsack.budgets}};
  return j.dump(2) + "\n";
}

void save_instance_doc(const InstanceDoc& doc, const std::string& path) {
  spew(path, instance_doc_to_json(doc));
}

WeightedGraph parse_graph(std::istream& in) {
  WeightedGraph g;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      if (!(ls >> tag >> g.n) || tag != "n") {
        throw ConfigError("graph line " + std::to_string(lineno) + ": expected \"n <count>\"");
      }
      have_header = true;
      continue;
    }
    WeightedGraph::Edge e;
    if (!(ls >> e.u >> e.v >> e.w)) {
      throw ConfigError("graph line " + std::to_string(lineno) + ": expected \"u v w\"");
    }
    g.edges.push_back(e);
  }
  if (!have_header) throw ConfigError("graph: missing \"n <count>\" header");
  g.validate();
  return g;
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_graph(const WeightedGraph& g, std::ostream& out) {
  out << "n " << g.n << "\n";
  for (const auto& e : g.edges) {
    out << e.u << " " << e.v << " " << format_double(e.w) << "\n";
  }
}

void save_graph(const WeightedGraph& g, const std::string& path) {
  std::ostringstream ss;
  write_graph(g, ss);
  spew(path, ss.str());
}

std::vector<MovieRow> parse_movie_csv(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw ConfigError("movies: empty file");
  ++lineno;
  auto header = split(trim_cr(line), ',');
  if (header.size() < 4 || header[0] != "id" || header[1] != "rating" || header[2] != "year" ||
      header[3] != "genres") {
    throw ConfigError("movies: header must start with \"id,rating,year,genres\"");
  }
  const size_t dim = header.size() - 4;
  std::vector<MovieRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim_cr(line);
    if (line.empty()) continue;
    const std::string ctx = "movies line " + std::to_string(lineno);
    auto fields = split(line, ',');
    if (fields.size() != header.size()) {
      throw ConfigError(ctx + ": expected " + std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    }
    MovieRow row;
    row.id = parse_int_field(fields[0], ctx);
    row.rating = parse_double_field(fields[1], ctx);
    if (row.rating < 0 || row.rating > 10) {
      throw ConfigError(ctx + ": rating " + fields[1] + " outside [0, 10]");
    }
    row.year = parse_int_field(fields[2], ctx);
    if (!fields[3].empty()) {
      for (auto& genre : split(fields[3], ';')) {
        if (genre.empty()) throw ConfigError(ctx + ": empty genre name");
        row.genres.push_back(std::move(genre));
      }
    }
    row.features.reserve(dim);
    for (size_t t = 0; t < dim; ++t) {
      row.features.push_back(parse_double_field(fields[4 + t], ctx));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MovieRow> load_movie_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return parse_movie_csv(in);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void write_movie_csv(const std::vector<MovieRow>& rows, std::ostream& out) {
  const size_t dim = rows.empty() ? 0 : rows[0].features.size();
  out << "id,rating,year,genres";
  for (size_t t = 0; t < dim; ++t) out << ",f" << (t + 1);
  out << "\n";
  for (const auto& row : rows) {
    if (row.features.size() != dim) {
      throw ConfigError("movies: feature counts differ between rows");
    }
    out << row.id << "," << format_double(row.rating) << "," << row.year << ",";
    for (size_t gi = 0; gi < row.genres.size(); ++gi) {
      if (gi) out << ";";
      out << row.genres[gi];
    }
    for (const double v : row.features) out << "," << format_double(v);
    out << "\n";
  }
}

void save_movie_csv(const std::vector<MovieRow>& rows, const std::string& path) {
  std::ostringstream ss;
  write_movie_csv(rows, ss);
  spew(path, ss.str());
}

std::string result_to_json(const ResultRecord& rec, bool pretty, bool include_timing) {
  json j;
  j["algo"] = rec.algo;
  j["set"] = rec.set;
  j["value"] = rec.value;
  j["oracle_calls"] = rec.oracle_calls;
  j["wall_ms"] = include_timing ? rec.wall_ms : 0.0;
  if (rec.seed) j["seed"] = *rec.seed;
  if (rec.visited) j["visited"] = *rec.visited;
  if (rec.filter_passes) j["filter_passes"] = *rec.filter_passes;
  return pretty ? j.dump(2) : j.dump();
}

std::string format_double(double x) {
  std::array<char, 64> buf;
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), p);
}

}  // namespace submax
