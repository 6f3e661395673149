#include "grasslab/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "grasslab/error.hpp"

namespace grasslab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

long long int_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_integer()) bad(std::string("key \"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::size_t count_of(const Json& j, const char* key) {
  const long long v = int_of(j, key);
  if (v < 0) bad(std::string("key \"") + key + "\" must be nonnegative");
  return static_cast<std::size_t>(v);
}

Field field_from(const Json& j) {
  const long long p = int_of(j, "p");
  try {
    return Field(static_cast<int>(p));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Matrix rows_from(const Field& f, const Json& rows, std::size_t cols, const char* what) {
  if (!rows.is_array()) bad(std::string(what) + " must be an array of rows");
  Matrix m(f, 0, cols);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cols) bad(std::string(what) + " row has the wrong length");
    std::vector<Elem> v;
    for (const auto& e : row) {
      if (!e.is_number_integer()) bad(std::string(what) + " entries must be integers");
      const long long x = e.get<long long>();
      if (x < 0 || x >= f.p()) bad(std::string(what) + " entry " + std::to_string(x) + " is not reduced mod p");
      v.push_back(static_cast<Elem>(x));
    }
    m.append_row(v);
  }
  return m;
}

Json rows_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Matrix& m) {
  Json j;
  j["p"] = m.p();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = rows_json(m);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const Field f = field_from(j);
  const std::size_t rows = count_of(j, "rows");
  const std::size_t cols = count_of(j, "cols");
  Matrix m = rows_from(f, field_of(j, "entries"), cols, "matrix");
  if (m.rows() != rows) bad("matrix row count differs from \"rows\"");
  return m;
}

Json to_json(const Subspace& s) {
  Json j;
  j["p"] = s.field().p();
  j["n"] = s.ambient();
  j["dim"] = s.dim();
  j["basis"] = rows_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const Field f = field_from(j);
  const std::size_t n = count_of(j, "n");
  const std::size_t dim = count_of(j, "dim");
  Subspace s = Subspace::span(rows_from(f, field_of(j, "basis"), n, "basis"));
  if (s.dim() != dim) bad("basis spans dimension " + std::to_string(s.dim()) + ", \"dim\" says " + std::to_string(dim));
  return s;
}

Json to_json(const CompPair& a) {
  Json j;
  j["S"] = to_json(a.first);
  j["U"] = to_json(a.second);
  return j;
}

CompPair pair_from_json(const Json& j) {
  Subspace s = subspace_from_json(field_of(j, "S"));
  Subspace u = subspace_from_json(field_of(j, "U"));
  if (!is_valid_pair(s, u)) bad("\"S\" and \"U\" are not complementary");
  return CompPair{std::move(s), std::move(u)};
}

Json to_json(const Frame& frame) {
  Json j = Json::array();
  for (const auto& l : frame.lines()) j.push_back(to_json(l));
  return j;
}

Json to_json(const BaseSubset& base) {
  Json j;
  j["frame"] = to_json(base.frame());
  j["k"] = base.k();
  Json members = Json::array();
  for (const auto& m : base.members()) members.push_back(to_json(m));
  j["members"] = std::move(members);
  return j;
}

Json to_json(const InducerReport& r) {
  Json j;
  j["kind"] = std::string(to_string(r.kind));
  j["matrix"] = to_json(r.matrix);
  if (r.self_dual_layer) j["op_component"] = r.op_component;
  j["seed"] = r.seed;
  j["residual"] = r.residual;
  j["p"] = r.p;
  j["n"] = r.n;
  j["k"] = r.k;
  j["verification"] = r.exhaustive ? "exhaustive" : "sampled";
  j["checked"] = r.checked;
  j["lifting_checked"] = r.lifting_checked;
  j["scalar_note"] = InducerReport::scalar_note;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const TwoLayerOverlapReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["p"] = r.p;
  j["c1_formula"] = r.c1_formula;
  j["c1_enum"] = r.c1_enum;
  j["c2_formula"] = r.c2_formula;
  j["c2_enum"] = r.c2_enum;
  j["c1"] = r.c1_enum;
  j["c2"] = r.c2_enum;
  j["orbit_invariant"] = r.orbit_invariant;
  j["formulas_match"] = r.formulas_match;
  j["distinguishable"] = r.distinguishable;
  j["c2_exceeds_c1"] = r.c2_exceeds_c1;
  j["matches_claim"] = r.matches_claim();
  return j;
}

Json to_json(const LayerOverlapReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["p"] = r.p;
  Json counts = Json::array();
  for (const auto& c : r.counts) {
    Json e;
    e["i"] = c.distance;
    e["formula"] = c.formula;
    e["enumerated"] = c.enumerated;
    e["pairs_checked"] = c.pairs_checked;
    e["invariant"] = c.invariant;
    counts.push_back(std::move(e));
  }
  j["counts"] = std::move(counts);
  j["c1_positive"] = r.c1_positive;
  j["c1_distinct"] = r.c1_distinct;
  j["formulas_match"] = r.formulas_match;
  j["matches_claim"] = r.matches_claim();
  return j;
}

Json to_json(const CommutativityReport& r) {
  Json j;
  j["cliques"] = r.cliques;
  j["base_subsets"] = r.base_subsets;
  j["equal"] = r.equal;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  return j;
}

Json to_json(const LiftingReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["p"] = r.p;
  j["expected"] = r.self_dual_layer ? "{alpha, alpha^op}" : "{alpha}";
  j["samples"] = r.samples;
  j["holds"] = r.holds;
  j["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  j["pass"] = r.pass();
  return j;
}

Json to_json(const CrosswiseWitness& w) {
  Json j;
  j["alpha"] = to_json(w.alpha);
  j["beta1"] = to_json(w.betas.beta1);
  j["beta2"] = to_json(w.betas.beta2);
  j["intersection_size"] = w.intersection.size();
  Json mixed = Json::array();
  for (const auto& x : w.mixed) mixed.push_back(to_json(x));
  j["mixed"] = std::move(mixed);
  return j;
}

Json to_json(const SweepVerdict& v) {
  Json j;
  j["pass"] = v.pass;
  j["frames_checked"] = v.frames_checked;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

Json to_json(const MapFile& file) {
  Json j;
  j["p"] = file.params.field.p();
  j["n"] = file.params.n;
  j["k"] = file.params.k;
  j["total"] = file.total;
  Json map = Json::array();
  for (const auto& [from, to] : file.entries) {
    Json e;
    e["from"] = to_json(from);
    e["to"] = to_json(to);
    map.push_back(std::move(e));
  }
  j["map"] = std::move(map);
  return j;
}

MapFile map_file_from_json(const Json& j) {
  MapFile file{LayerParams{field_from(j), count_of(j, "n"), count_of(j, "k")}, {}, true};
  if (j.contains("total")) {
    if (!j.at("total").is_boolean()) bad("\"total\" must be a boolean");
    file.total = j.at("total").get<bool>();
  }
  const Json& map = field_of(j, "map");
  if (!map.is_array()) bad("\"map\" must be an array");
  for (const auto& e : map) file.entries.emplace_back(pair_from_json(field_of(e, "from")), pair_from_json(field_of(e, "to")));
  return file;
}

MapOracle load_map_oracle(const MapFile& file) { return table_oracle(file.params, file.entries, file.total); }

std::string pair_label(const CompPair& a) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : to_json(a).dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_dot(const CommutativityGraph& g) {
  std::ostringstream out;
  out << "graph commutativity {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) out << "  v" << i << " [label=\"" << pair_label(g.vertices[i]) << "\"];\n";
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (auto w : g.adjacency[i])
      if (w > i) out << "  v" << i << " -- v" << w << ";\n";
  out << "}\n";
  return out.str();
}

Json adjacency_json(const CommutativityGraph& g) {
  Json j;
  Json labels = Json::array();
  for (const auto& v : g.vertices) labels.push_back(pair_label(v));
  j["vertices"] = std::move(labels);
  j["adjacency"] = g.adjacency;
  return j;
}

}  // namespace grasslab
