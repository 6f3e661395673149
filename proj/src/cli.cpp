#include "grasslab/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"
#include "grasslab/json_io.hpp"
#include "grasslab/random.hpp"

namespace grasslab::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string command;
  std::string what;
  int p = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  bool has_n = false;
  bool has_k = false;
  bool count = false;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  std::size_t samples = 0;
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 14;
  bool random_frame = false;
  bool with_graph = false;
  std::string map_file;
  bool random_linear = false;
  bool random_duality = false;
  bool identity = false;
  std::size_t op_twist = 0;
  bool swap = false;
};

/// A command's product: a JSON document plus the exit status it implies.
struct Outcome {
  Json doc;
  int code = kOk;
  std::string raw;  // preformatted output (DOT, plain counts); wins over doc
};

void require_n(const RunConfig& c) {
  if (!c.has_n || c.n < 1) throw Error(ErrorCode::ParamOutOfRange, "--n is required and must be positive");
}

void require_nk(const RunConfig& c) {
  require_n(c);
  if (!c.has_k) throw Error(ErrorCode::ParamOutOfRange, "--k is required");
  if (c.k < 1 || c.k + 1 > c.n) throw Error(ErrorCode::ParamOutOfRange, "parameters need 1 <= k <= n - 1");
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string render_text(const Json& doc) {
  if (!doc.is_object()) return text_value(doc) + "\n";
  std::ostringstream out;
  for (const auto& [key, v] : doc.items()) out << key << ": " << text_value(v) << "\n";
  return out.str();
}

std::string render(const RunConfig& c, const Outcome& o) {
  if (!o.raw.empty()) return o.raw;
  if (c.format == "json") return o.doc.dump(2) + "\n";
  return render_text(o.doc);
}

// ---------------------------------------------------------------- cache

std::string cache_path(const std::string& dir, int p, std::size_t n, std::size_t k) {
  return (fs::path(dir) / ("grassmannian-p" + std::to_string(p) + "-n" + std::to_string(n) + "-k" +
                           std::to_string(k) + "-v" + std::to_string(kCacheFormatVersion) + ".json"))
      .string();
}

std::optional<std::vector<Subspace>> read_cache(const std::string& path, const Field& f, std::size_t n, std::size_t k) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Json j = Json::parse(buf.str());
    if (j.value("format_version", -1) != kCacheFormatVersion || j.value("kind", "") != "grassmannian" ||
        j.value("p", -1) != f.p() || j.value("n", std::size_t{0}) != n || j.value("k", std::size_t{0}) != k)
      return std::nullopt;
    std::vector<Subspace> out;
    for (const auto& r : j.at("records")) out.push_back(subspace_from_json(r));
    if (out.size() != j.at("count").get<std::size_t>() || out.size() != grassmannian_size(n, k, f)) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void write_cache(const std::string& path, const Field& f, std::size_t n, std::size_t k,
                 const std::vector<Subspace>& records) {
  Json j;
  j["format_version"] = kCacheFormatVersion;
  j["kind"] = "grassmannian";
  j["p"] = f.p();
  j["n"] = n;
  j["k"] = k;
  j["count"] = records.size();
  Json rec = Json::array();
  for (const auto& s : records) rec.push_back(to_json(s));
  j["records"] = std::move(rec);
  fs::create_directories(fs::path(path).parent_path());
  write_file_atomic(path, j.dump() + "\n");
}

std::vector<Subspace> grassmannian_records(const RunConfig& c, const Field& f) {
  const std::uint64_t size = grassmannian_size(c.n, c.k, f);
  if (size > c.budget)
    throw Error(ErrorCode::BudgetExceeded,
                "Grassmannian holds " + std::to_string(size) + " subspaces, budget is " + std::to_string(c.budget));
  const std::string dir = resolve_cache_dir(c.cache_dir);
  if (dir.empty()) return enumerate_grassmannian(f, c.n, c.k, c.budget);
  const std::string path = cache_path(dir, f.p(), c.n, c.k);
  if (auto hit = read_cache(path, f, c.n, c.k)) return *hit;
  auto records = enumerate_grassmannian(f, c.n, c.k, c.budget);
  write_cache(path, f, c.n, c.k, records);
  return records;
}

// ----------------------------------------------------------------- enum

Json header(const RunConfig& c) {
  Json j;
  j["kind"] = c.what;
  j["p"] = c.p;
  j["n"] = c.n;
  if (c.what != "frames") j["k"] = c.k;
  return j;
}

Outcome count_outcome(const RunConfig& c, std::uint64_t count) {
  Outcome o;
  o.doc = header(c);
  o.doc["count"] = count;
  if (c.format != "json") o.raw = std::to_string(count) + "\n";
  return o;
}

Outcome cmd_enum(const RunConfig& c) {
  const Field f(c.p);
  if (c.what == "frames") {
    require_n(c);
    if (c.count) {
      std::uint64_t count = 0;
      for_each_frame(f, c.n, [&](const Frame&) { ++count; }, c.budget);
      return count_outcome(c, count);
    }
    Outcome o;
    o.doc = header(c);
    Json frames = Json::array();
    std::string text;
    for_each_frame(
        f, c.n,
        [&](const Frame& fr) {
          frames.push_back(to_json(fr));
          std::string line;
          for (const auto& l : fr.lines()) line += (line.empty() ? "" : " ") + subspace_key(l);
          text += line + "\n";
        },
        c.budget);
    o.doc["count"] = frames.size();
    o.doc["frames"] = std::move(frames);
    if (c.format != "json") o.raw = text;
    return o;
  }
  require_nk(c);
  if (c.what == "grassmannian") {
    const auto records = grassmannian_records(c, f);
    if (c.count) return count_outcome(c, records.size());
    Outcome o;
    o.doc = header(c);
    o.doc["count"] = records.size();
    Json list = Json::array();
    std::string text;
    for (const auto& s : records) {
      list.push_back(to_json(s));
      text += subspace_key(s) + "\n";
    }
    o.doc["subspaces"] = std::move(list);
    if (c.format != "json") o.raw = text;
    return o;
  }
  if (c.what == "pairs") {
    if (c.count) {
      std::uint64_t count = 0;
      for_each_pair(f, c.n, c.k, [&](const CompPair&) { ++count; }, c.budget);
      return count_outcome(c, count);
    }
    Outcome o;
    o.doc = header(c);
    Json list = Json::array();
    std::string text;
    for_each_pair(
        f, c.n, c.k,
        [&](const CompPair& a) {
          list.push_back(to_json(a));
          text += pair_key(a) + "\n";
        },
        c.budget);
    o.doc["count"] = list.size();
    o.doc["pairs"] = std::move(list);
    if (c.format != "json") o.raw = text;
    return o;
  }
  // base-subset
  Rng rng(c.seed);
  const Frame frame = c.random_frame ? random_frame(f, c.n, rng) : standard_frame(f, c.n);
  const BaseSubset base(frame, c.k);
  if (c.count) return count_outcome(c, base.size());
  Outcome o;
  o.doc = to_json(base);
  if (c.format != "json") {
    for (const auto& m : base.members()) o.raw += pair_key(m) + "\n";
  }
  return o;
}

// --------------------------------------------------------------- verify

Outcome verify_lemma2(const RunConfig& c, const Field& f) {
  const BaseSubset base(standard_frame(f, c.n), c.k);
  Outcome o;
  o.doc["n"] = c.n;
  o.doc["k"] = c.k;
  o.doc["p"] = c.p;
  o.doc["base_size"] = base.size();
  const auto expected = static_cast<std::size_t>(binomial(static_cast<std::int64_t>(c.n), 2));
  o.doc["expected_count"] = expected;
  try {
    const auto sets = maximal_inexact_subsets(base);
    o.doc["count"] = sets.size();
    std::set<std::size_t> sizes;
    Json list = Json::array();
    for (const auto& s : sets) {
      sizes.insert(s.members.size());
      Json e;
      e["beta"] = to_json(s.beta);
      e["members"] = s.members;
      list.push_back(std::move(e));
    }
    o.doc["subset_sizes"] = std::vector<std::size_t>(sizes.begin(), sizes.end());
    o.doc["certified"] = true;
    o.doc["matches_claim"] = sets.size() == expected;
    o.doc["subsets"] = std::move(list);
    o.code = sets.size() == expected ? kOk : kDiscrepancy;
  } catch (const std::logic_error& e) {
    o.doc["certified"] = false;
    o.doc["matches_claim"] = false;
    o.doc["discrepancy"] = e.what();
    o.code = kDiscrepancy;
  }
  return o;
}

Outcome verify_involutions(const RunConfig& c, const Field& f) {
  Outcome o;
  if (c.format == "dot") {
    o.raw = to_dot(build_commutativity_graph(f, c.n, c.k, c.budget));
    return o;
  }
  const auto report = verify_commutativity_correspondence(f, c.n, c.k, c.budget);
  o.doc = to_json(report);

  // Transport checks under the pair <-> involution correspondence.
  Rng rng(c.seed);
  const Matrix l = random_invertible(f, c.n, rng);
  const Matrix d = random_invertible(f, c.n, rng);
  const MapOracle lin = induced_from_linear(l, c.k);
  const MapOracle dual = induced_from_duality(d, c.k);
  std::size_t elements = 0, bijective = 0, conj_ok = 0, dual_ok = 0;
  for_each_pair(
      f, c.n, c.k,
      [&](const CompPair& a) {
        ++elements;
        const Involution u = pair_to_involution(a);
        if (involution_to_pair(u) == a) ++bijective;
        if (involution_to_pair(conjugate(u, l)) == lin(a)) ++conj_ok;
        if (involution_to_pair(dual_conjugate(u, d)) == dual(a)) ++dual_ok;
      },
      c.budget);
  o.doc["elements"] = elements;
  o.doc["bijection"] = bijective == elements;
  o.doc["conjugate_agrees"] = conj_ok == elements;
  o.doc["dual_conjugate_agrees"] = dual_ok == elements;
  o.doc["seed"] = c.seed;
  const bool ok = report.equal && report.cliques == report.base_subsets && bijective == elements &&
                  conj_ok == elements && dual_ok == elements;
  o.doc["matches_claim"] = ok;
  if (c.with_graph) o.doc["graph"] = adjacency_json(build_commutativity_graph(f, c.n, c.k, c.budget));
  o.code = ok ? kOk : kDiscrepancy;
  return o;
}

Outcome verify_lifting(const RunConfig& c, const Field& f) {
  Outcome o;
  const std::size_t samples = c.samples ? c.samples : 100;
  if (c.k > c.n - c.k) throw Error(ErrorCode::ParamOutOfRange, "lifting checks need k <= n - k");
  const bool self_dual = 2 * c.k == c.n;
  bool ok = true;
  if (self_dual && c.k == 2) {
    // Only the crosswise failure configuration exists to exhibit here.
    const auto w = find_crosswise_witness(f, c.n, samples, c.seed);
    o.doc["crosswise_witness"] = w ? to_json(*w) : Json(nullptr);
    ok = w.has_value();
  } else {
    const auto r = verify_lifting_identity(f, c.n, c.k, samples, c.seed);
    o.doc = to_json(r);
    ok = r.pass();
  }
  if (self_dual && frame_count(c.n, static_cast<std::uint64_t>(f.p())) <= c.budget) {
    const auto sym = verify_opposite_symmetry(f, c.n, c.budget);
    Json s;
    s["frames"] = sym.frames;
    s["elements"] = sym.elements;
    s["holds"] = sym.holds;
    s["pass"] = sym.pass();
    o.doc["opposite_symmetry"] = std::move(s);
    ok = ok && sym.pass();
  }
  o.doc["matches_claim"] = ok;
  o.code = ok ? kOk : kDiscrepancy;
  return o;
}

Outcome cmd_verify(const RunConfig& c) {
  require_nk(c);
  const Field f(c.p);
  if (c.what == "lemma2") return verify_lemma2(c, f);
  if (c.what == "lemma3") {
    const auto r = verify_two_layer_overlaps(c.n, c.k, f);
    Outcome o{to_json(r), r.matches_claim() ? kOk : kDiscrepancy, {}};
    if (!r.c2_exceeds_c1) o.doc["discrepancy"] = "c2 > c1 fails: c1 = " + std::to_string(r.c1_enum) + ", c2 = " + std::to_string(r.c2_enum);
    return o;
  }
  if (c.what == "lemma6") {
    const auto r = verify_layer_overlaps(c.n, c.k, f);
    return Outcome{to_json(r), r.matches_claim() ? kOk : kDiscrepancy, {}};
  }
  if (c.what == "involutions") return verify_involutions(c, f);
  return verify_lifting(c, f);
}

// ---------------------------------------------------------- generators

struct Generated {
  MapOracle oracle;
  std::optional<InducerKind> kind;
  std::optional<Matrix> matrix;
  std::vector<std::string> op_classes;
};

Generated make_generator(const RunConfig& c) {
  require_nk(c);
  const Field f(c.p);
  const int sources = int(c.random_linear) + int(c.random_duality) + int(c.identity);
  if (sources != 1)
    throw Error(ErrorCode::BadInput, "choose exactly one of --random-linear, --random-duality, --identity");
  Rng rng(c.seed);
  std::optional<Generated> g;
  if (c.identity) {
    const Matrix id = Matrix::identity(f, c.n);
    g = Generated{induced_from_linear(id, c.k), InducerKind::Linear, id, {}};
  } else {
    const Matrix m = random_invertible(f, c.n, rng);
    const InducerKind kind = c.random_linear ? InducerKind::Linear : InducerKind::Duality;
    g = Generated{inducer_oracle(kind, m, c.k), kind, normalize_scalar(m), {}};
  }
  if (c.op_twist > 0) {
    if (c.n != 2 * c.k) throw Error(ErrorCode::NotSelfDualLayer, "--op-twist needs n = 2k");
    const auto x = random_opposite_classes(f, c.n, c.op_twist, c.seed + 1);
    std::set<std::string> keys;
    for (const auto& a : x) keys.insert(class_key(a));
    g->op_classes.assign(keys.begin(), keys.end());
    g->oracle = op_twist(g->oracle, x);
  }
  return *g;
}

MapFile table_of(const MapOracle& f, std::uint64_t budget) {
  MapFile file{f.params(), {}, true};
  for_each_pair(
      f.field(), f.n(), f.k(), [&](const CompPair& a) { file.entries.emplace_back(a, f(a)); }, budget);
  return file;
}

Outcome cmd_map(const RunConfig& c) {
  Generated g = make_generator(c);
  MapFile file = table_of(g.oracle, c.budget);
  if (c.swap) {
    // Exchange the images of two random pairs; the result is still a
    // bijection but no longer carries base subsets to base subsets.
    Rng rng(c.seed + 2);
    const std::size_t size = file.entries.size();
    if (size < 2) throw Error(ErrorCode::ParamOutOfRange, "layer too small to swap two images");
    const std::size_t a = rng.below(size);
    std::size_t b = rng.below(size - 1);
    if (b >= a) ++b;
    std::swap(file.entries[a].second, file.entries[b].second);
  }
  Outcome o;
  o.doc = to_json(file);
  o.raw = o.doc.dump() + "\n";
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cmd_reconstruct(const RunConfig& c) {
  std::optional<Generated> gen;
  std::optional<MapOracle> oracle;
  if (!c.map_file.empty()) {
    if (c.random_linear || c.random_duality || c.identity || c.op_twist > 0)
      throw Error(ErrorCode::BadInput, "--map cannot be combined with a generator");
    oracle = load_map_oracle(map_file_from_json(parse_json(read_file(c.map_file))));
  } else {
    gen = make_generator(c);
    oracle = gen->oracle;
  }
  ReconstructOptions opts;
  opts.seed = c.seed;
  if (c.samples) opts.samples = c.samples;
  opts.exhaustive_budget = std::min(c.exhaustive_limit, c.budget);

  Outcome o;
  try {
    const InducerReport r = reconstruct_inducer(*oracle, opts);
    o.doc = to_json(r);
    if (gen) {
      Json g;
      g["kind"] = std::string(to_string(*gen->kind));
      g["matrix"] = to_json(*gen->matrix);
      g["op_classes"] = gen->op_classes;
      o.doc["generator"] = std::move(g);
      o.doc["matches_generator"] =
          r.kind == *gen->kind && r.matrix == *gen->matrix && r.op_component == gen->op_classes;
    }
    o.code = r.residual == 0 ? kOk : kNotInduced;
  } catch (const NotInducedError& e) {
    o.doc["error"] = "NotInduced";
    o.doc["message"] = e.what();
    o.doc["witness"] = e.witness();
    o.code = kNotInduced;
  }
  return o;
}

// ---------------------------------------------------------------- cache

Outcome cmd_cache(const RunConfig& c) {
  const std::string dir = resolve_cache_dir(c.cache_dir);
  if (dir.empty()) throw Error(ErrorCode::BadInput, "no cache directory: pass --cache-dir or set GRASSLAB_CACHE");
  std::vector<std::string> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir)) {
      const std::string name = e.path().filename().string();
      if (name.rfind("grassmannian-", 0) == 0 && e.path().extension() == ".json") files.push_back(name);
    }
  std::sort(files.begin(), files.end());
  Outcome o;
  o.doc["cache_dir"] = dir;
  o.doc["files"] = files;
  if (c.what == "clear") {
    for (const auto& name : files) fs::remove(fs::path(dir) / name);
    o.doc["removed"] = files.size();
  }
  return o;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::NotInduced:
    case ErrorCode::AmbiguousMatch:
    case ErrorCode::NotABaseSubset: return kNotInduced;
    case ErrorCode::DegenerateParams: return kDegenerate;
    default: return kBadArgs;
  }
}

void add_params(CLI::App* s, RunConfig& c, bool with_k = true) {
  s->add_option("--p", c.p, "field prime (2..13)");
  s->add_option("--n", c.n, "ambient dimension")->each([&c](const std::string&) { c.has_n = true; });
  if (with_k) s->add_option("--k", c.k, "layer")->each([&c](const std::string&) { c.has_k = true; });
  s->add_option("--budget", c.budget, "largest number of objects to materialize")->check(CLI::PositiveNumber);
  s->add_option("--seed", c.seed, "sampling seed");
  s->add_option("--format", c.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  s->add_option("--output", c.output, "write the artifact to this file");
  s->add_option("--cache-dir", c.cache_dir, "enumeration cache directory");
}

void add_generator(CLI::App* s, RunConfig& c) {
  s->add_flag("--random-linear", c.random_linear, "random invertible linear inducer");
  s->add_flag("--random-duality", c.random_duality, "random duality inducer");
  s->add_flag("--identity", c.identity, "identity map");
  s->add_option("--op-twist", c.op_twist, "swap this many random opposite classes (n = 2k)");
}

}  // namespace

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("GRASSLAB_CACHE"); env && *env) return env;
  return {};
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::BadInput, "write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"grasslab: exact complementary-subspace geometry over prime fields", "grasslab"};
  app.require_subcommand(1);

  auto* en = app.add_subcommand("enum", "enumerate subspaces, pairs, frames or a base subset");
  en->add_option("what", c.what)->required()->check(CLI::IsMember({"grassmannian", "pairs", "frames", "base-subset"}));
  add_params(en, c);
  en->add_flag("--count", c.count, "print only the number of objects");
  en->add_flag("--random-frame", c.random_frame, "base subset of a seeded random frame");

  auto* ve = app.add_subcommand("verify", "check a counting or structural claim by enumeration");
  ve->add_option("what", c.what)->required()->check(
      CLI::IsMember({"lemma2", "lemma3", "lemma6", "involutions", "lifting"}));
  add_params(ve, c);
  ve->add_option("--samples", c.samples, "sampled elements for the lifting checks");
  ve->add_flag("--with-graph", c.with_graph, "include the commutativity adjacency list");

  auto* re = app.add_subcommand("reconstruct", "recover the inducer of a base-subset-preserving map");
  add_params(re, c);
  add_generator(re, c);
  re->add_option("--map", c.map_file, "map file (table oracle)");
  re->add_option("--samples", c.samples, "sampled pairs for verification (default 1000)");
  re->add_option("--exhaustive-limit", c.exhaustive_limit, "verify every pair when the layer is no larger");

  auto* ma = app.add_subcommand("map", "write a generated map as a table file");
  add_params(ma, c);
  add_generator(ma, c);
  ma->add_flag("--swap", c.swap, "exchange the images of two random pairs");

  auto* ca = app.add_subcommand("cache", "list or clear the enumeration cache");
  ca->add_option("what", c.what)->required()->check(CLI::IsMember({"list", "clear"}));
  ca->add_option("--cache-dir", c.cache_dir, "enumeration cache directory");
  ca->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  for (auto* s : app.get_subcommands()) c.command = s->get_name();

  try {
    Outcome o;
    if (c.command == "enum")
      o = cmd_enum(c);
    else if (c.command == "verify")
      o = cmd_verify(c);
    else if (c.command == "reconstruct")
      o = cmd_reconstruct(c);
    else if (c.command == "map")
      o = cmd_map(c);
    else
      o = cmd_cache(c);
    const std::string text = render(c, o);
    if (c.output.empty())
      out << text;
    else
      write_file_atomic(c.output, text);
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadArgs;
  }
}

}  // namespace grasslab::cli
