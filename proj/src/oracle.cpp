#include "grasslab/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"
#include "grasslab/random.hpp"

namespace grasslab {

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::Table: return "table";
    case OracleKind::InducedLinear: return "induced-linear";
    case OracleKind::InducedDuality: return "induced-duality";
    case OracleKind::OpTwisted: return "op-twisted";
    case OracleKind::Derived: return "derived";
  }
  return "unknown";
}

MapOracle::MapOracle(OracleKind kind, LayerParams params, Eval forward, Eval backward)
    : kind_(kind),
      params_(params),
      forward_(std::move(forward)),
      backward_(std::move(backward)),
      probes_(std::make_shared<const std::vector<CompPair>>()) {
  if (params_.k < 1 || params_.k + 1 > params_.n)
    throw Error(ErrorCode::ParamOutOfRange, "oracle layer must satisfy 1 <= k <= n - 1");
}

void MapOracle::require_layer(const CompPair& a) const {
  if (a.ambient() != params_.n || a.k() != params_.k || !(a.field() == params_.field))
    throw Error(ErrorCode::DimMismatch, "pair of layer " + std::to_string(a.k()) + " in dimension " +
                                            std::to_string(a.ambient()) + " given to an oracle on layer " +
                                            std::to_string(params_.k) + " in dimension " + std::to_string(params_.n));
}

CompPair MapOracle::operator()(const CompPair& a) const {
  require_layer(a);
  return forward_(a);
}

CompPair MapOracle::inverse(const CompPair& a) const {
  if (!backward_) throw Error(ErrorCode::Unsupported, "oracle has no inverse evaluation");
  require_layer(a);
  return backward_(a);
}

MapOracle MapOracle::inverse_oracle() const {
  if (!backward_) throw Error(ErrorCode::Unsupported, "oracle has no inverse evaluation");
  MapOracle out(OracleKind::Derived, params_, backward_, forward_);
  out.probes_ = probes_;
  return out;
}

MapOracle MapOracle::with_probes(std::vector<CompPair> probes) const {
  MapOracle out = *this;
  out.probes_ = std::make_shared<const std::vector<CompPair>>(std::move(probes));
  return out;
}

MapOracle MapOracle::with_matrix(Matrix m) const {
  MapOracle out = *this;
  out.matrix_ = std::move(m);
  return out;
}

MapOracle identity_oracle(LayerParams params) {
  auto id = [](const CompPair& a) { return a; };
  return MapOracle(OracleKind::Table, params, id, id);
}

namespace {

void require_invertible_square(const Matrix& m, const char* what) {
  if (!m.square() || !is_invertible(m)) throw Error(ErrorCode::Singular, std::string(what) + " must be invertible");
}

}  // namespace

MapOracle induced_from_linear(const Matrix& l, std::size_t k) {
  require_invertible_square(l, "inducing matrix");
  const Matrix l_inv = invert(l);
  auto fwd = [l](const CompPair& a) { return CompPair{image(l, a.first), image(l, a.second)}; };
  auto bwd = [l_inv](const CompPair& a) { return CompPair{image(l_inv, a.first), image(l_inv, a.second)}; };
  return MapOracle(OracleKind::InducedLinear, {l.field(), l.rows(), k}, fwd, bwd).with_matrix(l);
}

MapOracle induced_from_duality(const Matrix& d, std::size_t k) {
  require_invertible_square(d, "duality matrix");
  const Matrix d_inv = invert(d);
  auto fwd = [d](const CompPair& a) {
    return CompPair{annihilator(image(d, a.second)), annihilator(image(d, a.first))};
  };
  // (S', U') = (ann(D·U), ann(D·S)) gives S = D⁻¹·ann(U') and U = D⁻¹·ann(S').
  auto bwd = [d_inv](const CompPair& a) {
    return CompPair{image(d_inv, annihilator(a.second)), image(d_inv, annihilator(a.first))};
  };
  return MapOracle(OracleKind::InducedDuality, {d.field(), d.rows(), k}, fwd, bwd).with_matrix(d);
}

MapOracle op_twist(const MapOracle& inner, const std::vector<CompPair>& x) {
  if (inner.n() != 2 * inner.k())
    throw Error(ErrorCode::NotSelfDualLayer, "op twist needs n = 2k, got n = " + std::to_string(inner.n()) +
                                                 ", k = " + std::to_string(inner.k()));
  auto set = std::make_shared<std::unordered_set<CompPair>>(x.begin(), x.end());
  for (const auto& a : *set) {
    if (a.ambient() != inner.n() || a.k() != inner.k())
      throw Error(ErrorCode::DimMismatch, "op twist set holds a pair outside the layer");
    if (!set->count(opposite(a)))
      throw Error(ErrorCode::NotOppositeClosed, "op twist set lacks the opposite of " + pair_key(a));
  }
  std::shared_ptr<const std::unordered_set<CompPair>> swapped = set;
  auto op = [swapped](const CompPair& a) { return swapped->count(a) ? opposite(a) : a; };
  MapOracle::Eval fwd = [inner, op](const CompPair& a) { return inner(op(a)); };
  MapOracle::Eval bwd;
  if (inner.invertible()) bwd = [inner, op](const CompPair& a) { return op(inner.inverse(a)); };

  std::vector<CompPair> probes(set->begin(), set->end());
  std::sort(probes.begin(), probes.end());
  probes.insert(probes.end(), inner.probes().begin(), inner.probes().end());
  return MapOracle(OracleKind::OpTwisted, inner.params(), fwd, bwd).with_probes(std::move(probes));
}

MapOracle table_oracle(LayerParams params, const std::vector<std::pair<CompPair, CompPair>>& entries, bool total) {
  auto forward = std::make_shared<std::unordered_map<CompPair, CompPair>>();
  auto backward = std::make_shared<std::unordered_map<CompPair, CompPair>>();
  for (const auto& [from, to] : entries) {
    for (const CompPair* a : {&from, &to})
      if (a->ambient() != params.n || a->k() != params.k || !(a->field() == params.field))
        throw Error(ErrorCode::BadInput, "table entry " + pair_key(*a) + " lies outside the layer");
    if (!forward->emplace(from, to).second)
      throw Error(ErrorCode::BadInput, "table lists " + pair_key(from) + " twice");
    if (!backward->emplace(to, from).second)
      throw Error(ErrorCode::BadInput, "table sends two pairs to " + pair_key(to));
  }
  if (total) {
    const std::uint64_t size = pair_space_size(params.n, params.k, params.field);
    if (forward->size() != size)
      throw Error(ErrorCode::BadInput, "total table has " + std::to_string(forward->size()) + " entries, layer has " +
                                           std::to_string(size));
  } else {
    for (const auto& [to, from] : *backward)
      if (!forward->count(to))
        throw Error(ErrorCode::BadInput, "partial table moves a pair onto " + pair_key(to) +
                                             ", which the table does not move away");
  }
  std::shared_ptr<const std::unordered_map<CompPair, CompPair>> fw = forward, bw = backward;
  auto look = [total](const std::unordered_map<CompPair, CompPair>& m, const CompPair& a) {
    auto it = m.find(a);
    if (it != m.end()) return it->second;
    if (total) throw Error(ErrorCode::BadInput, "pair " + pair_key(a) + " missing from a total table");
    return a;
  };
  MapOracle::Eval f = [fw, look](const CompPair& a) { return look(*fw, a); };
  MapOracle::Eval b = [bw, look](const CompPair& a) { return look(*bw, a); };
  std::vector<CompPair> probes;
  if (!total)
    for (const auto& e : entries) probes.push_back(e.first);
  return MapOracle(OracleKind::Table, params, f, b).with_probes(std::move(probes));
}

MapOracle opposite_conjugate(const MapOracle& f) {
  LayerParams params = f.params();
  params.k = f.n() - f.k();
  MapOracle::Eval fwd = [f](const CompPair& a) { return opposite(f(opposite(a))); };
  MapOracle::Eval bwd;
  if (f.invertible()) bwd = [f](const CompPair& a) { return opposite(f.inverse(opposite(a))); };
  std::vector<CompPair> probes;
  for (const auto& a : f.probes()) probes.push_back(opposite(a));
  return MapOracle(OracleKind::Derived, params, fwd, bwd).with_probes(std::move(probes));
}

std::vector<CompPair> random_opposite_classes(const Field& field, std::size_t n, std::size_t count,
                                              std::uint64_t seed) {
  if (n % 2 != 0) throw Error(ErrorCode::NotSelfDualLayer, "opposite classes stay in one layer only when n = 2k");
  const std::size_t k = n / 2;
  const std::uint64_t classes = pair_space_size(n, k, field) / 2;
  if (count > classes)
    throw Error(ErrorCode::ParamOutOfRange, "asked for " + std::to_string(count) + " opposite classes, layer has " +
                                                std::to_string(classes));
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<CompPair> out;
  while (seen.size() < count) {
    const CompPair a = random_pair(field, n, k, rng);
    if (!seen.insert(class_key(a)).second) continue;
    out.push_back(a);
    out.push_back(opposite(a));
  }
  return out;
}

std::vector<CompPair> image_of(const MapOracle& f, const std::vector<CompPair>& members) {
  std::vector<CompPair> out;
  out.reserve(members.size());
  for (const auto& a : members) out.push_back(f(a));
  return out;
}

Frame recover_frame(const std::vector<CompPair>& image) {
  if (image.empty()) throw Error(ErrorCode::NotABaseSubset, "empty set of pairs");
  const Field& f = image.front().field();
  const std::size_t n = image.front().ambient();
  const std::size_t k = image.front().k();
  for (const auto& a : image)
    if (a.ambient() != n || a.k() != k || !(a.field() == f))
      throw Error(ErrorCode::NotABaseSubset, "pairs come from different layers");
  if (image.size() != static_cast<std::size_t>(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))))
    throw Error(ErrorCode::NotABaseSubset, "set has " + std::to_string(image.size()) + " pairs, a base subset has " +
                                               std::to_string(binomial(n, k)));
  // Split V by every component; for a base subset the atoms end up being the
  // frame lines.
  std::vector<Subspace> atoms{Subspace::whole(f, n)};
  for (const auto& a : image) {
    std::vector<Subspace> next;
    for (const auto& atom : atoms)
      for (const Subspace* comp : {&a.first, &a.second}) {
        Subspace part = intersect(atom, *comp);
        if (!part.is_zero()) next.push_back(std::move(part));
      }
    atoms = std::move(next);
  }
  if (atoms.size() != n || !is_frame(atoms))
    throw Error(ErrorCode::NotABaseSubset, "components do not cut the space into a frame");
  Frame frame(std::move(atoms));
  const BaseSubset base(frame, k);
  std::vector<CompPair> got = image, want = base.members();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) throw Error(ErrorCode::NotABaseSubset, "set differs from the base subset of its frame");
  return frame;
}

namespace {

/// Empty when f carries the base subset of `frame` onto a base subset.
std::string check_frame(const MapOracle& f, const Frame& frame) {
  const BaseSubset base(frame, f.k());
  try {
    recover_frame(image_of(f, base.members()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotABaseSubset) throw;
    return std::string("image is not a base subset: ") + e.what();
  }
  if (f.invertible()) {
    std::vector<CompPair> pre;
    for (const auto& a : base.members()) pre.push_back(f.inverse(a));
    try {
      recover_frame(pre);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotABaseSubset) throw;
      return std::string("preimage is not a base subset: ") + e.what();
    }
  }
  return {};
}

}  // namespace

SweepVerdict preserves_base_subsets(const MapOracle& f, const SweepMode& mode) {
  SweepVerdict v;
  auto visit = [&](const Frame& frame) {
    if (!v.pass) return;
    ++v.frames_checked;
    std::string reason = check_frame(f, frame);
    if (!reason.empty()) {
      v.pass = false;
      v.witness = frame;
      v.reason = std::move(reason);
    }
  };
  if (mode.exhaustive) {
    for_each_frame(f.field(), f.n(), visit, mode.budget);
    return v;
  }
  // Frames through a probe pair come first, so tables and twisted oracles
  // are tested where they differ from their base map.
  Rng rng(mode.seed);
  for (const auto& a : f.probes()) {
    if (!v.pass) break;
    Matrix rows = vstack(a.first.basis(), a.second.basis());
    visit(frame_from_matrix(rows));
  }
  for (std::size_t i = 0; i < mode.samples && v.pass; ++i) visit(random_frame(f.field(), f.n(), rng));
  return v;
}

}  // namespace grasslab
