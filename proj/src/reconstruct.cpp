#include "grasslab/reconstruct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "grasslab/error.hpp"
#include "grasslab/lifting.hpp"
#include "grasslab/overlap_counts.hpp"
#include "grasslab/random.hpp"

namespace grasslab {

std::string_view to_string(InducerKind kind) { return kind == InducerKind::Linear ? "linear" : "duality"; }

MapOracle inducer_oracle(InducerKind kind, const Matrix& m, std::size_t k) {
  return kind == InducerKind::Linear ? induced_from_linear(m, k) : induced_from_duality(m, k);
}

namespace {

std::string params_text(std::size_t n, std::size_t k) {
  return "(n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")";
}

std::vector<Subspace> lines_of(const Subspace& s) {
  std::vector<Subspace> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(Subspace::span(s.basis().row_block(r, 1)));
  return out;
}

Subspace span_except(const std::vector<Subspace>& lines, std::size_t skip) {
  Matrix rows(lines.front().field(), 0, lines.front().ambient());
  for (std::size_t j = 0; j < lines.size(); ++j)
    if (j != skip) rows.append_rows(lines[j].basis());
  return Subspace::span(std::move(rows));
}

/// (Q + P_i, sum of the other lines).
CompPair plus_member(const CompPair& alpha, const std::vector<Subspace>& lines, std::size_t i) {
  return CompPair{alpha.first + lines[i], span_except(lines, i)};
}

/// Coefficients c with sum c_j rows_j = v, or nothing when v is outside the
/// row span or the rows are dependent.
std::optional<std::vector<Elem>> coordinates(const Matrix& rows, std::span<const Elem> v) {
  const std::size_t m = rows.rows();
  const std::size_t n = rows.cols();
  Matrix aug(rows.field(), n, m + 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < m; ++j) aug.set(c, j, rows(j, c));
    aug.set(c, m, v[c]);
  }
  const auto piv = rref_in_place(aug);
  if (piv.size() != m || (!piv.empty() && piv.back() == m)) return std::nullopt;
  std::vector<Elem> out(m);
  for (std::size_t i = 0; i < m; ++i) out[piv[i]] = aug(i, m);
  return out;
}

CompPair g_value(const MapOracle& f, const CompPair& alpha) {
  const std::size_t n = f.n();
  const std::size_t k = f.k();
  const auto lines = lines_of(alpha.second);
  if (2 * k != n) {
    const CompPair a = f(plus_member(alpha, lines, 0));
    const CompPair b = f(plus_member(alpha, lines, 1));
    CompPair out{intersect(a.first, b.first), a.second + b.second};
    if (out.first.dim() != k - 1 || !complementary(out.first, out.second))
      throw NotInducedError("images of two members of an incident base do not meet in a pair of layer " +
                                std::to_string(k - 1),
                            pair_key(alpha));
    return out;
  }
  // At n = 2k each image may come back as a (+) or a (-) member; only the
  // orientation with all three (+) has first components meeting in k - 1
  // dimensions.
  const CompPair img[3] = {f(plus_member(alpha, lines, 0)), f(plus_member(alpha, lines, 1)),
                           f(plus_member(alpha, lines, 2))};
  std::optional<CompPair> found;
  for (unsigned mask = 0; mask < 8; ++mask) {
    CompPair o[3] = {img[0], img[1], img[2]};
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i)) o[i] = opposite(o[i]);
    const Subspace m = intersect(intersect(o[0].first, o[1].first), o[2].first);
    if (m.dim() != k - 1) continue;
    CompPair cand{m, o[0].second + o[1].second};
    if (!complementary(cand.first, cand.second)) continue;
    if (found)
      throw NotInducedError("two orientations of an incident base give a pair of layer " + std::to_string(k - 1),
                            pair_key(alpha));
    found = std::move(cand);
  }
  if (!found) throw NotInducedError("no orientation of an incident base meets in a pair", pair_key(alpha));
  return *found;
}

}  // namespace

MapOracle build_g(const MapOracle& f) {
  const std::size_t n = f.n();
  const std::size_t k = f.k();
  if (k < 2 || k > n - k) throw Error(ErrorCode::ParamOutOfRange, "build_g needs 1 < k <= n - k, got " + params_text(n, k));
  if (n == 2 * k && k < 4)
    throw Error(ErrorCode::DegenerateParams, "layer descent at n = 2k needs k >= 4, got " + params_text(n, k));
  LayerParams params = f.params();
  params.k = k - 1;
  MapOracle::Eval fwd = [f](const CompPair& a) { return g_value(f, a); };
  MapOracle::Eval bwd;
  if (f.invertible()) {
    const MapOracle inv = f.inverse_oracle();
    bwd = [inv](const CompPair& a) { return g_value(inv, a); };
  }
  return MapOracle(OracleKind::Derived, params, fwd, bwd);
}

IncidentBase incident_base(const CompPair& alpha, std::size_t k, const std::vector<Subspace>& lines) {
  if (alpha.k() + 1 != k) throw Error(ErrorCode::DimMismatch, "incident base needs a pair of layer k - 1");
  if (lines.size() != alpha.second.dim()) throw Error(ErrorCode::BadInput, "line count differs from dim T");
  IncidentBase out{lines, {}};
  const bool self_dual = 2 * k == alpha.ambient();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CompPair m = plus_member(alpha, lines, i);
    if (self_dual) out.members.push_back(opposite(m));
    out.members.push_back(std::move(m));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::size_t shared_members(const IncidentBase& a, const IncidentBase& b) {
  std::vector<CompPair> common;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(common));
  return common.size();
}

std::size_t chain_link_threshold(std::size_t n, std::size_t k) { return 2 * k == n ? 6 : 2; }

namespace {

void require_frame_of(const Subspace& t, const std::vector<Subspace>& lines) {
  if (lines.size() != t.dim()) throw Error(ErrorCode::BadInput, "frame of T must have dim T lines");
  Matrix rows(t.field(), 0, t.ambient());
  for (const auto& l : lines) {
    if (l.dim() != 1 || !t.contains(l)) throw Error(ErrorCode::BadInput, "frame line outside T");
    rows.append_rows(l.basis());
  }
  if (rank(rows) != t.dim()) throw Error(ErrorCode::BadInput, "frame lines of T are dependent");
}

}  // namespace

std::vector<IncidentBase> chain_connect(const CompPair& alpha, std::size_t k, const std::vector<Subspace>& from,
                                        const std::vector<Subspace>& to) {
  const std::size_t n = alpha.ambient();
  if (k < 2 || k > n - k) throw Error(ErrorCode::ParamOutOfRange, "chain_connect needs 1 < k <= n - k");
  const Subspace& t = alpha.second;
  require_frame_of(t, from);
  require_frame_of(t, to);
  const std::size_t m = t.dim();
  const std::size_t threshold = chain_link_threshold(n, k);
  // Replacing one line by a vector supported on it and j others keeps the
  // m - 1 - j members indexed by untouched lines, doubled at n = 2k.
  const std::size_t per_member = 2 * k == n ? 2 : 1;
  const std::size_t keep = (threshold + per_member - 1) / per_member;
  if (m < keep + 2) throw Error(ErrorCode::DegenerateParams, "T is too small for linked base subsets");
  const std::size_t step = m - 1 - keep;

  const Field& f = alpha.field();
  std::vector<Subspace> current = from;
  std::vector<IncidentBase> chain{incident_base(alpha, k, current)};
  auto in = [](const std::vector<Subspace>& v, const Subspace& l) { return std::find(v.begin(), v.end(), l) != v.end(); };

  for (const auto& target : to) {
    if (in(current, target)) continue;
    Matrix rows(f, 0, n);
    for (const auto& l : current) rows.append_rows(l.basis());
    const auto c = coordinates(rows, target.basis().row(0));
    if (!c) throw std::logic_error("target line escapes the current frame of T");
    std::size_t r = m;
    for (std::size_t j = 0; j < m && r == m; ++j)
      if ((*c)[j] != 0 && !in(to, current[j])) r = j;
    if (r == m) throw std::logic_error("no replaceable line in the frame walk");
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < m; ++j)
      if (j != r && (*c)[j] != 0) support.push_back(j);

    std::vector<Elem> acc = current[r].basis().row(0);
    for (auto& e : acc) e = f.mul(e, (*c)[r]);
    for (std::size_t pos = 0; pos < support.size(); pos += step) {
      for (std::size_t q = pos; q < std::min(pos + step, support.size()); ++q) {
        const std::size_t j = support[q];
        const auto x = current[j].basis().row(0);
        for (std::size_t col = 0; col < n; ++col) acc[col] = f.add(acc[col], f.mul((*c)[j], x[col]));
      }
      current[r] = Subspace::line(f, acc);
      chain.push_back(incident_base(alpha, k, current));
    }
    if (!(current[r] == target)) throw std::logic_error("frame walk missed its target line");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (shared_members(chain[i], chain[i + 1]) < threshold)
      throw std::logic_error("consecutive bases of the frame walk share too few members");
  return chain;
}

F2Table build_f2(const MapOracle& f, const BaseSubset& base) {
  const std::size_t n = f.n();
  const std::size_t k = f.k();
  if (n < 5) throw Error(ErrorCode::DegenerateParams, "the 2-layer matching needs n >= 5, got n = " + std::to_string(n));
  if (k < 2 || k + 2 > n) throw Error(ErrorCode::ParamOutOfRange, "the 2-layer matching needs 2 <= k <= n - 2");
  if (base.k() != k || base.frame().ambient() != n) throw Error(ErrorCode::DimMismatch, "base subset off the oracle layer");

  const auto images = image_of(f, base.members());
  const BaseSubset image_base(recover_frame(images), k);
  std::vector<std::size_t> to_image(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) to_image[i] = *image_base.index_of(images[i]);

  const auto domain_sets = maximal_inexact_subsets(base);
  const BaseSubset image_two = image_base.associated(2);
  std::vector<std::vector<std::size_t>> image_sets;
  for (const auto& beta : image_two.members()) image_sets.push_back(incident_members(image_base, beta));

  F2Table t{base.associated(2), image_two, {}, false, false, {}};
  for (const auto& d : domain_sets) {
    std::vector<std::size_t> mapped;
    for (auto m : d.members) mapped.push_back(to_image[m]);
    std::sort(mapped.begin(), mapped.end());
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < image_sets.size(); ++j) {
      if (image_sets[j] != mapped) continue;
      if (hit) throw Error(ErrorCode::AmbiguousMatch, "two 2-layer elements match the image of " + pair_key(d.beta));
      hit = j;
    }
    if (!hit) throw Error(ErrorCode::AmbiguousMatch, "no 2-layer element matches the image of " + pair_key(d.beta));
    t.assignment.push_back(*hit);
  }
  auto sorted = t.assignment;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::AmbiguousMatch, "the 2-layer matching is not injective");

  t.distance_preserving = true;
  const auto& dom = t.domain.members();
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      if (pair_distance(dom[i], dom[j]) != pair_distance(t(i), t(j))) t.distance_preserving = false;

  const auto counts = verify_two_layer_overlaps(n, std::min(k, n - k), f.field());
  t.distance_certified = counts.distinguishable;
  if (!t.distance_certified) {
    t.warnings.push_back("overlap counts c1 = c2 = " + std::to_string(counts.c1_enum) + " at " + params_text(n, k) +
                         " do not separate distances 1 and 2; the 2-layer matching is not certified distance-preserving");
  } else if (!t.distance_preserving) {
    throw NotInducedError("the 2-layer matching changes a distance", pair_key(dom.front()));
  }
  return t;
}

PointMapResult recover_point_map(const MapOracle& g, const VerifyOptions& opts) {
  const std::size_t n = g.n();
  if (g.k() != 1) throw Error(ErrorCode::ParamOutOfRange, "point map recovery works on layer 1");
  if (n < 3) throw Error(ErrorCode::ParamOutOfRange, "point map recovery needs n >= 3");
  const Field& f = g.field();

  auto unit = [&](std::size_t i) {
    std::vector<Elem> v(n, 0);
    v[i] = 1;
    return v;
  };
  auto complement = [&](const Subspace& line) {
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c < n; ++c)
      if (c != line.pivots().front()) idx.push_back(c);
    return Subspace::coordinate(f, n, idx);
  };

  // Three complements of <e1>: span(e2..en), and variants tilting e2 or e3
  // towards e1.
  const Subspace e1 = Subspace::line(f, unit(0));
  std::vector<Subspace> hyper;
  for (std::size_t tilt = 0; tilt < 3; ++tilt) {
    Matrix rows(f, 0, n);
    for (std::size_t c = 1; c < n; ++c) {
      auto v = unit(c);
      if (tilt > 0 && c == tilt) v[0] = 1;
      rows.append_row(v);
    }
    hyper.push_back(Subspace::span(std::move(rows)));
  }
  std::vector<Subspace> firsts;
  for (const auto& h : hyper) firsts.push_back(g(CompPair{e1, h}).first);
  InducerKind kind;
  if (firsts[0] == firsts[1] && firsts[1] == firsts[2])
    kind = InducerKind::Linear;
  else if (!(firsts[0] == firsts[1]) && !(firsts[1] == firsts[2]) && !(firsts[0] == firsts[2]))
    kind = InducerKind::Duality;
  else
    throw NotInducedError("first component depends on the complement for some but not all choices",
                          pair_key(CompPair{e1, hyper[0]}));

  auto point = [&](const Subspace& line) {
    const CompPair img = g(CompPair{line, complement(line)});
    return kind == InducerKind::Linear ? img.first : annihilator(img.second);
  };
  Matrix images(f, 0, n);
  for (std::size_t i = 0; i < n; ++i) images.append_rows(point(Subspace::line(f, unit(i))).basis());
  const Subspace ones = Subspace::line(f, std::vector<Elem>(n, 1));
  const auto c = coordinates(images, point(ones).basis().row(0));
  if (!c || std::find(c->begin(), c->end(), Elem{0}) != c->end())
    throw NotInducedError("images of the reference points are not in general position",
                          pair_key(CompPair{ones, complement(ones)}));
  // Column i of the inducer is c_i times the image of e_i.
  Matrix cols(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) cols.set(r, i, f.mul((*c)[i], images(i, r)));
  PointMapResult out{kind, normalize_scalar(cols), 0, false};

  const MapOracle induced = inducer_oracle(kind, out.matrix, 1);
  auto check = [&](const CompPair& a) {
    ++out.checked;
    if (!(g(a) == induced(a))) throw NotInducedError("layer-1 map disagrees with the recovered inducer", pair_key(a));
  };
  if (pair_space_size(n, 1, f) <= opts.exhaustive_budget) {
    out.exhaustive = true;
    for_each_pair(f, n, 1, check, opts.exhaustive_budget);
  } else {
    for (const auto& a : g.probes()) check(a);
    Rng rng(opts.seed);
    for (std::size_t i = 0; i < opts.samples; ++i) check(random_pair(f, n, 1, rng));
  }
  return out;
}

InducerReport reconstruct_inducer(const MapOracle& f, const ReconstructOptions& opts) {
  const std::size_t n = f.n();
  const std::size_t k = f.k();
  if (n < 3) throw Error(ErrorCode::ParamOutOfRange, "reconstruction needs n >= 3");
  if (2 * k == n && (k == 2 || k == 3))
    throw Error(ErrorCode::DegenerateParams, "reconstruction at n = 2k = " + std::to_string(n) + " is not supported");

  InducerReport report;
  report.n = n;
  report.k = k;
  report.p = f.field().p();
  report.self_dual_layer = (2 * k == n);
  report.seed = opts.seed;

  const MapOracle work = k > n - k ? opposite_conjugate(f) : f;
  if (opts.preflight && work.k() >= 2 && n >= 5) {
    const F2Table t = build_f2(work, BaseSubset(standard_frame(f.field(), n), work.k()));
    report.warnings = t.warnings;
  }

  std::vector<MapOracle> layers{work};
  while (layers.back().k() > 1) layers.push_back(build_g(layers.back()));
  const PointMapResult point =
      recover_point_map(layers.back(), VerifyOptions{opts.seed, opts.samples, opts.point_budget});
  report.kind = point.kind;
  report.matrix = point.matrix;

  const MapOracle induced = inducer_oracle(point.kind, point.matrix, k);
  std::set<std::string> op_classes;
  auto check = [&](const CompPair& a) {
    ++report.checked;
    const CompPair got = f(a);
    const CompPair want = induced(a);
    if (got == want) return;
    if (report.self_dual_layer && got == opposite(want)) {
      op_classes.insert(class_key(a));
      return;
    }
    ++report.residual;
    if (!report.witness) report.witness = a;
  };
  if (pair_space_size(n, k, f.field()) <= opts.exhaustive_budget) {
    report.exhaustive = true;
    for_each_pair(f.field(), n, k, check, opts.exhaustive_budget);
  } else {
    for (const auto& a : f.probes()) check(a);
    Rng rng(opts.seed);
    for (std::size_t i = 0; i < opts.samples; ++i) check(random_pair(f.field(), n, k, rng));
  }
  report.op_component.assign(op_classes.begin(), op_classes.end());

  // The lifting identity predicts f(α) from g on two pairs one layer down.
  if (layers.size() > 1) {
    const MapOracle& g = layers[1];
    Rng rng(opts.seed + 1);
    for (std::size_t i = 0; i < opts.lifting_samples; ++i) {
      const CompPair a = random_pair(f.field(), n, work.k(), rng);
      const LiftingBetas b = lifting_betas(a);
      const CompPair predicted = lift_pair(g(b.beta1), g(b.beta2));
      const CompPair got = work(a);
      ++report.lifting_checked;
      if (got == predicted || (report.self_dual_layer && got == opposite(predicted))) continue;
      ++report.residual;
      if (!report.witness) report.witness = k > n - k ? opposite(a) : a;
    }
  }
  return report;
}

}  // namespace grasslab
