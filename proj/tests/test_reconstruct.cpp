#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"
#include "grasslab/json_io.hpp"
#include "grasslab/lifting.hpp"
#include "grasslab/random.hpp"
#include "grasslab/reconstruct.hpp"
#include "oracles.hpp"

using namespace grasslab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadInput;
}

CompPair linear_image(const Matrix& l, const CompPair& a) { return CompPair{image(l, a.first), image(l, a.second)}; }

CompPair dual_image(const Matrix& d, const CompPair& a) {
  return CompPair{annihilator(image(d, a.second)), annihilator(image(d, a.first))};
}

/// Exchanges a and b and fixes every other pair.
MapOracle transposition(LayerParams params, const CompPair& a, const CompPair& b) {
  return table_oracle(params, {{a, b}, {b, a}}, false);
}

std::vector<Subspace> random_lines_of(const Subspace& t, Rng& rng) {
  const Matrix rows = random_invertible(t.field(), t.dim(), rng) * t.basis();
  std::vector<Subspace> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(Subspace::span(rows.row_block(r, 1)));
  return out;
}

/// A random frame of the same span whose first `keep` lines are those of `from`.
std::vector<Subspace> lines_keeping(const std::vector<Subspace>& from, std::size_t keep, Rng& rng) {
  const Field& f = from.front().field();
  const std::size_t m = from.size();
  Matrix rows(f, 0, from.front().ambient());
  for (const auto& l : from) rows.append_rows(l.basis());
  Matrix change = Matrix::identity(f, m);
  const Matrix lower = random_invertible(f, m - keep, rng);
  for (std::size_t r = keep; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      change.set(r, c, c < keep ? rng.element(f) : lower(r - keep, c - keep));
  const Matrix to = change * rows;
  std::vector<Subspace> out;
  for (std::size_t r = 0; r < m; ++r) out.push_back(Subspace::span(to.row_block(r, 1)));
  return out;
}

}  // namespace

TEST_CASE("identity and linear oracles") {
  const LayerParams params{Field(2), 5, 2};
  const MapOracle id = identity_oracle(params);
  Rng rng(1);
  const Matrix l = random_invertible(Field(2), 5, rng);
  const MapOracle lin = induced_from_linear(l, 2);
  const MapOracle unit = induced_from_linear(Matrix::identity(Field(2), 5), 2);
  CHECK(lin.kind() == OracleKind::InducedLinear);
  CHECK(lin.matrix().has_value());
  for (int t = 0; t < 50; ++t) {
    const CompPair a = random_pair(Field(2), 5, 2, rng);
    CHECK(id(a) == a);
    CHECK(unit(a) == a);
    CHECK(lin(a) == linear_image(l, a));
    CHECK(lin.inverse(lin(a)) == a);
  }
  CHECK(code_of([&] { induced_from_linear(Matrix(Field(2), 5, 5), 2); }) == ErrorCode::Singular);
  CHECK(code_of([&] { lin(random_pair(Field(2), 5, 1, rng)); }) == ErrorCode::DimMismatch);
}

TEST_CASE("a coordinate permutation permutes the standard base subset") {
  const Field f(2);
  const Matrix swap = Matrix::from_rows(f, 3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const MapOracle m = induced_from_linear(swap, 1);
  const BaseSubset base(standard_frame(f, 3), 1);
  const auto img = image_of(m, base.members());
  std::set<CompPair> a(base.members().begin(), base.members().end()), b(img.begin(), img.end());
  CHECK(a == b);
  CHECK(img[0] == base.members()[1]);
  CHECK(img[1] == base.members()[0]);
  CHECK(img[2] == base.members()[2]);
}

TEST_CASE("linear images of base subsets are base subsets of the image frame") {
  const Field f(2);
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Matrix l = random_invertible(f, 5, rng);
    const BaseSubset base(standard_frame(f, 5), 2);
    const auto img = image_of(induced_from_linear(l, 2), base.members());
    const BaseSubset expected(frame_from_matrix(transpose(l)), 2);
    CHECK(std::set<CompPair>(img.begin(), img.end()) ==
          std::set<CompPair>(expected.members().begin(), expected.members().end()));
    CHECK(recover_frame(img) == expected.frame());
  }
}

TEST_CASE("duality oracles") {
  const Field f(2);
  const MapOracle unit = induced_from_duality(Matrix::identity(f, 3), 1);
  const CompPair a{Subspace::coordinate(f, 3, std::vector<std::size_t>{0}),
                   Subspace::coordinate(f, 3, std::vector<std::size_t>{1, 2})};
  CHECK(unit(a) == a);
  const MapOracle unit5 = induced_from_duality(Matrix::identity(f, 5), 2);
  const BaseSubset base(standard_frame(f, 5), 2);
  const auto img = image_of(unit5, base.members());
  CHECK(std::set<CompPair>(img.begin(), img.end()) ==
        std::set<CompPair>(base.members().begin(), base.members().end()));
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(img[i] == base.members()[i]);

  Rng rng(3);
  const Matrix d = random_invertible(f, 5, rng);
  const MapOracle dual = induced_from_duality(d, 2);
  CHECK(dual.kind() == OracleKind::InducedDuality);
  for (int t = 0; t < 500; ++t) {
    const CompPair x = random_pair(f, 5, 2, rng);
    const CompPair y = dual(x);
    CHECK(y.first.dim() == 2);
    CHECK(y.second.dim() == 3);
    CHECK(complementary(y.first, y.second));
    CHECK(y == dual_image(d, x));
    CHECK(dual.inverse(y) == x);
  }
  CHECK(code_of([&] { induced_from_duality(Matrix(f, 5, 5), 2); }) == ErrorCode::Singular);
}

TEST_CASE("op twist") {
  const Field f(2);
  const LayerParams params{f, 4, 2};
  Rng rng(4);
  const MapOracle lin = induced_from_linear(random_invertible(f, 4, rng), 2);
  const auto layer = enumerate_pairs(f, 4, 2);
  const MapOracle same = op_twist(lin, {});
  for (const auto& a : layer) CHECK(same(a) == lin(a));
  const MapOracle flip = op_twist(identity_oracle(params), layer);
  for (const auto& a : layer) CHECK(flip(a) == opposite(a));

  const auto one = random_opposite_classes(f, 4, 1, 5);
  REQUIRE(one.size() == 2);
  CHECK(one[1] == opposite(one[0]));
  const MapOracle twisted = op_twist(lin, one);
  CHECK(twisted.kind() == OracleKind::OpTwisted);
  for (const auto& a : layer) {
    const bool in = std::find(one.begin(), one.end(), a) != one.end();
    CHECK(twisted(a) == (in ? lin(opposite(a)) : lin(a)));
    CHECK(twisted.inverse(twisted(a)) == a);
  }
  const auto verdict = preserves_base_subsets(twisted, SweepMode::all());
  CHECK(verdict.pass);
  CHECK(verdict.frames_checked == 840);

  CHECK(code_of([&] { op_twist(lin, {one[0]}); }) == ErrorCode::NotOppositeClosed);
  const MapOracle odd = identity_oracle({f, 5, 2});
  CHECK(code_of([&] { op_twist(odd, {}); }) == ErrorCode::NotSelfDualLayer);
}

TEST_CASE("table oracles") {
  const Field f(2);
  const LayerParams params{f, 3, 1};
  const auto layer = enumerate_pairs(f, 3, 1);
  const MapOracle swapped = transposition(params, layer[0], layer[5]);
  CHECK(swapped(layer[0]) == layer[5]);
  CHECK(swapped(layer[5]) == layer[0]);
  CHECK(swapped(layer[1]) == layer[1]);
  CHECK(swapped.inverse(layer[5]) == layer[0]);
  CHECK(code_of([&] { table_oracle(params, {{layer[0], layer[5]}}, false); }) == ErrorCode::BadInput);
  CHECK(code_of([&] { table_oracle(params, {{layer[0], layer[5]}, {layer[1], layer[5]}}, true); }) ==
        ErrorCode::BadInput);
  CHECK(code_of([&] { table_oracle(params, {{layer[0], layer[0]}}, true); }) == ErrorCode::BadInput);
}

TEST_CASE("identity preserves base subsets over every frame at (3,1,2)") {
  const auto v = preserves_base_subsets(identity_oracle({Field(2), 3, 1}), SweepMode::all());
  CHECK(v.pass);
  CHECK(v.frames_checked == 28);
  CHECK(v.frames_checked == frame_count(3, 2));
}

TEST_CASE("induced oracles preserve base subsets") {
  const Field f(2);
  Rng rng(6);
  for (std::size_t k : {1, 2}) {
    const auto v = preserves_base_subsets(induced_from_linear(random_invertible(f, 3, rng), 1), SweepMode::all());
    CHECK(v.pass);
    const auto w = preserves_base_subsets(induced_from_duality(random_invertible(f, 4, rng), k), SweepMode::all());
    CHECK(w.pass);
    CHECK(w.frames_checked == 840);
  }
  const auto s = preserves_base_subsets(induced_from_linear(random_invertible(f, 5, rng), 2), SweepMode::sampled(200, 7));
  CHECK(s.pass);
  CHECK(s.frames_checked == 200);
  const auto d = preserves_base_subsets(induced_from_duality(random_invertible(f, 5, rng), 2), SweepMode::sampled(200, 8));
  CHECK(d.pass);
  CHECK(code_of([&] { preserves_base_subsets(identity_oracle({f, 8, 4}), SweepMode::all(1000)); }) ==
        ErrorCode::BudgetExceeded);
}

TEST_CASE("swapping pairs of different base subsets breaks preservation") {
  const Field f(2);
  const LayerParams params{f, 3, 1};
  const BaseSubset base(standard_frame(f, 3), 1);
  const CompPair a = base.members()[0];
  // A pair outside the standard base subset.
  const CompPair b{Subspace::line(f, std::vector<Elem>{1, 1, 0}), a.second};
  REQUIRE_FALSE(base.contains(b));
  const auto v = preserves_base_subsets(transposition(params, a, b), SweepMode::all());
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.reason.empty());
  const BaseSubset broken(*v.witness, 1);
  CHECK(code_of([&] { recover_frame(image_of(transposition(params, a, b), broken.members())); }) ==
        ErrorCode::NotABaseSubset);
  CHECK(to_json(v).at("pass") == false);
}

TEST_CASE("an exchange that is not an opposite class breaks preservation at n = 2k") {
  const Field f(2);
  Rng rng(9);
  const MapOracle lin = induced_from_linear(random_invertible(f, 4, rng), 2);
  const auto layer = enumerate_pairs(f, 4, 2);
  const CompPair a = layer[0];
  CompPair b = layer[1];
  for (const auto& x : layer)
    if (!(x == a) && !(x == opposite(a))) {
      b = x;
      break;
    }
  std::vector<std::pair<CompPair, CompPair>> entries;
  for (const auto& x : layer) {
    const CompPair src = x == a ? b : (x == b ? a : x);
    entries.emplace_back(x, lin(src));
  }
  const MapOracle table = table_oracle({f, 4, 2}, entries, true);
  const auto v = preserves_base_subsets(table, SweepMode::all());
  CHECK_FALSE(v.pass);
  CHECK(v.witness.has_value());
}

TEST_CASE("recover_frame") {
  const Field f(2);
  const BaseSubset base(standard_frame(f, 5), 2);
  CHECK(recover_frame(base.members()) == standard_frame(f, 5));
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const Frame fr = random_frame(Field(3), 5, rng);
    CHECK(recover_frame(BaseSubset(fr, 2).members()) == fr);
    CHECK(recover_frame(BaseSubset(fr, 1).members()) == fr);
  }
  auto broken = base.members();
  broken[3] = CompPair::make(Subspace::span(Matrix::from_rows(f, 5, {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}})),
                             Subspace::span(Matrix::from_rows(f, 5, {{0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})));
  CHECK(code_of([&] { recover_frame(broken); }) == ErrorCode::NotABaseSubset);
  auto short_list = base.members();
  short_list.pop_back();
  CHECK(code_of([&] { recover_frame(short_list); }) == ErrorCode::NotABaseSubset);
  auto foreign = base.members();
  foreign[0] = random_pair(f, 5, 2, rng);
  while (base.contains(foreign[0])) foreign[0] = random_pair(f, 5, 2, rng);
  CHECK(code_of([&] { recover_frame(foreign); }) == ErrorCode::NotABaseSubset);
}

TEST_CASE("2-layer matching for identity, linear and duality maps") {
  const Field f(2);
  const BaseSubset base(standard_frame(f, 5), 2);
  const F2Table id = build_f2(identity_oracle({f, 5, 2}), base);
  for (std::size_t i = 0; i < id.domain.size(); ++i) CHECK(id(i) == id.domain.members()[i]);
  CHECK(id.distance_certified);
  CHECK(id.distance_preserving);
  CHECK(id.warnings.empty());

  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    const Matrix l = random_invertible(f, 5, rng);
    const F2Table lt = build_f2(induced_from_linear(l, 2), base);
    for (std::size_t i = 0; i < lt.domain.size(); ++i) CHECK(lt(i) == linear_image(l, lt.domain.members()[i]));
    const Matrix d = random_invertible(f, 5, rng);
    const F2Table dt = build_f2(induced_from_duality(d, 2), base);
    for (std::size_t i = 0; i < dt.domain.size(); ++i) CHECK(dt(i) == dual_image(d, dt.domain.members()[i]));
    CHECK(dt.distance_preserving);
  }
  const BaseSubset other(random_frame(Field(3), 6, rng), 3);
  const Matrix l3 = random_invertible(Field(3), 6, rng);
  const F2Table t3 = build_f2(induced_from_linear(l3, 3), other);
  for (std::size_t i = 0; i < t3.domain.size(); ++i) CHECK(t3(i) == linear_image(l3, t3.domain.members()[i]));
}

TEST_CASE("2-layer matching at (6,2,2) works but is not distance-certified") {
  const Field f(2);
  Rng rng(12);
  const Matrix l = random_invertible(f, 6, rng);
  const F2Table t = build_f2(induced_from_linear(l, 2), BaseSubset(standard_frame(f, 6), 2));
  for (std::size_t i = 0; i < t.domain.size(); ++i) CHECK(t(i) == linear_image(l, t.domain.members()[i]));
  CHECK_FALSE(t.distance_certified);
  CHECK(t.distance_preserving);
  REQUIRE(t.warnings.size() == 1);
  CHECK(t.warnings[0].find("c1 = c2 = 3") != std::string::npos);
}

TEST_CASE("2-layer matching refuses small spaces") {
  const Field f(2);
  CHECK(code_of([&] { build_f2(identity_oracle({f, 4, 2}), BaseSubset(standard_frame(f, 4), 2)); }) ==
        ErrorCode::DegenerateParams);
}

TEST_CASE("layer descent for identity, linear and duality maps at (5,2,2)") {
  const Field f(2);
  Rng rng(13);
  const MapOracle gid = build_g(identity_oracle({f, 5, 2}));
  CHECK(gid.k() == 1);
  const Matrix l = random_invertible(f, 5, rng);
  const Matrix d = random_invertible(f, 5, rng);
  const MapOracle gl = build_g(induced_from_linear(l, 2));
  const MapOracle gd = build_g(induced_from_duality(d, 2));
  for (int t = 0; t < 100; ++t) {
    const CompPair a = random_pair(f, 5, 1, rng);
    CHECK(gid(a) == a);
    CHECK(gl(a) == linear_image(l, a));
    CHECK(gd(a) == dual_image(d, a));
    CHECK(gl.inverse(gl(a)) == a);
  }
}

TEST_CASE("layer descent carries incident sets onto incident sets") {
  const Field f(2);
  Rng rng(14);
  const MapOracle fl = induced_from_linear(random_invertible(f, 5, rng), 2);
  const MapOracle g = build_g(fl);
  for (int t = 0; t < 10; ++t) {
    const CompPair a = random_pair(f, 5, 1, rng);
    std::set<CompPair> mapped;
    for (const auto& x : IncidentSet(a, 2, Sign::Plus).materialize()) mapped.insert(fl(x));
    const auto target = IncidentSet(g(a), 2, Sign::Plus).materialize();
    CHECK(mapped == std::set<CompPair>(target.begin(), target.end()));
  }
}

TEST_CASE("layer descent at n = 2k = 8 sees through an op twist") {
  const Field f(2);
  Rng rng(15);
  const Matrix l = random_invertible(f, 8, rng);
  std::vector<CompPair> x = random_opposite_classes(f, 8, 10, 16);
  const MapOracle g = build_g(op_twist(induced_from_linear(l, 4), x));
  for (int t = 0; t < 20; ++t) {
    const CompPair a = random_pair(f, 8, 3, rng);
    CHECK(g(a) == linear_image(l, a));
  }
}

TEST_CASE("layer descent refuses degenerate layers") {
  const Field f(2);
  CHECK(code_of([&] { build_g(identity_oracle({f, 6, 3})); }) == ErrorCode::DegenerateParams);
  CHECK(code_of([&] { build_g(identity_oracle({f, 4, 2})); }) == ErrorCode::DegenerateParams);
  CHECK(code_of([&] { build_g(identity_oracle({f, 5, 1})); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([&] { build_g(identity_oracle({f, 5, 3})); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("frame walk of length one") {
  const Field f(2);
  Rng rng(17);
  const CompPair a = random_pair(f, 5, 1, rng);
  const auto lines = random_lines_of(a.second, rng);
  const auto chain = chain_connect(a, 2, lines, lines);
  CHECK(chain.size() == 1);
  CHECK(chain[0].members.size() == 4);
}

TEST_CASE("frame walk across one replaced line") {
  const Field f(2);
  const std::size_t n = 5;
  const CompPair a{Subspace::coordinate(f, n, std::vector<std::size_t>{0}),
                   Subspace::coordinate(f, n, std::vector<std::size_t>{1, 2, 3, 4})};
  std::vector<Subspace> from;
  for (std::size_t i = 1; i < n; ++i) from.push_back(Subspace::coordinate(f, n, std::vector<std::size_t>{i}));
  auto to = from;
  to[3] = Subspace::line(f, std::vector<Elem>{0, 0, 0, 1, 1});  // inside P3 + P4
  const auto chain = chain_connect(a, 2, from, to);
  REQUIRE(chain.size() == 2);
  CHECK(chain.front().lines == from);
  std::vector<CompPair> common;
  std::set_intersection(chain[0].members.begin(), chain[0].members.end(), chain[1].members.begin(),
                        chain[1].members.end(), std::back_inserter(common));
  const BaseSubset full(standard_frame(f, n), 2);
  std::vector<CompPair> want;
  for (std::size_t i : {1, 2}) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j < n; ++j)
      if (j != i) rest.push_back(j);
    want.push_back({Subspace::coordinate(f, n, std::vector<std::size_t>{0, i}), Subspace::coordinate(f, n, rest)});
  }
  std::sort(want.begin(), want.end());
  CHECK(common == want);
}

TEST_CASE("random frame walks stay linked and short") {
  struct Case {
    int p;
    std::size_t n, k;
  };
  Rng rng(18);
  for (const Case c : {Case{2, 5, 2}, Case{3, 5, 2}, Case{2, 7, 3}, Case{2, 8, 4}, Case{3, 7, 2}}) {
    const Field f(c.p);
    const std::size_t threshold = chain_link_threshold(c.n, c.k);
    for (int t = 0; t < 20; ++t) {
      const CompPair a = random_pair(f, c.n, c.k - 1, rng);
      const auto from = random_lines_of(a.second, rng);
      // The target keeps the first few lines of the source now and then.
      const auto to = lines_keeping(from, rng.below(3), rng);
      const auto chain = chain_connect(a, c.k, from, to);
      REQUIRE(!chain.empty());
      CHECK(chain.front().lines == from);
      CHECK(std::set<Subspace>(chain.back().lines.begin(), chain.back().lines.end()) ==
            std::set<Subspace>(to.begin(), to.end()));
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(shared_members(chain[i], chain[i + 1]) >= threshold);
      const std::size_t m = a.second.dim();
      std::size_t shared = 0;
      for (const auto& l : to) shared += std::count(from.begin(), from.end(), l);
      const std::size_t per_member = 2 * c.k == c.n ? 2 : 1;
      const std::size_t step = m - 1 - (threshold + per_member - 1) / per_member;
      CHECK(chain.size() <= 1 + (m - shared) * ((m - 1 + step - 1) / step));
      for (const auto& link : chain)
        for (const auto& x : link.members)
          CHECK(matches(incidence(x, a), 2 * c.k == c.n ? Sign::Both : Sign::Plus));
    }
  }
}

TEST_CASE("point map recovery") {
  Rng rng(19);
  const PointMapResult id = recover_point_map(identity_oracle({Field(2), 3, 1}));
  CHECK(id.kind == InducerKind::Linear);
  CHECK(id.matrix == Matrix::identity(Field(2), 3));
  CHECK(id.exhaustive);
  CHECK(id.checked == 28);

  const Field f3(3);
  for (int t = 0; t < 10; ++t) {
    const Matrix l = random_invertible(f3, 3, rng);
    const PointMapResult a = recover_point_map(induced_from_linear(l, 1));
    const PointMapResult b = recover_point_map(induced_from_linear(scaled(l, 2), 1));
    CHECK(a.kind == InducerKind::Linear);
    CHECK(a.matrix == normalize_scalar(l));
    CHECK(b.matrix == a.matrix);
    CHECK(a.checked == 117);
  }
  const Field f2(2);
  for (int t = 0; t < 10; ++t) {
    const Matrix d = random_invertible(f2, 3, rng);
    const PointMapResult r = recover_point_map(induced_from_duality(d, 1));
    CHECK(r.kind == InducerKind::Duality);
    CHECK(r.matrix == d);
    CHECK(r.checked == 28);
  }
  const Matrix d5 = random_invertible(Field(5), 4, rng);
  const PointMapResult r5 = recover_point_map(induced_from_duality(d5, 1), VerifyOptions{3, 200, 100});
  CHECK(r5.matrix == normalize_scalar(d5));
  CHECK_FALSE(r5.exhaustive);
}

TEST_CASE("point map recovery rejects maps no matrix induces") {
  const Field f(2);
  const auto layer = enumerate_pairs(f, 3, 1);
  const MapOracle swap = transposition({f, 3, 1}, layer[4], layer[20]);
  try {
    recover_point_map(swap);
    FAIL("expected NotInduced");
  } catch (const NotInducedError& e) {
    CHECK(e.code() == ErrorCode::NotInduced);
    CHECK_FALSE(e.witness().empty());
  }
  CHECK(code_of([&] { recover_point_map(identity_oracle({f, 2, 1})); }) == ErrorCode::ParamOutOfRange);
  CHECK(code_of([&] { recover_point_map(identity_oracle({f, 4, 2})); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("reconstruction roundtrip at (5,2,2)") {
  const Field f(2);
  Rng rng(20);
  for (int t = 0; t < 5; ++t) {
    const Matrix l = random_invertible(f, 5, rng);
    const InducerReport r = reconstruct_inducer(induced_from_linear(l, 2));
    CHECK(r.kind == InducerKind::Linear);
    CHECK(r.matrix == normalize_scalar(l));
    CHECK(r.residual == 0);
    CHECK(r.exhaustive);
    CHECK(r.checked == 9920);
    CHECK(r.op_component.empty());
    CHECK(r.lifting_checked == 100);
    CHECK(r.warnings.empty());

    const Matrix d = random_invertible(f, 5, rng);
    const InducerReport s = reconstruct_inducer(induced_from_duality(d, 2));
    CHECK(s.kind == InducerKind::Duality);
    CHECK(s.matrix == normalize_scalar(d));
    CHECK(s.residual == 0);
    CHECK(s.checked == 9920);
  }
}

TEST_CASE("reconstruction over other fields and layers") {
  Rng rng(21);
  struct Case {
    int p;
    std::size_t n, k;
  };
  for (const Case c : {Case{3, 5, 2}, Case{2, 7, 3}, Case{2, 6, 2}, Case{5, 4, 1}, Case{2, 3, 1}, Case{3, 6, 4}}) {
    CAPTURE(c.p);
    CAPTURE(c.n);
    CAPTURE(c.k);
    const Field f(c.p);
    const Matrix l = random_invertible(f, c.n, rng);
    const Matrix d = random_invertible(f, c.n, rng);
    ReconstructOptions opts;
    opts.samples = 200;
    opts.lifting_samples = 20;
    const InducerReport a = reconstruct_inducer(induced_from_linear(l, c.k), opts);
    CHECK(a.kind == InducerKind::Linear);
    CHECK(a.matrix == normalize_scalar(l));
    CHECK(a.residual == 0);
    const InducerReport b = reconstruct_inducer(induced_from_duality(d, c.k), opts);
    CHECK(b.kind == InducerKind::Duality);
    CHECK(b.matrix == normalize_scalar(d));
    CHECK(b.residual == 0);
  }
}

TEST_CASE("reconstruction reports the op component at (8,4,2)") {
  const Field f(2);
  Rng rng(22);
  const Matrix l = random_invertible(f, 8, rng);
  const auto x = random_opposite_classes(f, 8, 10, 23);
  CHECK(x.size() == 20);
  ReconstructOptions opts;
  opts.seed = 7;
  const InducerReport r = reconstruct_inducer(op_twist(induced_from_linear(l, 4), x), opts);
  CHECK(r.kind == InducerKind::Linear);
  CHECK(r.matrix == normalize_scalar(l));
  CHECK(r.residual == 0);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.checked == 1000 + x.size());
  std::set<std::string> classes;
  for (const auto& a : x) classes.insert(class_key(a));
  CHECK(classes.size() == 10);
  CHECK(std::set<std::string>(r.op_component.begin(), r.op_component.end()) == classes);
  CHECK(r.self_dual_layer);

  const InducerReport plain = reconstruct_inducer(induced_from_linear(l, 4), opts);
  CHECK(plain.op_component.empty());
  CHECK(plain.residual == 0);
}

TEST_CASE("reconstruction commutes with the opposite reduction") {
  const Field f(2);
  Rng rng(24);
  for (int t = 0; t < 3; ++t) {
    const Matrix l = random_invertible(f, 5, rng);
    const MapOracle low = induced_from_linear(l, 2);
    const MapOracle high = induced_from_linear(l, 3);
    const InducerReport a = reconstruct_inducer(low);
    const InducerReport b = reconstruct_inducer(high);
    const InducerReport c = reconstruct_inducer(opposite_conjugate(high));
    CHECK(a.kind == b.kind);
    CHECK(a.matrix == b.matrix);
    CHECK(c.matrix == a.matrix);
    CHECK(b.k == 3);
    CHECK(b.residual == 0);
    const Matrix d = random_invertible(f, 5, rng);
    const InducerReport e = reconstruct_inducer(induced_from_duality(d, 3));
    const InducerReport g = reconstruct_inducer(opposite_conjugate(induced_from_duality(d, 3)));
    CHECK(e.kind == InducerKind::Duality);
    CHECK(e.matrix == g.matrix);
    CHECK(e.matrix == normalize_scalar(d));
  }
}

TEST_CASE("opposite conjugation") {
  const Field f(2);
  Rng rng(25);
  const Matrix l = random_invertible(f, 5, rng);
  const MapOracle c = opposite_conjugate(induced_from_linear(l, 3));
  CHECK(c.k() == 2);
  for (int t = 0; t < 20; ++t) {
    const CompPair a = random_pair(f, 5, 2, rng);
    CHECK(c(a) == linear_image(l, a));
  }
}

TEST_CASE("reconstruction refuses the small self-paired layers") {
  const Field f(2);
  Rng rng(26);
  CHECK(code_of([&] { reconstruct_inducer(induced_from_linear(random_invertible(f, 6, rng), 3)); }) ==
        ErrorCode::DegenerateParams);
  CHECK(code_of([&] { reconstruct_inducer(induced_from_linear(random_invertible(f, 4, rng), 2)); }) ==
        ErrorCode::DegenerateParams);
  CHECK(code_of([&] { reconstruct_inducer(identity_oracle({f, 2, 1})); }) == ErrorCode::ParamOutOfRange);
}

TEST_CASE("reconstruction flags a map that is not induced") {
  const Field f(2);
  Rng rng(27);
  const Matrix l = random_invertible(f, 5, rng);
  const MapOracle lin = induced_from_linear(l, 2);
  const auto layer = enumerate_pairs(f, 5, 2);
  std::vector<std::pair<CompPair, CompPair>> entries;
  for (const auto& a : layer) entries.emplace_back(a, lin(a));
  std::swap(entries[17].second, entries[4242].second);
  const MapOracle table = table_oracle({f, 5, 2}, entries, true);
  bool flagged = false;
  try {
    const InducerReport r = reconstruct_inducer(table);
    flagged = r.residual > 0 && r.witness.has_value();
  } catch (const Error& e) {
    flagged = e.code() == ErrorCode::NotInduced || e.code() == ErrorCode::NotABaseSubset ||
              e.code() == ErrorCode::AmbiguousMatch;
  }
  CHECK(flagged);
  ReconstructOptions no_preflight;
  no_preflight.preflight = false;
  try {
    const InducerReport r = reconstruct_inducer(table, no_preflight);
    CHECK(r.residual > 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInduced);
  }
}

TEST_CASE("lifting identity on layer k") {
  const auto small = verify_lifting_identity(Field(2), 5, 2, 100, 1);
  CHECK(small.pass());
  CHECK(small.samples == 100);
  CHECK_FALSE(small.self_dual_layer);
  const auto odd = verify_lifting_identity(Field(3), 6, 2, 30, 2);
  CHECK(odd.pass());
  const auto self_dual = verify_lifting_identity(Field(2), 8, 4, 20, 3);
  CHECK(self_dual.pass());
  CHECK(self_dual.self_dual_layer);
}

TEST_CASE("lifting singles out the pair from two lower images") {
  const Field f(2);
  Rng rng(28);
  const Matrix l = random_invertible(f, 6, rng);
  const MapOracle fl = induced_from_linear(l, 2);
  const MapOracle g = build_g(fl);
  for (int t = 0; t < 30; ++t) {
    const CompPair a = random_pair(f, 6, 2, rng);
    const LiftingBetas b = lifting_betas(a);
    CHECK(lift_pair(b.beta1, b.beta2) == a);
    CHECK(lift_pair(g(b.beta1), g(b.beta2)) == fl(a));
  }
}

TEST_CASE("crosswise configuration at (4,2,2) has a larger intersection") {
  const Field f(2);
  const auto w = find_crosswise_witness(f, 4, 50, 1);
  REQUIRE(w.has_value());
  const auto& b = w->betas;
  CHECK(b.beta2.second.contains(b.beta1.first));
  CHECK(b.beta1.second.contains(b.beta2.first));
  std::vector<CompPair> brute;
  for (const auto& x : enumerate_pairs(f, 4, 2))
    if (incidence(x, b.beta1) != Incidence::None && incidence(x, b.beta2) != Incidence::None) brute.push_back(x);
  std::sort(brute.begin(), brute.end());
  CHECK(w->intersection == brute);
  CHECK(std::binary_search(brute.begin(), brute.end(), w->alpha));
  CHECK(std::binary_search(brute.begin(), brute.end(), opposite(w->alpha)));
  CHECK(brute.size() > 2);
  CHECK_FALSE(w->mixed.empty());
  for (const auto& x : w->mixed) {
    const auto i1 = incidence(x, b.beta1), i2 = incidence(x, b.beta2);
    CHECK(i1 != i2);
    CHECK(i1 != Incidence::None);
    CHECK(i2 != Incidence::None);
  }
  CHECK(to_json(*w).contains("alpha"));
}
