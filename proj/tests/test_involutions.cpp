#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"
#include "grasslab/involution.hpp"
#include "grasslab/json_io.hpp"
#include "grasslab/oracle.hpp"
#include "grasslab/random.hpp"

using namespace grasslab;

namespace {

Subspace eigenspace(const Matrix& m, Elem lambda) {
  const Field& f = m.field();
  return Subspace::span(kernel(m - scaled(Matrix::identity(f, m.rows()), lambda)));
}

}  // namespace

TEST_CASE("coordinate pair gives a diagonal involution") {
  const Field f(3);
  const CompPair a{Subspace::coordinate(f, 3, std::vector<std::size_t>{0}),
                   Subspace::coordinate(f, 3, std::vector<std::size_t>{1, 2})};
  const Involution u = pair_to_involution(a);
  CHECK(u.matrix() == Matrix::from_rows(f, 3, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  CHECK(u.k() == 1);
  CHECK(involution_to_pair(u) == a);
}

TEST_CASE("involutions need odd characteristic and u^2 = I") {
  const Field f2(2);
  const CompPair a{Subspace::coordinate(f2, 3, std::vector<std::size_t>{0}),
                   Subspace::coordinate(f2, 3, std::vector<std::size_t>{1, 2})};
  try {
    pair_to_involution(a);
    FAIL("expected CharTwo");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CharTwo);
  }
  CHECK_THROWS_AS(Involution(Matrix::from_rows(Field(3), 2, {{1, 1}, {0, 1}})), Error);
  CHECK_THROWS_AS(build_commutativity_graph(f2, 3, 1), Error);
}

TEST_CASE("pair and involution correspond bijectively") {
  struct Case {
    std::size_t n, k, size;
  };
  for (const Case c : {Case{3, 1, 117}, Case{4, 1, 1080}, Case{4, 2, 10530}}) {
    const Field f(3);
    const auto pairs = enumerate_pairs(f, c.n, c.k);
    CHECK(pairs.size() == c.size);
    std::set<Matrix> matrices;
    for (const auto& a : pairs) {
      const Involution u = pair_to_involution(a);
      CHECK(u.matrix() * u.matrix() == Matrix::identity(f, c.n));
      CHECK(eigenspace(u.matrix(), 1) == a.first);
      CHECK(eigenspace(u.matrix(), 2) == a.second);
      CHECK(involution_to_pair(u) == a);
      CHECK(involution_to_pair(Involution(u.matrix())) == a);
      matrices.insert(u.matrix());
    }
    CHECK(matrices.size() == c.size);
  }
}

TEST_CASE("the pair map is onto the involutions at (3,1,3)") {
  // Every 3x3 matrix over GF(3) with u^2 = I and a one-dimensional +1 space.
  const Field f(3);
  std::size_t involutions = 0;
  for (std::uint32_t code = 0; code < 19683; ++code) {
    Matrix m(f, 3, 3);
    std::uint32_t rest = code;
    for (std::size_t i = 0; i < 9; ++i) {
      m.set(i / 3, i % 3, static_cast<Elem>(rest % 3));
      rest /= 3;
    }
    if (!(m * m == Matrix::identity(f, 3)) || eigenspace(m, 1).dim() != 1) continue;
    ++involutions;
    CHECK(pair_to_involution(involution_to_pair(Involution(m))).matrix() == m);
  }
  CHECK(involutions == 117);
}

TEST_CASE("commutation examples") {
  const Field f(3);
  const Involution u(Matrix::from_rows(f, 3, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  const Involution v(Matrix::from_rows(f, 3, {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  CHECK(commutes(u, v));
  CHECK(commutes(u, u));
  Rng rng(1);
  std::size_t noncommuting = 0;
  for (int t = 0; t < 50; ++t) {
    const Matrix g = random_invertible(f, 3, rng);
    const Involution w = conjugate(u, g);
    const bool product = u.matrix() * w.matrix() == w.matrix() * u.matrix();
    CHECK(commutes(u, w) == product);
    noncommuting += !product;
  }
  CHECK(noncommuting > 0);
}

TEST_CASE("involutions of one frame commute") {
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const Field f(t % 2 ? 3 : 5);
    const Frame fr = random_frame(f, 4, rng);
    std::vector<Involution> family;
    for (std::size_t k = 1; k < 4; ++k) {
      const BaseSubset base(fr, k);
      for (const auto& a : base.members()) family.push_back(pair_to_involution(a));
    }
    for (const auto& u : family)
      for (const auto& v : family) CHECK(commutes(u, v));
  }
}

TEST_CASE("maximal commuting families at (3,1,3) are the base subsets") {
  const Field f(3);
  const auto g = build_commutativity_graph(f, 3, 1);
  CHECK(g.vertices.size() == 117);
  const auto cliques = maximal_cliques(g.adjacency);
  // |GL(3,3)| / (3! * 2^3): each frame has 3! orderings and 2 scalings per line.
  const std::uint64_t gl = (27 - 1) * (27 - 3) * (27 - 9);
  CHECK(gl == 11232);
  CHECK(cliques.size() == gl / (6 * 8));

  std::vector<std::vector<bool>> adj(117, std::vector<bool>(117, false));
  for (std::size_t v = 0; v < 117; ++v) {
    for (std::size_t w = 0; w < 117; ++w)
      if (v != w)
        CHECK(std::binary_search(g.adjacency[v].begin(), g.adjacency[v].end(), w) ==
              commutes(pair_to_involution(g.vertices[v]), pair_to_involution(g.vertices[w])));
    for (auto w : g.adjacency[v]) adj[v][w] = true;
  }
  std::set<std::set<CompPair>> from_cliques;
  for (const auto& c : cliques) {
    CHECK(c.size() == 3);
    for (auto a : c)
      for (auto b : c)
        if (a != b) CHECK(adj[a][b]);
    for (std::size_t x = 0; x < 117; ++x) {
      if (std::find(c.begin(), c.end(), x) != c.end()) continue;
      CHECK_FALSE(std::all_of(c.begin(), c.end(), [&](std::size_t m) { return adj[x][m]; }));
    }
    std::set<CompPair> members;
    for (auto v : c) members.insert(g.vertices[v]);
    from_cliques.insert(members);
  }
  std::set<std::set<CompPair>> from_frames;
  for_each_frame(f, 3, [&](const Frame& fr) {
    const BaseSubset base(fr, 1);
    from_frames.insert(std::set<CompPair>(base.members().begin(), base.members().end()));
  });
  CHECK(from_cliques == from_frames);

  const BaseSubset standard(standard_frame(f, 3), 1);
  CHECK(from_cliques.count(std::set<CompPair>(standard.members().begin(), standard.members().end())) == 1);
}

TEST_CASE("commutativity report") {
  const auto r = verify_commutativity_correspondence(Field(3), 3, 1);
  CHECK(r.vertices == 117);
  CHECK(r.cliques == 234);
  CHECK(r.base_subsets == 234);
  CHECK(r.equal);
  CHECK(r.edges == 702);
  const auto r2 = verify_commutativity_correspondence(Field(3), 3, 2);
  CHECK(r2.cliques == 234);
  CHECK(r2.equal);
  const Json j = to_json(r);
  CHECK(j.at("cliques") == 234);
  CHECK(j.at("base_subsets") == 234);
  CHECK(j.at("equal") == true);
}

TEST_CASE("commutativity report at (4,1,3)") {
  const auto r = verify_commutativity_correspondence(Field(3), 4, 1);
  CHECK(r.vertices == 1080);
  CHECK(r.cliques == frame_count(4, 3));
  CHECK(r.equal);
}

TEST_CASE("clique search on small hand-made graphs") {
  // Triangle 0-1-2 plus a pendant edge 2-3.
  const std::vector<std::vector<std::size_t>> adj{{1, 2}, {0, 2}, {0, 1, 3}, {2}};
  const auto c = maximal_cliques(adj);
  CHECK(c == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {2, 3}});
  CHECK(maximal_cliques({{}, {}}) == std::vector<std::vector<std::size_t>>{{0}, {1}});
}

TEST_CASE("conjugation transports eigenspaces") {
  const Field f(3);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = 1 + rng.below(3);
    const CompPair a = random_pair(f, 4, k, rng);
    const Involution u = pair_to_involution(a);
    CHECK(conjugate(u, Matrix::identity(f, 4)) == u);
    const Matrix l = random_invertible(f, 4, rng);
    const Involution w = conjugate(u, l);
    CHECK(w.matrix() == l * u.matrix() * invert(l));
    CHECK(eigenspace(w.matrix(), 1) == image(l, a.first));
    CHECK(eigenspace(w.matrix(), 2) == image(l, a.second));
    CHECK(involution_to_pair(w) == induced_from_linear(l, k)(a));
  }
  CHECK_THROWS_AS(conjugate(Involution(Matrix::identity(f, 2)), Matrix(f, 2, 2)), Error);
}

TEST_CASE("dual conjugation transports eigenspaces through annihilators") {
  Rng rng(4);
  for (int p : {3, 5}) {
    const Field f(p);
    for (int t = 0; t < 50; ++t) {
      const std::size_t k = 1 + rng.below(3);
      const CompPair a = random_pair(f, 4, k, rng);
      const Involution u = pair_to_involution(a);
      const Matrix d = random_invertible(f, 4, rng);
      const Involution w = dual_conjugate(u, d);
      CHECK(eigenspace(w.matrix(), 1) == annihilator(image(d, a.second)));
      CHECK(eigenspace(w.matrix(), static_cast<Elem>(p - 1)) == annihilator(image(d, a.first)));
      CHECK(involution_to_pair(w) == induced_from_duality(d, k)(a));
    }
  }
}

TEST_CASE("conjugation agrees with the induced maps on all of (3,1,3)") {
  const Field f(3);
  Rng rng(5);
  const Matrix l = random_invertible(f, 3, rng);
  const Matrix d = random_invertible(f, 3, rng);
  const MapOracle lin = induced_from_linear(l, 1);
  const MapOracle dual = induced_from_duality(d, 1);
  for (const auto& a : enumerate_pairs(f, 3, 1)) {
    const Involution u = pair_to_involution(a);
    CHECK(involution_to_pair(conjugate(u, l)) == lin(a));
    CHECK(involution_to_pair(dual_conjugate(u, d)) == dual(a));
  }
}

TEST_CASE("negation swaps the eigenspaces") {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const CompPair a = random_pair(Field(7), 5, 1 + rng.below(4), rng);
    const Involution u = pair_to_involution(a);
    const Involution v = negate(u);
    CHECK(v.matrix() == -u.matrix());
    CHECK(v.k() == 5 - u.k());
    CHECK(involution_to_pair(v) == opposite(a));
    CHECK(commutes(u, v));
  }
}

TEST_CASE("graph exports") {
  const auto g = build_commutativity_graph(Field(3), 3, 1);
  const std::string dot = to_dot(g);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 117);
  const Json j = adjacency_json(g);
  CHECK(j.at("vertices").size() == 117);
  CHECK(j.at("adjacency").size() == 117);
  CHECK(j.at("vertices")[0].get<std::string>().size() == 16);
  CHECK(pair_label(g.vertices[0]) == pair_label(g.vertices[0]));
  CHECK(pair_label(g.vertices[0]) != pair_label(g.vertices[1]));
}
