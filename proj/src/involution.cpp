#include "grasslab/involution.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "grasslab/base_subset.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

namespace {

void require_odd(const Field& f) {
  if (f.is_binary()) throw Error(ErrorCode::CharTwo, "involution eigenspaces need odd characteristic");
}

Subspace eigenspace(const Matrix& u, Elem eigenvalue) {
  const Matrix shifted = u - scaled(Matrix::identity(u.field(), u.rows()), eigenvalue);
  Matrix k = kernel(shifted);
  auto piv = rref_in_place(k);
  return Subspace::from_canonical(std::move(k), std::move(piv));
}

}  // namespace

Involution::Involution(Matrix u)
    : u_(std::move(u)), plus_(Subspace::zero(u_.field(), u_.cols())), minus_(Subspace::zero(u_.field(), u_.cols())) {
  require_odd(u_.field());
  if (!u_.square()) throw Error(ErrorCode::BadInput, "involution matrix must be square");
  if (!(u_ * u_ == Matrix::identity(u_.field(), u_.rows())))
    throw Error(ErrorCode::BadInput, "matrix does not square to the identity");
  plus_ = eigenspace(u_, 1);
  minus_ = eigenspace(u_, u_.field().neg(1));
}

Involution pair_to_involution(const CompPair& pair) {
  const Field& f = pair.field();
  require_odd(f);
  const std::size_t n = pair.ambient();
  const Matrix basis = vstack(pair.first.basis(), pair.second.basis());
  const Matrix change = transpose(basis);  // columns: eigenvectors
  Matrix diag = Matrix::identity(f, n);
  for (std::size_t i = pair.k(); i < n; ++i) diag.set(i, i, f.neg(1));
  return Involution(change * diag * invert(change));
}

CompPair involution_to_pair(const Involution& u) { return CompPair{u.plus(), u.minus()}; }

bool commutes(const Involution& u, const Involution& v) {
  return u.matrix() * v.matrix() == v.matrix() * u.matrix();
}

Involution conjugate(const Involution& u, const Matrix& l) { return Involution(l * u.matrix() * invert(l)); }

Involution dual_conjugate(const Involution& u, const Matrix& d) {
  // With s(x) = (D x)ᵀ the contragredient of u is transported back through
  // the transpose of D: result = D⁻ᵀ uᵀ Dᵀ = (D u D⁻¹)ᵀ.
  return Involution(transpose(d * u.matrix() * invert(d)));
}

Involution negate(const Involution& u) { return Involution(-u.matrix()); }

std::size_t CommutativityGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adjacency) deg += a.size();
  return deg / 2;
}

CommutativityGraph build_commutativity_graph(const Field& field, std::size_t n, std::size_t k, std::uint64_t budget) {
  require_odd(field);
  CommutativityGraph g;
  g.vertices = enumerate_pairs(field, n, k, budget);
  std::vector<Involution> invs;
  invs.reserve(g.vertices.size());
  for (const auto& a : g.vertices) invs.push_back(pair_to_involution(a));
  g.adjacency.assign(g.vertices.size(), {});
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t j = i + 1; j < invs.size(); ++j)
      if (commutes(invs[i], invs[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

std::vector<std::vector<std::size_t>> maximal_cliques(const std::vector<std::vector<std::size_t>>& adjacency) {
  using Bits = boost::dynamic_bitset<>;
  const std::size_t n = adjacency.size();
  std::vector<Bits> nbr(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : adjacency[v]) nbr[v].set(w);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> clique;
  std::function<void(Bits, Bits)> expand = [&](Bits cand, Bits excl) {
    if (cand.none()) {
      if (excl.none()) {
        auto c = clique;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    std::size_t pivot = Bits::npos;
    std::size_t best = 0;
    const Bits pool = cand | excl;
    for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
      const std::size_t c = (cand & nbr[u]).count();
      if (pivot == Bits::npos || c > best) {
        pivot = u;
        best = c;
      }
    }
    const Bits todo = cand - nbr[pivot];
    for (auto v = todo.find_first(); v != Bits::npos; v = todo.find_next(v)) {
      clique.push_back(v);
      expand(cand & nbr[v], excl & nbr[v]);
      clique.pop_back();
      cand.reset(v);
      excl.set(v);
    }
  };
  Bits all(n);
  all.set();
  expand(all, Bits(n));
  std::sort(out.begin(), out.end());
  return out;
}

CommutativityReport verify_commutativity_correspondence(const Field& field, std::size_t n, std::size_t k,
                                                        std::uint64_t budget) {
  const CommutativityGraph g = build_commutativity_graph(field, n, k, budget);
  const auto cliques = maximal_cliques(g.adjacency);

  std::unordered_map<CompPair, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  std::set<std::vector<std::size_t>> bases;
  for_each_frame(
      field, n,
      [&](const Frame& frame) {
        const BaseSubset base(frame, k);
        std::vector<std::size_t> ids;
        for (const auto& m : base.members()) ids.push_back(index.at(m));
        std::sort(ids.begin(), ids.end());
        bases.insert(std::move(ids));
      },
      budget);

  const std::set<std::vector<std::size_t>> clique_set(cliques.begin(), cliques.end());
  return CommutativityReport{g.vertices.size(), g.edge_count(), cliques.size(), bases.size(), clique_set == bases};
}

}  // namespace grasslab
