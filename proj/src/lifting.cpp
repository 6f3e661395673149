#include "grasslab/lifting.hpp"

#include <algorithm>

#include "grasslab/base_subset.hpp"
#include "grasslab/error.hpp"
#include "grasslab/random.hpp"

namespace grasslab {

namespace {

Subspace rows_span(const Subspace& s, std::size_t first, std::size_t count) {
  return Subspace::span(s.basis().row_block(first, count));
}

}  // namespace

LiftingBetas lifting_betas(const CompPair& alpha) {
  const std::size_t k = alpha.k();
  if (k < 2) throw Error(ErrorCode::ParamOutOfRange, "lifting needs k >= 2");
  const Subspace& s = alpha.first;
  const Subspace q1 = rows_span(s, 0, k - 1);
  const Subspace q2 = rows_span(s, 1, k - 1);
  const Subspace t1 = alpha.second + rows_span(s, k - 1, 1);
  const Subspace t2 = alpha.second + rows_span(s, 0, 1);
  return {CompPair{q1, t1}, CompPair{q2, t2}};
}

std::vector<CompPair> lifting_intersection(const LiftingBetas& betas, std::size_t k, Sign sign,
                                           std::uint64_t budget) {
  const IncidentSet first(betas.beta1, k, sign);
  const IncidentSet second(betas.beta2, k, sign);
  std::vector<CompPair> out;
  first.for_each(
      [&](const CompPair& x) {
        if (second.contains(x)) out.push_back(x);
      },
      budget);
  std::sort(out.begin(), out.end());
  return out;
}

CompPair lift_pair(const CompPair& gamma1, const CompPair& gamma2) {
  return CompPair{gamma1.first + gamma2.first, intersect(gamma1.second, gamma2.second)};
}

LiftingReport verify_lifting_identity(const Field& field, std::size_t n, std::size_t k, std::size_t samples,
                                      std::uint64_t seed) {
  if (k < 2 || k > n - k) throw Error(ErrorCode::ParamOutOfRange, "lifting identity needs 2 <= k <= n - k");
  LiftingReport r;
  r.n = n;
  r.k = k;
  r.p = field.p();
  r.self_dual_layer = (n == 2 * k);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CompPair alpha = random_pair(field, n, k, rng);
    const auto got = lifting_intersection(lifting_betas(alpha), k, r.self_dual_layer ? Sign::Both : Sign::Plus);
    std::vector<CompPair> want{alpha};
    if (r.self_dual_layer) want.push_back(opposite(alpha));
    std::sort(want.begin(), want.end());
    ++r.samples;
    if (got == want)
      ++r.holds;
    else if (!r.counterexample)
      r.counterexample = alpha;
  }
  return r;
}

std::optional<CrosswiseWitness> find_crosswise_witness(const Field& field, std::size_t n, std::size_t attempts,
                                                       std::uint64_t seed) {
  if (n % 2 != 0) throw Error(ErrorCode::NotSelfDualLayer, "crosswise configuration needs n = 2k");
  const std::size_t k = n / 2;
  const BaseSubset standard(standard_frame(field, n), k);
  Rng rng(seed);
  for (std::size_t i = 0; i < attempts; ++i) {
    const CompPair alpha = i == 0 ? standard.members().front() : random_pair(field, n, k, rng);
    const LiftingBetas b = lifting_betas(alpha);
    if (!b.beta2.second.contains(b.beta1.first) || !b.beta1.second.contains(b.beta2.first)) continue;
    auto inter = lifting_intersection(b, k, Sign::Both);
    std::vector<CompPair> want{alpha, opposite(alpha)};
    std::sort(want.begin(), want.end());
    if (inter == want) continue;
    CrosswiseWitness w{alpha, b, std::move(inter), {}};
    for (const auto& x : w.intersection) {
      const Incidence a = incidence(x, b.beta1);
      const Incidence c = incidence(x, b.beta2);
      if ((a == Incidence::Plus && c == Incidence::Minus) || (a == Incidence::Minus && c == Incidence::Plus))
        w.mixed.push_back(x);
    }
    return w;
  }
  return std::nullopt;
}

OppositeSymmetryReport verify_opposite_symmetry(const Field& field, std::size_t n, std::uint64_t budget) {
  if (n % 2 != 0) throw Error(ErrorCode::NotSelfDualLayer, "opposite symmetry inside a base subset needs n = 2k");
  const std::size_t k = n / 2;
  OppositeSymmetryReport r;
  for_each_frame(
      field, n,
      [&](const Frame& frame) {
        ++r.frames;
        const BaseSubset base(frame, k);
        for (const auto& alpha : base.members()) {
          ++r.elements;
          if (incident_members(base, alpha) == incident_members(base, opposite(alpha))) ++r.holds;
        }
      },
      budget);
  return r;
}

}  // namespace grasslab
