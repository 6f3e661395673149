#include "grasslab/base_subset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

BaseSubset::BaseSubset(Frame frame, std::size_t k) : frame_(std::move(frame)), k_(k) {
  const std::size_t n = frame_.size();
  if (k_ < 1 || k_ + 1 > n)
    throw Error(ErrorCode::ParamOutOfRange, "base subset layer must satisfy 1 <= k <= n - 1, got k = " +
                                                std::to_string(k_) + ", n = " + std::to_string(n));
  for (const auto& idx : combinations(n, k_)) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0, j = 0; i < n; ++i) {
      if (j < idx.size() && idx[j] == i)
        ++j;
      else
        rest.push_back(i);
    }
    members_.push_back(CompPair{frame_.span_of(idx), frame_.span_of(rest)});
    index_sets_.push_back(idx);
  }
}

std::optional<std::size_t> BaseSubset::index_of(const CompPair& a) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == a) return i;
  return std::nullopt;
}

BaseSubset base_subset(const Frame& frame, std::size_t k) { return BaseSubset(frame, k); }

std::vector<std::size_t> incident_members(const BaseSubset& base, const CompPair& beta, Sign sign) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (matches(incidence(base.members()[i], beta), sign)) out.push_back(i);
  return out;
}

InexactnessProfile profile(const std::vector<std::size_t>& subset, const BaseSubset& base) {
  if (subset.empty()) throw Error(ErrorCode::EmptySet, "profile of an empty subset");
  InexactnessProfile out;
  const auto& lines = base.frame().lines();
  for (const auto& line : lines) {
    std::optional<Subspace> acc;
    for (auto m : subset) {
      const CompPair& a = base.members().at(m);
      const Subspace& comp = a.first.contains(line) ? a.first : a.second;
      acc = acc ? intersect(*acc, comp) : comp;
    }
    out.spans.push_back(*acc);
  }
  return out;
}

bool is_exact(const std::vector<std::size_t>& subset, const BaseSubset& base) {
  const auto prof = profile(subset, base);
  return std::all_of(prof.spans.begin(), prof.spans.end(), [](const Subspace& s) { return s.dim() == 1; });
}

std::vector<MaximalInexactSubset> maximal_inexact_subsets(const BaseSubset& base) {
  const std::size_t n = base.frame().size();
  const std::size_t k = base.k();
  if (n < 5)
    throw Error(ErrorCode::Unsupported, "maximal inexact subsets are determined by the 2-layer only for n >= 5");
  if (k < 2 || k + 2 > n) throw Error(ErrorCode::ParamOutOfRange, "maximal inexact subsets need 2 <= k <= n - 2");

  const BaseSubset two = base.associated(2);
  std::vector<MaximalInexactSubset> out;
  for (const auto& beta : two.members()) {
    auto members = incident_members(base, beta);
    if (is_exact(members, base))
      throw std::logic_error("incident set of a 2-layer element is unexpectedly exact");
    for (std::size_t x = 0; x < base.size(); ++x) {
      if (std::binary_search(members.begin(), members.end(), x)) continue;
      auto extended = members;
      extended.insert(std::upper_bound(extended.begin(), extended.end(), x), x);
      if (!is_exact(extended, base))
        throw std::logic_error("incident set of a 2-layer element is not maximal inexact");
    }
    out.push_back({std::move(members), beta});
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].members == out[b].members)
        throw Error(ErrorCode::AmbiguousMatch, "two 2-layer elements share an incident set");

  // An inexact subset has a line P_i whose profile span W has dimension >= 2,
  // so it lies in R(i, W) = {members whose component through P_i contains W}.
  // Each R(i, W) must sit inside one of the sets above.
  const auto& lines = base.frame().lines();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t size = 2; size + 2 <= n; ++size) {
      for (const auto& w_idx : combinations(n, size)) {
        if (!std::binary_search(w_idx.begin(), w_idx.end(), i)) continue;
        const Subspace w = base.frame().span_of(w_idx);
        std::vector<std::size_t> region;
        for (std::size_t m = 0; m < base.size(); ++m) {
          const CompPair& a = base.members()[m];
          const Subspace& comp = a.first.contains(lines[i]) ? a.first : a.second;
          if (comp.contains(w)) region.push_back(m);
        }
        const bool covered = std::any_of(out.begin(), out.end(), [&](const MaximalInexactSubset& cand) {
          return std::includes(cand.members.begin(), cand.members.end(), region.begin(), region.end());
        });
        if (!covered)
          throw std::logic_error("profile region escapes every 2-layer incident set");
      }
    }
  }
  return out;
}

std::size_t pair_distance(const CompPair& a, const CompPair& b) {
  if (a.k() != b.k()) throw Error(ErrorCode::DimMismatch, "pair distance across different layers");
  return distance(a.first, b.first);
}

std::size_t pair_distance(const CompPair& a, const CompPair& b, const BaseSubset& base) {
  if (!base.contains(a) || !base.contains(b))
    throw Error(ErrorCode::BadInput, "pair_distance: pairs are not members of the given base subset");
  const std::size_t d = pair_distance(a, b);
  if (distance(a.second, b.second) != d)
    throw Error(ErrorCode::BadInput, "component distances disagree inside a base subset");
  return d;
}

}  // namespace grasslab
