#include "grasslab/comp_pair.hpp"

#include <string>

#include "grasslab/combinatorics.hpp"
#include "grasslab/error.hpp"

namespace grasslab {

bool is_valid_pair(const Subspace& first, const Subspace& second) {
  return first.ambient() == second.ambient() && first.field() == second.field() && complementary(first, second);
}

CompPair CompPair::make(Subspace first, Subspace second) {
  if (!is_valid_pair(first, second))
    throw Error(ErrorCode::BadInput, "components of dimension " + std::to_string(first.dim()) + " and " +
                                         std::to_string(second.dim()) + " are not complementary");
  return CompPair{std::move(first), std::move(second)};
}

CompPair opposite(const CompPair& a) { return CompPair{a.second, a.first}; }

namespace {

void append_subspace_key(std::string& out, const Subspace& s) {
  static constexpr char kDigits[] = "0123456789abc";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r > 0) out.push_back('.');
    for (std::size_t c = 0; c < s.ambient(); ++c) out.push_back(kDigits[s.basis()(r, c)]);
  }
}

}  // namespace

std::string subspace_key(const Subspace& s) {
  std::string out;
  append_subspace_key(out, s);
  return out;
}

std::string pair_key(const CompPair& a) {
  std::string out;
  append_subspace_key(out, a.first);
  out.push_back('|');
  append_subspace_key(out, a.second);
  return out;
}

std::string class_key(const CompPair& a) {
  const CompPair op = opposite(a);
  return pair_key(op < a ? op : a);
}

std::uint64_t count_complements(const Subspace& s) {
  const std::uint64_t k = s.dim();
  return saturating_pow(static_cast<std::uint64_t>(s.field().p()), k * (s.ambient() - k));
}

std::uint64_t pair_space_size(std::size_t n, std::size_t k, const Field& field) {
  if (k > n) return 0;
  return saturating_mul(grassmannian_size(n, k, field),
                        saturating_pow(static_cast<std::uint64_t>(field.p()), k * (n - k)));
}

void for_each_complement(const Subspace& s, const std::function<void(const Subspace&)>& fn) {
  const Field& f = s.field();
  const std::size_t n = s.ambient();
  const std::size_t k = s.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto c : s.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> coords;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) coords.push_back(c);
  const std::size_t m = coords.size();
  // Row j of a complement is e_{coords[j]} + sum_i a(j, i) s_i.
  std::vector<Elem> a(m * k, 0);
  const Elem top = static_cast<Elem>(f.p() - 1);
  while (true) {
    Matrix rows(f, m, n);
    for (std::size_t j = 0; j < m; ++j) {
      rows.set(j, coords[j], 1);
      for (std::size_t i = 0; i < k; ++i) {
        const Elem coef = a[j * k + i];
        if (coef == 0) continue;
        for (std::size_t c = 0; c < n; ++c) rows.set(j, c, f.add(rows(j, c), f.mul(coef, s.basis()(i, c))));
      }
    }
    fn(Subspace::span(std::move(rows)));
    std::size_t pos = a.size();
    while (pos > 0) {
      if (a[pos - 1] < top) {
        ++a[pos - 1];
        break;
      }
      a[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
}

void for_each_pair(const Field& field, std::size_t n, std::size_t k, const std::function<void(const CompPair&)>& fn,
                   std::uint64_t budget) {
  if (k > n) throw Error(ErrorCode::ParamOutOfRange, "pair dimension exceeds ambient dimension");
  const std::uint64_t count = pair_space_size(n, k, field);
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded, "pair space holds " + std::to_string(count) + " elements, budget is " +
                                               std::to_string(budget));
  for_each_subspace(field, n, k, [&](const Subspace& s) {
    for_each_complement(s, [&](const Subspace& u) { fn(CompPair{s, u}); });
  });
}

std::vector<CompPair> enumerate_pairs(const Field& field, std::size_t n, std::size_t k, std::uint64_t budget) {
  std::vector<CompPair> out;
  for_each_pair(field, n, k, [&](const CompPair& a) { out.push_back(a); }, budget);
  return out;
}

Incidence incidence(const CompPair& alpha, const CompPair& gamma) {
  require_same_ambient(alpha.first, gamma.first);
  if (incident(alpha.first, gamma.first) && incident(alpha.second, gamma.second)) return Incidence::Plus;
  if (incident(alpha.second, gamma.first) && incident(alpha.first, gamma.second)) return Incidence::Minus;
  return Incidence::None;
}

bool matches(Incidence inc, Sign sign) {
  switch (sign) {
    case Sign::Plus: return inc == Incidence::Plus;
    case Sign::Minus: return inc == Incidence::Minus;
    case Sign::Both: return inc != Incidence::None;
  }
  return false;
}

IncidentSet::IncidentSet(CompPair center, std::size_t k, Sign sign) : center_(std::move(center)), k_(k), sign_(sign) {
  const std::size_t n = center_.ambient();
  if (k_ < 1 || k_ + 1 > n)
    throw Error(ErrorCode::ParamOutOfRange, "incident-set layer must satisfy 1 <= k <= n - 1");
}

bool IncidentSet::contains(const CompPair& x) const {
  if (x.k() != k_ || x.ambient() != center_.ambient()) return false;
  return matches(incidence(x, center_), sign_);
}

namespace {

/// Subspaces of dimension d incident to `ref`.
std::vector<Subspace> incident_candidates(const Subspace& ref, std::size_t d, std::uint64_t budget) {
  const Field& f = ref.field();
  const std::size_t n = ref.ambient();
  std::vector<Subspace> out;
  auto push = [&](const Subspace& s) { out.push_back(s); };
  if (d >= ref.dim())
    for_each_between(ref, Subspace::whole(f, n), d, push, budget);
  else
    for_each_between(Subspace::zero(f, n), ref, d, push, budget);
  return out;
}

}  // namespace

void IncidentSet::for_each_signed(bool plus, const std::function<void(const CompPair&)>& fn,
                                  std::uint64_t budget) const {
  const std::size_t n = center_.ambient();
  // Plus: first ~ center.first, second ~ center.second. Minus swaps the roles
  // of the centre's components.
  const Subspace& ref_first = plus ? center_.first : center_.second;
  const Subspace& ref_second = plus ? center_.second : center_.first;
  const auto firsts = incident_candidates(ref_first, k_, budget);
  const auto seconds = incident_candidates(ref_second, n - k_, budget);
  if (saturating_mul(firsts.size(), seconds.size()) > budget)
    throw Error(ErrorCode::BudgetExceeded, "incident set candidate grid exceeds budget");
  for (const auto& s : firsts)
    for (const auto& u : seconds)
      if (intersection_dim(s, u) == 0) fn(CompPair{s, u});
}

void IncidentSet::for_each(const std::function<void(const CompPair&)>& fn, std::uint64_t budget) const {
  if (sign_ != Sign::Minus) for_each_signed(true, fn, budget);
  if (sign_ != Sign::Plus)
    for_each_signed(
        false,
        [&](const CompPair& x) {
          // Elements that are also (+)-incident were reported as Plus.
          if (sign_ == Sign::Both && incidence(x, center_) == Incidence::Plus) return;
          fn(x);
        },
        budget);
}

std::vector<CompPair> IncidentSet::materialize(std::uint64_t budget) const {
  std::vector<CompPair> out;
  for_each([&](const CompPair& x) { out.push_back(x); }, budget);
  return out;
}

}  // namespace grasslab
