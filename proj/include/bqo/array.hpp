#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqo/barrier.hpp"
#include "bqo/ordinal.hpp"
#include "bqo/poset.hpp"

namespace bqo {

template <typename T>
concept TargetOrder = requires(const T& t, const typename T::value_type& a,
                               const typename T::value_type& b) {
  { t.leq(a, b) } -> std::convertible_to<bool>;
};

struct PosetTarget {
  using value_type = int;
  const Poset* order = nullptr;
  bool leq(int a, int b) const { return order->leq(a, b); }
};

struct OmegaAlphaTarget {
  using value_type = DecSeq;
  const Poset* alpha = nullptr;
  bool leq(const DecSeq& a, const DecSeq& b) const {
    return omega_alpha_compare(a, b, *alpha) != Cmp::gt;
  }
};

inline bool value_equal(int a, int b) { return a == b; }
inline bool value_equal(const DecSeq& a, const DecSeq& b) { return a.entries == b.entries; }

/// Finite surrogate of a Q-array: a fragment plus a total value map on its
/// members (parallel to Fragment::members()). The target is held by
/// pointer; callers keep the underlying order alive.
template <TargetOrder T>
struct ArrayFragment {
  Fragment domain;
  std::vector<typename T::value_type> values;
  T target;

  const typename T::value_type& value_at(const FinSeq& member) const {
    auto idx = domain.member_index(member);
    if (!idx) throw domain_error("MemberNotFound: " + member.str());
    return values[*idx];
  }
};

using PosetArray = ArrayFragment<PosetTarget>;
using SeqArray = ArrayFragment<OmegaAlphaTarget>;

enum class ArrayClass { Good, Bad, VacuouslyBad };

struct ClassifyResult {
  ArrayClass cls;
  std::optional<std::pair<FinSeq, FinSeq>> witness;  // least good pair
};

/// Good with the least witness when some triangle pair (s,t) has
/// f(s) <= f(t); bad when triangle pairs exist but none is good;
/// vacuously bad when the fragment has no triangle pair at all.
template <TargetOrder T>
ClassifyResult classify_fragment(const ArrayFragment<T>& f) {
  if (f.values.size() != f.domain.members().size())
    throw domain_error("value map must be total on the members");
  const auto& ms = f.domain.members();
  bool any_pair = false;
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j) {
      if (i == j || !triangle_lt(ms[i], ms[j])) continue;
      any_pair = true;
      if (f.target.leq(f.values[i], f.values[j]))
        return {ArrayClass::Good, std::make_pair(ms[i], ms[j])};
    }
  return {any_pair ? ArrayClass::Bad : ArrayClass::VacuouslyBad, std::nullopt};
}

namespace detail {

/// Triangle pairs (i, j) over the member list, in lexicographic order.
std::vector<std::pair<int, int>> triangle_arcs(const Fragment& f);

/// Finds the lexicographically least assignment (w.r.t. the given domain
/// orders) such that no arc (i,j) has leq(v[i], v[j]). Arc consistency is
/// established before branching; the DFS then forward-checks. Each value
/// probe counts one node against the budget.
template <typename V, typename Leq>
std::optional<std::vector<V>> solve_bad_csp(std::vector<std::vector<V>> domains,
                                            const std::vector<std::pair<int, int>>& arcs,
                                            const Leq& leq, long long budget) {
  const int m = static_cast<int>(domains.size());
  long long nodes = 0;
  auto charge = [&]() {
    if (++nodes > budget)
      throw budget_exceeded("bad-array search exceeded the budget of " + std::to_string(budget) +
                            " nodes");
  };

  // AC-3 over the binary not-leq constraints.
  std::vector<std::pair<int, int>> queue = arcs;
  while (!queue.empty()) {
    auto [i, j] = queue.back();
    queue.pop_back();
    bool changed_i = false, changed_j = false;
    auto& di = domains[i];
    auto& dj = domains[j];
    for (size_t a = 0; a < di.size();) {
      charge();
      bool supported = false;
      for (const V& b : dj)
        if (!leq(di[a], b)) {
          supported = true;
          break;
        }
      if (!supported) {
        di.erase(di.begin() + a);
        changed_i = true;
      } else {
        ++a;
      }
    }
    for (size_t b = 0; b < dj.size();) {
      charge();
      bool supported = false;
      for (const V& a : di)
        if (!leq(a, dj[b])) {
          supported = true;
          break;
        }
      if (!supported) {
        dj.erase(dj.begin() + b);
        changed_j = true;
      } else {
        ++b;
      }
    }
    if (di.empty() || dj.empty()) return std::nullopt;
    if (changed_i || changed_j)
      for (const auto& arc : arcs)
        if (arc.first == i || arc.first == j || arc.second == i || arc.second == j)
          queue.push_back(arc);
  }

  // DFS in variable order with forward checking; first solution is least.
  std::vector<V> assigned(m > 0 ? static_cast<size_t>(m) : 0, V{});
  auto dfs = [&](auto&& self, int var, std::vector<std::vector<V>> doms) -> bool {
    if (var == m) return true;
    for (const V& v : doms[var]) {
      charge();
      auto pruned = doms;
      pruned[var] = {v};
      bool wipeout = false;
      for (auto [i, j] : arcs) {
        if (i == var && j > var) {
          auto& d = pruned[j];
          d.erase(std::remove_if(d.begin(), d.end(), [&](const V& b) { return leq(v, b); }),
                  d.end());
          if (d.empty()) wipeout = true;
        } else if (j == var && i > var) {
          auto& d = pruned[i];
          d.erase(std::remove_if(d.begin(), d.end(), [&](const V& a) { return leq(a, v); }),
                  d.end());
          if (d.empty()) wipeout = true;
        }
        if (wipeout) break;
      }
      if (wipeout) continue;
      if (self(self, var + 1, std::move(pruned))) {
        assigned[var] = v;
        return true;
      }
    }
    return false;
  };
  if (!dfs(dfs, 0, std::move(domains))) return std::nullopt;
  return assigned;
}

}  // namespace detail

/// Least (value-lexicographic) non-vacuous bad assignment of Q values on the
/// fragment, or absent. Throws budget_exceeded when the search gives up.
std::optional<PosetArray> search_bad_fragment(const Fragment& f, const Poset& q,
                                              const SearchOptions& opts = {});

/// Largest N <= nmax such that [0,N)^k admits a non-vacuous bad fragment
/// into Q; 0 when none does. Badness is downward closed in N, so the scan
/// stops at the first failure.
int max_bad_horizon(int k, const Poset& q, int nmax, const SearchOptions& opts = {});

/// Projects an array into a sum onto the index poset. Throws domain_error
/// (NotASumTarget) when the array's target is not the sum's combined order.
PosetArray first_coordinate_projection(const PosetArray& f, const SumOrder& sum);

struct StabilizeResult {
  FinSeq at;          // least member whose tail has the constant index
  int index_value;    // i = f0(at)
  PosetArray tail;    // component values on B/at, into summand i
  bool degenerate;    // B/at has no members
};

/// Least member s such that the index projection assumes the constant value
/// f0(s) on B/s, together with the component array on the tail. Requires a
/// bad array (throws domain_error NotBad otherwise); absent only for the
/// memberless fragment.
std::optional<StabilizeResult> stabilize_first_coordinate(const PosetArray& f,
                                                          const SumOrder& sum);

/// Bad [V]^1 array from a strictly decreasing list in omega^alpha: the j-th
/// smallest base element is mapped to sigmas[j]. Throws domain_error
/// (NotDescending) unless the list strictly decreases.
SeqArray induced_from_descending(const std::vector<DecSeq>& sigmas, const Poset& alpha,
                                 std::vector<int> base);

/// Least member r such that every value on B/r is nonempty with a head entry
/// equal to g(r)'s head. Requires a bad array.
std::optional<FinSeq> stabilize_head_entry(const SeqArray& g);

/// Values on B/r with their first entries removed. Requires g bad, heads
/// constant on B/r (NotStabilized) and nonempty values (EmptyValueSequence).
/// The result is bad and pointwise strictly below g under the suffix ranking.
SeqArray head_removal_derivation(const SeqArray& g, const FinSeq& r);

/// Partial ranking of a poset: a partial order contained in <=_Q (finite,
/// hence well-founded). Stored as a dense relation.
class PosetRanking {
public:
  using value_type = int;

  static PosetRanking identity(const Poset& q);
  static PosetRanking discrete(const Poset& q);
  /// Diagonal is implied; throws domain_error unless the closure of the
  /// pairs is a transitive subrelation of <=_Q.
  static PosetRanking from_pairs(const Poset& q, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }
  bool leq(int a, int b) const { return le_[static_cast<size_t>(a) * n_ + b] != 0; }
  std::vector<int> strict_predecessors(int v) const;

private:
  int n_ = 0;
  std::vector<uint8_t> le_;
};

/// The suffix ranking on omega^alpha (sigma <=' tau iff sigma is a suffix).
struct SuffixRanking {
  using value_type = DecSeq;
  bool leq(const DecSeq& a, const DecSeq& b) const { return suffix_leq(a, b); }
  std::vector<DecSeq> strict_predecessors(const DecSeq& v) const {
    std::vector<DecSeq> out;
    for (int keep = 0; keep < v.length(); ++keep)
      out.push_back(DecSeq{std::vector<int>(v.entries.end() - keep, v.entries.end())});
    return out;  // ascending: suffixes ordered by length
  }
};

template <typename R, typename T>
concept RankingFor = TargetOrder<T> && requires(const R& r, const typename T::value_type& v) {
  { r.leq(v, v) } -> std::convertible_to<bool>;
  { r.strict_predecessors(v) } -> std::same_as<std::vector<typename T::value_type>>;
};

enum class PointwiseOrder { Leq, Lt, Neither };

namespace detail {

/// Member indices that prefix at least one size-R sequence over `base`.
std::vector<int> alive_members(const Fragment& f, const std::vector<int>& base, int rank);

template <TargetOrder T>
int unique_prefix_index(const ArrayFragment<T>& f, const FinSeq& x) {
  const auto& ms = f.domain.members();
  int found = -1;
  for (size_t i = 0; i < ms.size(); ++i)
    if (ms[i].prefix_of(x)) {
      if (found >= 0)
        throw domain_error("fragment violates the block condition at " + x.str());
      found = static_cast<int>(i);
    }
  if (found < 0)
    throw domain_error("IncompleteFragment: " + x.str() + " has no member prefix");
  return found;
}

void for_each_increasing(const std::vector<int>& base, int r,
                         const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace detail

/// Compares two arrays pointwise under a ranking, at the sequence level:
/// every increasing size-R* sequence X over base(F) (R* the larger rank) is
/// looked up in both fragments. Throws domain_error on IncompatibleBases or
/// IncompleteFragment. Vacuous comparisons (no such X) count as leq.
template <TargetOrder T, RankingFor<T> R>
PointwiseOrder compare_pointwise(const ArrayFragment<T>& f, const ArrayFragment<T>& g,
                                 const R& ranking) {
  for (int b : f.domain.base())
    if (!std::binary_search(g.domain.base().begin(), g.domain.base().end(), b))
      throw domain_error("IncompatibleBases: base(F) must be contained in base(G)");

  const int rstar = std::max(f.domain.rank(), g.domain.rank());
  bool all_leq = true, all_lt = true, any = false;
  detail::for_each_increasing(f.domain.base(), rstar, [&](const std::vector<int>& pick) {
    FinSeq x(pick);
    const auto& vf = f.values[detail::unique_prefix_index(f, x)];
    const auto& vg = g.values[detail::unique_prefix_index(g, x)];
    any = true;
    bool le = ranking.leq(vf, vg);
    all_leq = all_leq && le;
    all_lt = all_lt && le && !value_equal(vf, vg);
    return all_leq;  // keep scanning while leq can still hold
  });
  if (!all_leq) return PointwiseOrder::Neither;
  if (any && all_lt) return PointwiseOrder::Lt;
  return PointwiseOrder::Leq;
}

template <TargetOrder T>
struct MinimalBadResult {
  ArrayFragment<T> array;
  bool degenerate;  // input was vacuously bad and is returned unchanged
};

/// Finite minimal-bad-array search: descends pointwise through strict
/// ranking predecessors while badness holds. The result F satisfies
/// compare_pointwise(F, F0, ranking) in {leq, lt} and admits no bad array
/// strictly below it on the same domain.
template <TargetOrder T, RankingFor<T> R>
MinimalBadResult<T> minimal_bad_search(const ArrayFragment<T>& f0, const R& ranking,
                                       const SearchOptions& opts = {}) {
  auto cls = classify_fragment(f0);
  if (cls.cls == ArrayClass::Good)
    throw domain_error("NotBad: minimal bad search needs a bad array");
  if (cls.cls == ArrayClass::VacuouslyBad) return {f0, true};

  const auto arcs = detail::triangle_arcs(f0.domain);
  const auto alive =
      detail::alive_members(f0.domain, f0.domain.base(), f0.domain.rank());

  ArrayFragment<T> current = f0;
  for (;;) {
    // Descend: look for a bad assignment strictly below on every member
    // that is visible at the horizon; invisible members keep their values.
    std::vector<std::vector<typename T::value_type>> domains;
    domains.reserve(current.values.size());
    for (size_t i = 0; i < current.values.size(); ++i) {
      if (std::binary_search(alive.begin(), alive.end(), static_cast<int>(i)))
        domains.push_back(ranking.strict_predecessors(current.values[i]));
      else
        domains.push_back({current.values[i]});
    }
    auto leq = [&](const typename T::value_type& a, const typename T::value_type& b) {
      return current.target.leq(a, b);
    };
    auto next = detail::solve_bad_csp(std::move(domains), arcs, leq, opts.budget);
    if (!next) return {current, false};
    current.values = std::move(*next);
  }
}

}  // namespace bqo
