#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bqo/poset.hpp"

namespace bqo {

using TermId = std::int32_t;

/// Hash-consed store of hereditarily finite set terms over integer leaf
/// labels. Structurally equal terms share one id, so the ladder terms
/// dot(n)/ddot(n) stay linear as DAGs while exponential as trees.
///
/// Interning is guarded by a mutex (insert-if-absent); lookups of existing
/// nodes are plain vector reads.
class TermPool {
public:
  /// Guard for the recursive ladders; dot/ddot beyond this throw.
  static constexpr int kLadderBound = 2048;

  TermId leaf(int label);
  /// Children are deduplicated and sorted by id (creation order), matching
  /// set semantics without any semantic collapsing.
  TermId set(std::vector<TermId> children);
  TermId empty_set() { return set({}); }

  bool is_leaf(TermId t) const { return nodes_[t].leaf >= 0; }
  int leaf_label(TermId t) const { return nodes_[t].leaf; }
  std::span<const TermId> children(TermId t) const {
    const Node& n = nodes_[t];
    return {children_.data() + n.begin, static_cast<size_t>(n.end - n.begin)};
  }
  std::size_t size() const { return nodes_.size(); }

  /// dot(n) = {*, 0} ∪ {dot(m) | m < n} over 1+2; ddot uses 1 instead of 0.
  TermId dot(int n);
  TermId ddot(int n);

  /// Set of leaf labels, sorted; and the same support as a set-of-leaves term.
  std::vector<int> support_labels(TermId t) const;
  TermId support_term(TermId t);

  /// Number of distinct subterms (DAG size, including t itself).
  int dag_size(TermId t) const;

private:
  struct Node {
    int leaf;  // label for leaves, -1 for sets
    int begin, end;  // children range in children_
  };
  std::vector<Node> nodes_;
  std::vector<TermId> children_;
  std::unordered_map<std::uint64_t, std::vector<TermId>> intern_;
  std::vector<TermId> dot_cache_, ddot_cache_;
  std::mutex mutex_;

  TermId intern(int leaf, std::vector<TermId> children);
  TermId ladder(int n, int second_label, std::vector<TermId>& cache);
};

/// Comparison context for one labelling poset: memoizes the recursive
/// four-clause order on term-id pairs. Keep one per poset, since the leaf
/// order changes the semantics.
class HOrder {
public:
  HOrder(TermPool& pool, const Poset& q) : pool_(pool), q_(q) {}

  /// The order on H_f(Q): leaves compare in Q; a set is below y when all of
  /// its members are; x is below a set when some member dominates it.
  /// Throws domain_error (UnknownLabel) on labels outside Q.
  bool leq(TermId x, TermId y);

  const Poset& q() const { return q_; }

private:
  TermPool& pool_;
  const Poset& q_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

struct InterlockedViolation {
  int m, n;
  std::string relation;  // which of the four checks failed
  bool got;
};

struct InterlockedReport {
  int bound;
  std::vector<InterlockedViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks, for all m,n <= bound over 1+2: dot m <= dot n, ddot m <= ddot n
/// and dot m <= ddot n each hold iff m <= n, and ddot m <= dot n never.
InterlockedReport verify_interlocked(TermPool& pool, int bound);

struct Antichain3Report {
  std::array<TermId, 3> terms;  // {ddot 0, dot 5}, {ddot 1, dot 4}, {ddot 2, dot 3}
  /// Directed comparisons (i, j, result) for all i != j.
  std::array<std::tuple<int, int, bool>, 6> comparisons;
  bool antichain;
};

/// Builds the three-element antichain witness in H_f(1+2) and evaluates all
/// six directed comparisons.
Antichain3Report antichain3_check(TermPool& pool);

}  // namespace bqo
