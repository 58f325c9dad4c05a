#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bqo/poset.hpp"

namespace bqo {

/// The finite power order [Q]^{<=n}: nonempty subsets of Q of size at most
/// n, encoded as bitmasks over the ground carrier, with the majorization
/// relation a prec b iff every p in a has a strict upper bound in b.
struct FinSubsetOrder {
  Poset ground;
  int bound = 0;
  std::vector<std::uint64_t> carrier;  // subset-lexicographic order
  std::vector<uint8_t> prec;           // carrier-indexed strict relation

  bool prec_at(int a, int b) const {
    return prec[static_cast<size_t>(a) * carrier.size() + b] != 0;
  }
  std::vector<int> elements_of(int idx) const;
};

/// Materializes the carrier and the full prec relation. Throws
/// budget_exceeded when the carrier would outgrow the budget.
FinSubsetOrder build_fin_subset_order(const Poset& q, int n, long long budget = 1 << 20);

/// Nullopt when prec is acyclic (finite well-foundedness); otherwise a
/// cycle as a list of carrier indices.
std::optional<std::vector<int>> check_wellfounded(const FinSubsetOrder& f);

struct BadTriple {
  std::uint64_t mask;
  enum class Pattern { Antichain3, OnePlusTwoImage } pattern;
  std::vector<int> elements() const;
};

/// All 3-subsets that are ranges of order-reflecting maps from 1+2 into Q:
/// the 3-antichains plus the triples with one element incomparable to a
/// strictly comparable pair. Subset-lexicographic order.
std::vector<BadTriple> bad_triples(const Poset& q);

/// A prec-minimal bad triple (subset-lexicographically least among the
/// minimal ones); absent when Q has no bad triple.
std::optional<BadTriple> minimal_bad_triple(const Poset& q);

struct DownSet {
  Poset order;
  std::vector<int> ids;  // new id -> original id
};

/// Induced suborder on { p | p < q for some q in the subset }.
DownSet strict_down_set(const Poset& q, const std::vector<int>& subset);

}  // namespace bqo
