#pragma once

// Brute-force oracles shared by the unit and acceptance suites. Everything
// here is independent of the library's search/decision paths: plain
// enumeration, no pruning, no memoization.

#include <cstdint>
#include <random>
#include <vector>

#include "bqo/barrier.hpp"
#include "bqo/hset.hpp"
#include "bqo/poset.hpp"

namespace bqo::testing {

/// All labeled posets on n elements, by filtering every relation with the
/// diagonal forced. No isomorphism reduction.
inline std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> off_diag;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) off_diag.emplace_back(a, b);

  std::vector<Poset> out;
  const std::uint64_t total = 1ull << off_diag.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<uint8_t> le(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) le[static_cast<size_t>(a) * n + a] = 1;
    for (size_t k = 0; k < off_diag.size(); ++k)
      if (bits >> k & 1) le[static_cast<size_t>(off_diag[k].first) * n + off_diag[k].second] = 1;

    auto at = [&](int a, int b) { return le[static_cast<size_t>(a) * n + b] != 0; };
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (at(a, b) && at(b, a) && a != b) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (at(a, b) && at(b, c) && !at(a, c)) ok = false;
      }
    if (ok) out.push_back(Poset::from_relation(n, le));
  }
  return out;
}

/// All partial rankings of q: reflexive transitive subrelations of <=_Q,
/// enumerated over subsets of the strict pairs.
inline std::vector<std::vector<std::pair<int, int>>> all_partial_ranking_pairs(const Poset& q) {
  std::vector<std::pair<int, int>> strict;
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.less(a, b)) strict.emplace_back(a, b);

  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t bits = 0; bits < (1ull << strict.size()); ++bits) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<uint8_t> le(static_cast<size_t>(q.size()) * q.size(), 0);
    for (int a = 0; a < q.size(); ++a) le[static_cast<size_t>(a) * q.size() + a] = 1;
    for (size_t k = 0; k < strict.size(); ++k)
      if (bits >> k & 1) {
        pairs.push_back(strict[k]);
        le[static_cast<size_t>(strict[k].first) * q.size() + strict[k].second] = 1;
      }
    auto at = [&](int a, int b) { return le[static_cast<size_t>(a) * q.size() + b] != 0; };
    bool transitive = true;
    for (int a = 0; a < q.size() && transitive; ++a)
      for (int b = 0; b < q.size() && transitive; ++b)
        for (int c = 0; c < q.size() && transitive; ++c)
          if (at(a, b) && at(b, c) && !at(a, c)) transitive = false;
    if (transitive) out.push_back(std::move(pairs));
  }
  return out;
}

/// Existential-extension oracle for the triangle relation: some
/// X subseteq [0, max(s cup t) + 3] has s as proper initial segment and t
/// as proper initial segment of X minus its least element.
inline bool triangle_oracle(const FinSeq& s, const FinSeq& t) {
  FinSeq u = FinSeq::union_of(s, t);
  const int m = (u.empty() ? 0 : u.back()) + 4;
  for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
    std::vector<int> x;
    for (int i = 0; i < m; ++i)
      if (bits >> i & 1) x.push_back(i);
    if (x.size() <= s.entries().size() || x.size() <= t.entries().size() + 1) continue;
    bool s_prefix = std::equal(s.entries().begin(), s.entries().end(), x.begin());
    bool t_prefix = std::equal(t.entries().begin(), t.entries().end(), x.begin() + 1);
    if (s_prefix && t_prefix) return true;
  }
  return false;
}

/// Reference implementation of the H_f(Q) order: same four clauses, no
/// memoization, recursion straight over the tree structure.
inline bool h_leq_reference(const TermPool& pool, const Poset& q, TermId x, TermId y) {
  if (pool.is_leaf(x)) {
    if (pool.is_leaf(y)) return q.leq(pool.leaf_label(x), pool.leaf_label(y));
    for (TermId c : pool.children(y))
      if (h_leq_reference(pool, q, x, c)) return true;
    return false;
  }
  if (pool.is_leaf(y)) {
    for (TermId c : pool.children(x))
      if (!h_leq_reference(pool, q, c, y)) return false;
    return true;
  }
  for (TermId cx : pool.children(x)) {
    bool found = false;
    for (TermId cy : pool.children(y))
      if (h_leq_reference(pool, q, cx, cy)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Random poset on up to max_n elements: random edges closed under
/// reflexivity/transitivity, retried until antisymmetric.
inline Poset random_poset(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size_dist(1, max_n);
  const int n = size_dist(rng);
  for (;;) {
    RawRelation raw;
    raw.n = n;
    raw.closure = true;
    std::uniform_int_distribution<int> id(0, n - 1);
    std::uniform_int_distribution<int> count(0, n);
    const int edges = count(rng);
    for (int e = 0; e < edges; ++e) {
      int a = id(rng), b = id(rng);
      if (a < b) raw.pairs.emplace_back(a, b);  // acyclic by construction
    }
    auto res = validate_poset(raw);
    if (std::holds_alternative<Poset>(res)) return std::get<Poset>(res);
  }
}

/// Random term over q with bounded depth and width.
inline TermId random_term(std::mt19937& rng, TermPool& pool, const Poset& q, int depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<int> label(0, q.size() - 1);
    return pool.leaf(label(rng));
  }
  std::uniform_int_distribution<int> width(0, 3);
  std::vector<TermId> children;
  const int w = width(rng);
  for (int i = 0; i < w; ++i) children.push_back(random_term(rng, pool, q, depth - 1));
  return pool.set(std::move(children));
}

}  // namespace bqo::testing
