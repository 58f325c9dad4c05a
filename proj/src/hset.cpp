#include "bqo/hset.hpp"

#include <algorithm>
#include <set>

namespace bqo {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t node_hash(int leaf, const std::vector<TermId>& children) {
  std::uint64_t h = leaf >= 0 ? mix(0x1eaf, static_cast<std::uint64_t>(leaf)) : 0x5e7;
  for (TermId c : children) h = mix(h, static_cast<std::uint64_t>(c));
  return h;
}

}  // namespace

TermId TermPool::intern(int leaf, std::vector<TermId> children) {
  std::uint64_t h = node_hash(leaf, children);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& bucket = intern_[h];
  for (TermId cand : bucket) {
    const Node& n = nodes_[cand];
    if (n.leaf != leaf) continue;
    std::span<const TermId> cs{children_.data() + n.begin,
                               static_cast<size_t>(n.end - n.begin)};
    if (cs.size() == children.size() && std::equal(cs.begin(), cs.end(), children.begin()))
      return cand;
  }
  Node n;
  n.leaf = leaf;
  n.begin = static_cast<int>(children_.size());
  children_.insert(children_.end(), children.begin(), children.end());
  n.end = static_cast<int>(children_.size());
  nodes_.push_back(n);
  TermId id = static_cast<TermId>(nodes_.size() - 1);
  bucket.push_back(id);
  return id;
}

TermId TermPool::leaf(int label) {
  if (label < 0) throw domain_error("leaf labels must be nonnegative");
  return intern(label, {});
}

TermId TermPool::set(std::vector<TermId> children) {
  for (TermId c : children)
    if (c < 0 || static_cast<size_t>(c) >= nodes_.size())
      throw domain_error("unknown child term id");
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  return intern(-1, std::move(children));
}

TermId TermPool::ladder(int n, int second_label, std::vector<TermId>& cache) {
  if (n < 0) throw domain_error("ladder index must be nonnegative");
  if (n > kLadderBound)
    throw domain_error("BoundExceeded: ladder index " + std::to_string(n) + " exceeds the guard of " +
                       std::to_string(kLadderBound));
  // Labels follow one_plus_two(): 0, 1, and * = 2.
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<TermId> children{leaf(2), leaf(second_label)};
    children.insert(children.end(), cache.begin(), cache.begin() + m);
    cache.push_back(set(std::move(children)));
  }
  return cache[n];
}

TermId TermPool::dot(int n) { return ladder(n, 0, dot_cache_); }
TermId TermPool::ddot(int n) { return ladder(n, 1, ddot_cache_); }

std::vector<int> TermPool::support_labels(TermId t) const {
  std::set<int> labels;
  std::vector<TermId> stack{t};
  std::set<TermId> seen;
  while (!stack.empty()) {
    TermId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    if (is_leaf(cur)) {
      labels.insert(leaf_label(cur));
    } else {
      auto cs = children(cur);
      stack.insert(stack.end(), cs.begin(), cs.end());
    }
  }
  return {labels.begin(), labels.end()};
}

TermId TermPool::support_term(TermId t) {
  std::vector<TermId> leaves;
  for (int q : support_labels(t)) leaves.push_back(leaf(q));
  return set(std::move(leaves));
}

int TermPool::dag_size(TermId t) const {
  std::set<TermId> seen;
  std::vector<TermId> stack{t};
  while (!stack.empty()) {
    TermId cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    if (!is_leaf(cur)) {
      auto cs = children(cur);
      stack.insert(stack.end(), cs.begin(), cs.end());
    }
  }
  return static_cast<int>(seen.size());
}

bool HOrder::leq(TermId x, TermId y) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                      static_cast<std::uint32_t>(y);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  bool result;
  if (pool_.is_leaf(x)) {
    int p = pool_.leaf_label(x);
    if (p >= q_.size()) throw domain_error("UnknownLabel: leaf " + std::to_string(p));
    if (pool_.is_leaf(y)) {
      int q = pool_.leaf_label(y);
      if (q >= q_.size()) throw domain_error("UnknownLabel: leaf " + std::to_string(q));
      result = q_.leq(p, q);
    } else {
      result = false;
      for (TermId c : pool_.children(y))
        if (leq(x, c)) {
          result = true;
          break;
        }
    }
  } else if (pool_.is_leaf(y)) {
    result = true;
    for (TermId c : pool_.children(x))
      if (!leq(c, y)) {
        result = false;
        break;
      }
  } else {
    // Each member of x must admit a dominating member of y.
    result = true;
    for (TermId cx : pool_.children(x)) {
      bool found = false;
      for (TermId cy : pool_.children(y))
        if (leq(cx, cy)) {
          found = true;
          break;
        }
      if (!found) {
        result = false;
        break;
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

InterlockedReport verify_interlocked(TermPool& pool, int bound) {
  InterlockedReport report;
  report.bound = bound;
  Poset q = Poset::one_plus_two();
  HOrder ord(pool, q);
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      bool expect = m <= n;
      struct Check {
        const char* name;
        TermId a, b;
        bool expect;
      } checks[] = {
          {"dot<=dot", pool.dot(m), pool.dot(n), expect},
          {"ddot<=ddot", pool.ddot(m), pool.ddot(n), expect},
          {"dot<=ddot", pool.dot(m), pool.ddot(n), expect},
          {"ddot<=dot", pool.ddot(m), pool.dot(n), false},
      };
      for (const auto& c : checks) {
        bool got = ord.leq(c.a, c.b);
        if (got != c.expect) report.violations.push_back({m, n, c.name, got});
      }
    }
  return report;
}

Antichain3Report antichain3_check(TermPool& pool) {
  Antichain3Report report;
  report.terms = {pool.set({pool.ddot(0), pool.dot(5)}),
                  pool.set({pool.ddot(1), pool.dot(4)}),
                  pool.set({pool.ddot(2), pool.dot(3)})};
  Poset q = Poset::one_plus_two();
  HOrder ord(pool, q);
  int k = 0;
  report.antichain = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      bool r = ord.leq(report.terms[i], report.terms[j]);
      report.comparisons[k++] = {i, j, r};
      if (r) report.antichain = false;
    }
  return report;
}

}  // namespace bqo
