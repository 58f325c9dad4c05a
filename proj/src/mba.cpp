#include "bqo/mba.hpp"

#include <algorithm>
#include <bit>

namespace bqo {

namespace {

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// Subset-lexicographic comparison: element lists compared lexicographically,
// a proper prefix coming first.
bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
  return mask_elements(a) < mask_elements(b);
}

}  // namespace

std::vector<int> FinSubsetOrder::elements_of(int idx) const {
  return mask_elements(carrier[idx]);
}

std::vector<int> BadTriple::elements() const { return mask_elements(mask); }

FinSubsetOrder build_fin_subset_order(const Poset& q, int n, long long budget) {
  const int size = q.size();
  if (size > 63) throw domain_error("ground poset too large for bitmask subsets");

  FinSubsetOrder out;
  out.ground = q;
  out.bound = n;
  for (std::uint64_t mask = 1; mask < (1ull << size); ++mask) {
    if (std::popcount(mask) > n) continue;
    out.carrier.push_back(mask);
    if (static_cast<long long>(out.carrier.size()) > budget)
      throw budget_exceeded("power-order carrier exceeds the budget");
  }
  std::sort(out.carrier.begin(), out.carrier.end(), subset_lex_less);

  // strict_upper[p] = mask of strict upper bounds of p in Q.
  std::vector<std::uint64_t> strict_upper(size, 0);
  for (int p = 0; p < size; ++p)
    for (int r = 0; r < size; ++r)
      if (q.less(p, r)) strict_upper[p] |= 1ull << r;

  const size_t m = out.carrier.size();
  out.prec.assign(m * m, 0);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      bool all = true;
      for (std::uint64_t rest = out.carrier[a]; rest && all;) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        all = (strict_upper[p] & out.carrier[b]) != 0;
      }
      out.prec[a * m + b] = all ? 1 : 0;
    }
  return out;
}

std::optional<std::vector<int>> check_wellfounded(const FinSubsetOrder& f) {
  const int m = static_cast<int>(f.carrier.size());
  // Iterative DFS three-coloring; a back edge closes a cycle.
  std::vector<int> color(m, 0), parent(m, -1);
  for (int root = 0; root < m; ++root) {
    if (color[root]) continue;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      if (color[v] == 0) {
        color[v] = 1;
        for (int w = 0; w < m; ++w) {
          if (!f.prec_at(v, w)) continue;
          if (color[w] == 1) {
            std::vector<int> cycle{w};
            for (int x = v; x != w; x = parent[x]) cycle.push_back(x);
            std::reverse(cycle.begin(), cycle.end());
            return cycle;
          }
          if (color[w] == 0) {
            parent[w] = v;
            stack.push_back(w);
          }
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

std::vector<BadTriple> bad_triples(const Poset& q) {
  std::vector<BadTriple> out;
  const int n = q.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        int x[3] = {a, b, c};
        // Range of an order-reflecting 1+2 map: some element incomparable
        // to both others, the other two free of a backwards inequality.
        bool antichain = q.incomparable(a, b) && q.incomparable(a, c) && q.incomparable(b, c);
        bool witness = false;
        for (int star = 0; star < 3 && !witness; ++star) {
          int u = x[(star + 1) % 3], v = x[(star + 2) % 3];
          witness = q.incomparable(x[star], u) && q.incomparable(x[star], v) &&
                    (q.less(u, v) || q.less(v, u));
        }
        if (antichain || witness)
          out.push_back(BadTriple{(1ull << a) | (1ull << b) | (1ull << c),
                                  antichain ? BadTriple::Pattern::Antichain3
                                            : BadTriple::Pattern::OnePlusTwoImage});
      }
  std::sort(out.begin(), out.end(),
            [](const BadTriple& s, const BadTriple& t) { return subset_lex_less(s.mask, t.mask); });
  return out;
}

namespace {

bool triple_prec(const Poset& q, std::uint64_t a, std::uint64_t b) {
  for (int p : mask_elements(a)) {
    bool has_upper = false;
    for (int r : mask_elements(b))
      if (q.less(p, r)) {
        has_upper = true;
        break;
      }
    if (!has_upper) return false;
  }
  return true;
}

}  // namespace

std::optional<BadTriple> minimal_bad_triple(const Poset& q) {
  auto triples = bad_triples(q);
  for (const auto& b : triples) {
    bool minimal = true;
    for (const auto& a : triples)
      if (a.mask != b.mask && triple_prec(q, a.mask, b.mask)) {
        minimal = false;
        break;
      }
    if (minimal) return b;  // list is subset-lexicographic, so first wins
  }
  return std::nullopt;
}

DownSet strict_down_set(const Poset& q, const std::vector<int>& subset) {
  for (int s : subset)
    if (s < 0 || s >= q.size()) throw domain_error("subset references an unknown element");

  DownSet out;
  for (int p = 0; p < q.size(); ++p)
    for (int s : subset)
      if (q.less(p, s)) {
        out.ids.push_back(p);
        break;
      }
  const int k = static_cast<int>(out.ids.size());
  std::vector<uint8_t> le(static_cast<size_t>(k) * k, 0);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = q.label(out.ids[i]);
    for (int j = 0; j < k; ++j)
      le[static_cast<size_t>(i) * k + j] = q.leq(out.ids[i], out.ids[j]) ? 1 : 0;
  }
  out.order = Poset::from_relation(k, le, std::move(labels));
  return out;
}

}  // namespace bqo
