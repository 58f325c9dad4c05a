#include "bqo/poset.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace bqo {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out(n);
  for (int i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

void close_reflexive_transitive(int n, std::vector<uint8_t>& le) {
  for (int i = 0; i < n; ++i) le[static_cast<size_t>(i) * n + i] = 1;
  // Floyd-Warshall style closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!le[static_cast<size_t>(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (le[static_cast<size_t>(k) * n + j]) le[static_cast<size_t>(i) * n + j] = 1;
    }
}

std::optional<PosetViolation> check_reflexive_transitive(int n, const std::vector<uint8_t>& le) {
  auto at = [&](int a, int b) { return le[static_cast<size_t>(a) * n + b] != 0; };
  for (int i = 0; i < n; ++i)
    if (!at(i, i)) return PosetViolation{PosetViolation::Kind::ReflexivityViolation, {i}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!at(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (at(b, c) && !at(a, c))
          return PosetViolation{PosetViolation::Kind::TransitivityViolation, {a, b, c}};
    }
  return std::nullopt;
}

std::optional<PosetViolation> check_antisymmetric(int n, const std::vector<uint8_t>& le) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (le[static_cast<size_t>(a) * n + b] && le[static_cast<size_t>(b) * n + a])
        return PosetViolation{PosetViolation::Kind::AntisymmetryViolation, {a, b}};
  return std::nullopt;
}

std::variant<std::vector<uint8_t>, PosetViolation> relation_from_raw(const RawRelation& raw) {
  std::vector<uint8_t> le(static_cast<size_t>(raw.n) * raw.n, 0);
  for (auto [a, b] : raw.pairs) {
    if (a < 0 || a >= raw.n || b < 0 || b >= raw.n) {
      int bad = (a < 0 || a >= raw.n) ? a : b;
      return PosetViolation{PosetViolation::Kind::MissingElement, {bad, a, b}};
    }
    le[static_cast<size_t>(a) * raw.n + b] = 1;
  }
  if (raw.closure) close_reflexive_transitive(raw.n, le);
  return le;
}

std::vector<std::string> labels_from_raw(const RawRelation& raw) {
  if (!raw.labels.empty()) {
    if (static_cast<int>(raw.labels.size()) != raw.n)
      throw domain_error("label list length does not match element count");
    return raw.labels;
  }
  return default_labels(raw.n);
}

}  // namespace

Poset Poset::chain(int n) {
  if (n < 0) throw domain_error("chain size must be nonnegative");
  Poset p;
  p.n_ = n;
  p.le_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) p.le_[static_cast<size_t>(a) * n + b] = 1;
  p.labels_ = default_labels(n);
  return p;
}

Poset Poset::antichain(int n) {
  if (n < 0) throw domain_error("antichain size must be nonnegative");
  Poset p;
  p.n_ = n;
  p.le_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) p.le_[static_cast<size_t>(a) * n + a] = 1;
  p.labels_ = default_labels(n);
  return p;
}

Poset Poset::one_plus_two() {
  Poset p;
  p.n_ = 3;
  p.le_.assign(9, 0);
  p.le_[0 * 3 + 0] = p.le_[1 * 3 + 1] = p.le_[2 * 3 + 2] = 1;
  p.le_[0 * 3 + 1] = 1;  // 0 < 1 is the only strict pair
  p.labels_ = {"0", "1", "*"};
  return p;
}

Poset Poset::from_relation(int n, const std::vector<uint8_t>& le, std::vector<std::string> labels) {
  if (n < 0 || le.size() != static_cast<size_t>(n) * n)
    throw domain_error("relation matrix has the wrong shape");
  if (auto v = check_reflexive_transitive(n, le)) throw domain_error(v->describe());
  if (auto v = check_antisymmetric(n, le)) throw domain_error(v->describe());
  Poset p;
  p.n_ = n;
  p.le_ = le;
  p.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(p.labels_.size()) != n)
    throw domain_error("label list length does not match element count");
  return p;
}

bool Poset::isomorphic_by(const Poset& other, const std::vector<int>& map) const {
  if (n_ != other.n_ || static_cast<int>(map.size()) != n_) return false;
  std::vector<uint8_t> seen(n_, 0);
  for (int x : map) {
    if (x < 0 || x >= n_ || seen[x]) return false;
    seen[x] = 1;
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (leq(a, b) != other.leq(map[a], map[b])) return false;
  return true;
}

Preorder Preorder::from_relation(int n, const std::vector<uint8_t>& le,
                                 std::vector<std::string> labels) {
  if (n < 0 || le.size() != static_cast<size_t>(n) * n)
    throw domain_error("relation matrix has the wrong shape");
  if (auto v = check_reflexive_transitive(n, le)) throw domain_error(v->describe());
  Preorder r;
  r.n_ = n;
  r.le_ = le;
  r.labels_ = labels.empty() ? default_labels(n) : std::move(labels);
  if (static_cast<int>(r.labels_.size()) != n)
    throw domain_error("label list length does not match element count");
  return r;
}

std::string PosetViolation::describe() const {
  auto id = [&](size_t i) { return std::to_string(witness[i]); };
  switch (kind) {
    case Kind::MissingElement:
      return "MissingElement: pair (" + id(1) + "," + id(2) + ") references undeclared id " + id(0);
    case Kind::ReflexivityViolation:
      return "ReflexivityViolation: " + id(0) + " <= " + id(0) + " missing";
    case Kind::TransitivityViolation:
      return "TransitivityViolation: " + id(0) + " <= " + id(1) + " <= " + id(2) +
             " but not " + id(0) + " <= " + id(2);
    case Kind::AntisymmetryViolation:
      return "AntisymmetryViolation: 2-cycle between " + id(0) + " and " + id(1);
  }
  return "unknown violation";
}

std::variant<Poset, PosetViolation> validate_poset(const RawRelation& raw) {
  auto rel = relation_from_raw(raw);
  if (std::holds_alternative<PosetViolation>(rel)) return std::get<PosetViolation>(rel);
  auto& le = std::get<std::vector<uint8_t>>(rel);
  if (!raw.closure) {
    if (auto v = check_reflexive_transitive(raw.n, le)) return *v;
  }
  if (auto v = check_antisymmetric(raw.n, le)) return *v;
  return Poset::from_relation(raw.n, le, labels_from_raw(raw));
}

std::variant<Preorder, PosetViolation> validate_preorder(const RawRelation& raw) {
  auto rel = relation_from_raw(raw);
  if (std::holds_alternative<PosetViolation>(rel)) return std::get<PosetViolation>(rel);
  auto& le = std::get<std::vector<uint8_t>>(rel);
  if (!raw.closure) {
    if (auto v = check_reflexive_transitive(raw.n, le)) return *v;
  }
  return Preorder::from_relation(raw.n, le, labels_from_raw(raw));
}

SumOrder sum_over_index(const SumSpec& spec) {
  const int k = spec.index.size();
  if (static_cast<int>(spec.summands.size()) != k)
    throw domain_error("summand list length must equal the index size");

  SumOrder out;
  out.index = spec.index;
  out.summands = spec.summands;
  out.id_of_pair.resize(k);
  int total = 0;
  for (int i = 0; i < k; ++i) {
    out.id_of_pair[i].resize(spec.summands[i].size());
    for (int q = 0; q < spec.summands[i].size(); ++q) {
      out.id_of_pair[i][q] = total;
      out.pair_of_id.emplace_back(i, q);
      ++total;
    }
  }

  std::vector<uint8_t> le(static_cast<size_t>(total) * total, 0);
  std::vector<std::string> labels(total);
  for (int a = 0; a < total; ++a) {
    auto [i, q] = out.pair_of_id[a];
    labels[a] = "(" + spec.index.label(i) + "," + spec.summands[i].label(q) + ")";
    for (int b = 0; b < total; ++b) {
      auto [j, r] = out.pair_of_id[b];
      bool rel = spec.index.less(i, j) || (i == j && spec.summands[i].leq(q, r));
      le[static_cast<size_t>(a) * total + b] = rel ? 1 : 0;
    }
  }
  out.combined = Poset::from_relation(total, le, std::move(labels));
  return out;
}

namespace {

// Depth-first enumeration of maps P -> Q in lexicographic order of the map
// vector, pruning with `pairwise` on every newly decided pair. Returns the
// least total map passing all pairwise checks.
template <typename Pairwise>
std::optional<std::vector<int>> least_map_dfs(int np, int nq, int first_lo, int first_hi,
                                              const Pairwise& pairwise) {
  std::vector<int> f(np, -1);
  int depth = 0;
  std::vector<int> next(np, 0);
  next[0] = first_lo;
  while (depth >= 0) {
    if (depth == np) return f;
    int hi = (depth == 0) ? first_hi : nq;
    bool advanced = false;
    for (int v = next[depth]; v < hi; ++v) {
      f[depth] = v;
      bool ok = true;
      for (int prev = 0; prev <= depth && ok; ++prev)
        ok = pairwise(prev, depth, f[prev], f[depth]);
      if (ok) {
        next[depth] = v + 1;
        ++depth;
        if (depth < np) next[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      f[depth] = -1;
      --depth;
    }
  }
  return std::nullopt;
}

template <typename Pairwise>
std::optional<std::vector<int>> least_map_search(const Poset& p, const Poset& q,
                                                 const SearchOptions& opts,
                                                 const Pairwise& pairwise) {
  const int np = p.size(), nq = q.size();
  if (np == 0) return std::vector<int>{};
  if (nq == 0) return std::nullopt;

  // Guard on the raw candidate count, per the search contract.
  long double candidates = 1;
  for (int i = 0; i < np; ++i) {
    candidates *= nq;
    if (candidates > static_cast<long double>(opts.budget))
      throw budget_exceeded("map search space exceeds budget of " +
                            std::to_string(opts.budget) + " candidates");
  }

  int workers = std::min(opts.workers, nq);
  if (workers <= 1)
    return least_map_dfs(np, nq, 0, nq, pairwise);

  // Partition on the image of element 0; least witness comes from the
  // lowest slice that succeeds.
  std::vector<std::optional<std::vector<int>>> results(nq);
  std::atomic<int> next_value{0};
  auto run = [&]() {
    for (;;) {
      int v = next_value.fetch_add(1);
      if (v >= nq) return;
      results[v] = least_map_dfs(np, nq, v, v + 1, pairwise);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  for (int v = 0; v < nq; ++v)
    if (results[v]) return results[v];
  return std::nullopt;
}

}  // namespace

std::optional<OrderMap> find_embedding(const Poset& p, const Poset& q,
                                       const SearchOptions& opts) {
  auto pairwise = [&](int a, int b, int fa, int fb) {
    if (a == b) return true;
    // Biconditional in both directions; injectivity follows on posets.
    return p.leq(a, b) == q.leq(fa, fb) && p.leq(b, a) == q.leq(fb, fa) && fa != fb;
  };
  auto found = least_map_search(p, q, opts, pairwise);
  if (!found) return std::nullopt;
  return OrderMap{std::move(*found), true, true};
}

std::optional<OrderMap> find_order_reflecting(const Poset& p, const Poset& q,
                                              const SearchOptions& opts) {
  auto pairwise = [&](int a, int b, int fa, int fb) {
    if (a == b) return true;
    if (q.leq(fa, fb) && !p.leq(a, b)) return false;
    if (q.leq(fb, fa) && !p.leq(b, a)) return false;
    return true;
  };
  auto found = least_map_search(p, q, opts, pairwise);
  if (!found) return std::nullopt;
  OrderMap m{std::move(*found), true, false};
  bool emb = true;
  for (int a = 0; a < p.size() && emb; ++a)
    for (int b = 0; b < p.size() && emb; ++b)
      emb = p.leq(a, b) == q.leq(m.map[a], m.map[b]);
  m.embedding = emb;
  return m;
}

QuotientResult quotient_preorder(const Preorder& r) {
  const int n = r.size();
  QuotientResult out;
  out.projection.assign(n, -1);

  // Class representative = least id with mutual <=.
  std::vector<int> rep_of(n);
  for (int a = 0; a < n; ++a) {
    int rep = a;
    for (int b = 0; b < a; ++b)
      if (r.leq(a, b) && r.leq(b, a)) {
        rep = b;
        break;
      }
    rep_of[a] = rep;
  }
  for (int a = 0; a < n; ++a)
    if (rep_of[a] == a) {
      out.projection[a] = static_cast<int>(out.representative.size());
      out.representative.push_back(a);
    }
  for (int a = 0; a < n; ++a) out.projection[a] = out.projection[rep_of[a]];

  const int k = static_cast<int>(out.representative.size());
  std::vector<uint8_t> le(static_cast<size_t>(k) * k, 0);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = r.label(out.representative[i]);
    for (int j = 0; j < k; ++j)
      le[static_cast<size_t>(i) * k + j] =
          r.leq(out.representative[i], out.representative[j]) ? 1 : 0;
  }
  out.quotient = Poset::from_relation(k, le, std::move(labels));
  return out;
}

}  // namespace bqo
