#include "bqo/array.hpp"

namespace bqo {

namespace detail {

std::vector<std::pair<int, int>> triangle_arcs(const Fragment& f) {
  std::vector<std::pair<int, int>> arcs;
  const auto& ms = f.members();
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j)
      if (i != j && triangle_lt(ms[i], ms[j]))
        arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return arcs;
}

void for_each_increasing(const std::vector<int>& base, int r,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(base.size());
  if (r <= 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::vector<int> pick(r);
  for (;;) {
    for (int i = 0; i < r; ++i) pick[i] = base[idx[i]];
    if (!visit(pick)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> alive_members(const Fragment& f, const std::vector<int>& base, int rank) {
  std::vector<uint8_t> seen(f.members().size(), 0);
  for_each_increasing(base, rank, [&](const std::vector<int>& pick) {
    FinSeq x(pick);
    for (size_t i = 0; i < f.members().size(); ++i)
      if (f.members()[i].prefix_of(x)) seen[i] = 1;
    return true;
  });
  std::vector<int> out;
  for (size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace detail

std::optional<PosetArray> search_bad_fragment(const Fragment& f, const Poset& q,
                                              const SearchOptions& opts) {
  auto arcs = detail::triangle_arcs(f);
  if (arcs.empty()) return std::nullopt;  // only vacuously bad assignments exist
  std::vector<int> all(q.size());
  for (int i = 0; i < q.size(); ++i) all[i] = i;
  std::vector<std::vector<int>> domains(f.members().size(), all);
  auto leq = [&](int a, int b) { return q.leq(a, b); };
  auto found = detail::solve_bad_csp(std::move(domains), arcs, leq, opts.budget);
  if (!found) return std::nullopt;
  return PosetArray{f, std::move(*found), PosetTarget{&q}};
}

int max_bad_horizon(int k, const Poset& q, int nmax, const SearchOptions& opts) {
  if (k < 1) throw domain_error("rank must be at least 1");
  int best = 0;
  for (int n = k + 1; n <= nmax; ++n) {
    if (!search_bad_fragment(uniform_fragment(n, k), q, opts)) break;
    best = n;
  }
  return best;
}

PosetArray first_coordinate_projection(const PosetArray& f, const SumOrder& sum) {
  if (!f.target.order || !f.target.order->same_relation(sum.combined))
    throw domain_error("NotASumTarget: array target is not the given sum order");
  PosetArray out;
  out.domain = f.domain;
  out.target = PosetTarget{&sum.index};
  out.values.reserve(f.values.size());
  for (int v : f.values) out.values.push_back(sum.pair_of_id[v].first);
  return out;
}

std::optional<StabilizeResult> stabilize_first_coordinate(const PosetArray& f,
                                                          const SumOrder& sum) {
  if (!f.target.order || !f.target.order->same_relation(sum.combined))
    throw domain_error("NotASumTarget: array target is not the given sum order");
  if (classify_fragment(f).cls != ArrayClass::Bad)
    throw domain_error("NotBad: stabilization needs a bad array");

  const auto& ms = f.domain.members();
  for (size_t i = 0; i < ms.size(); ++i) {
    const int head = sum.pair_of_id[f.values[i]].first;
    bool constant = true;
    for (size_t j = 0; j < ms.size() && constant; ++j)
      if (ms[j].front() > ms[i].back())
        constant = sum.pair_of_id[f.values[j]].first == head;
    if (!constant) continue;

    StabilizeResult out{ms[i], head, {}, false};
    Fragment tail_domain = sub_fragment_after(f.domain, ms[i]);
    out.degenerate = tail_domain.degenerate();
    std::vector<int> tail_values;
    for (const auto& t : tail_domain.members())
      tail_values.push_back(sum.pair_of_id[f.value_at(t)].second);
    out.tail = PosetArray{std::move(tail_domain), std::move(tail_values),
                          PosetTarget{&sum.summands[head]}};
    return out;
  }
  return std::nullopt;
}

SeqArray induced_from_descending(const std::vector<DecSeq>& sigmas, const Poset& alpha,
                                 std::vector<int> base) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (sigmas.size() < base.size())
    throw domain_error("need at least one sequence per base element");
  for (size_t i = 0; i + 1 < sigmas.size(); ++i)
    if (omega_alpha_compare(sigmas[i], sigmas[i + 1], alpha) != Cmp::gt)
      throw domain_error("NotDescending: the sequence list must strictly decrease in omega^alpha");

  SeqArray out;
  out.domain = uniform_fragment(base, 1);
  out.target = OmegaAlphaTarget{&alpha};
  // Members of [V]^1 in lex order list V ascending, so ranks line up.
  out.values.assign(sigmas.begin(), sigmas.begin() + base.size());
  return out;
}

std::optional<FinSeq> stabilize_head_entry(const SeqArray& g) {
  if (classify_fragment(g).cls != ArrayClass::Bad)
    throw domain_error("NotBad: stabilization needs a bad array");
  const auto& ms = g.domain.members();
  for (size_t i = 0; i < ms.size(); ++i) {
    if (g.values[i].empty()) continue;
    const int head = g.values[i].entries.front();
    bool constant = true;
    for (size_t j = 0; j < ms.size() && constant; ++j)
      if (ms[j].front() > ms[i].back())
        constant = !g.values[j].empty() && g.values[j].entries.front() == head;
    if (constant) return ms[i];
  }
  return std::nullopt;
}

SeqArray head_removal_derivation(const SeqArray& g, const FinSeq& r) {
  if (!g.domain.member_index(r))
    throw domain_error("MemberNotFound: " + r.str() + " is not a member of the fragment");
  if (classify_fragment(g).cls != ArrayClass::Bad)
    throw domain_error("NotBad: head removal needs a bad array");

  Fragment sub = sub_fragment_after(g.domain, r);
  std::optional<int> head;
  std::vector<DecSeq> values;
  for (const auto& t : sub.members()) {
    const DecSeq& v = g.value_at(t);
    if (v.empty())
      throw domain_error("EmptyValueSequence: value at " + t.str() + " has no head to remove");
    if (head && *head != v.entries.front())
      throw domain_error("NotStabilized: head entries are not constant on the sub-fragment after " +
                         r.str());
    head = v.entries.front();
    values.push_back(head_remove(v));
  }
  return SeqArray{std::move(sub), std::move(values), g.target};
}

PosetRanking PosetRanking::identity(const Poset& q) {
  PosetRanking r;
  r.n_ = q.size();
  r.le_.assign(static_cast<size_t>(r.n_) * r.n_, 0);
  for (int a = 0; a < r.n_; ++a)
    for (int b = 0; b < r.n_; ++b)
      r.le_[static_cast<size_t>(a) * r.n_ + b] = q.leq(a, b) ? 1 : 0;
  return r;
}

PosetRanking PosetRanking::discrete(const Poset& q) {
  PosetRanking r;
  r.n_ = q.size();
  r.le_.assign(static_cast<size_t>(r.n_) * r.n_, 0);
  for (int a = 0; a < r.n_; ++a) r.le_[static_cast<size_t>(a) * r.n_ + a] = 1;
  return r;
}

PosetRanking PosetRanking::from_pairs(const Poset& q,
                                      const std::vector<std::pair<int, int>>& pairs) {
  PosetRanking r = discrete(q);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= r.n_ || b < 0 || b >= r.n_)
      throw domain_error("ranking pair references an unknown element");
    r.le_[static_cast<size_t>(a) * r.n_ + b] = 1;
  }
  for (int a = 0; a < r.n_; ++a)
    for (int b = 0; b < r.n_; ++b) {
      if (!r.leq(a, b)) continue;
      if (!q.leq(a, b))
        throw domain_error("ranking must be contained in the target order (" + std::to_string(a) +
                           " <=' " + std::to_string(b) + " but not <=_Q)");
      for (int c = 0; c < r.n_; ++c)
        if (r.leq(b, c) && !r.leq(a, c))
          throw domain_error("ranking must be transitive");
    }
  return r;
}

std::vector<int> PosetRanking::strict_predecessors(int v) const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (a != v && leq(a, v)) out.push_back(a);
  return out;
}

}  // namespace bqo
