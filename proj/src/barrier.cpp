#include "bqo/barrier.hpp"

#include <algorithm>
#include <set>

namespace bqo {

FinSeq::FinSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw domain_error("sequence entries must be nonnegative");
    if (i > 0 && entries_[i - 1] >= entries_[i])
      throw domain_error("sequence entries must strictly increase");
  }
}

bool FinSeq::prefix_of(const FinSeq& other) const {
  if (entries_.size() > other.entries_.size()) return false;
  return std::equal(entries_.begin(), entries_.end(), other.entries_.begin());
}

bool FinSeq::proper_subset_of(const FinSeq& other) const {
  if (entries_.size() >= other.entries_.size()) return false;
  return std::includes(other.entries_.begin(), other.entries_.end(), entries_.begin(),
                       entries_.end());
}

FinSeq FinSeq::drop_front(int k) const {
  if (k < 0 || k > size()) throw domain_error("drop_front out of range");
  return FinSeq(std::vector<int>(entries_.begin() + k, entries_.end()));
}

FinSeq FinSeq::union_of(const FinSeq& a, const FinSeq& b) {
  std::vector<int> out;
  std::set_union(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                 std::back_inserter(out));
  return FinSeq(std::move(out));
}

std::string FinSeq::str() const {
  std::string out = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out + ")";
}

bool triangle_lt(const FinSeq& s, const FinSeq& t) {
  if (s.empty()) throw domain_error("EmptySequence: triangle relation needs a nonempty left side");
  FinSeq u = FinSeq::union_of(s, t);
  if (!s.prefix_of(u)) return false;
  return t.prefix_of(u.drop_front(1));
}

Fragment::Fragment(FragmentKind kind, std::vector<int> base, std::vector<FinSeq> members,
                   std::optional<int> horizon)
    : kind_(kind), base_(std::move(base)), members_(std::move(members)) {
  std::sort(base_.begin(), base_.end());
  base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
  if (!base_.empty() && base_.front() < 0) throw domain_error("base elements must be nonnegative");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  horizon_ = horizon.value_or(base_.empty() ? 0 : base_.back() + 1);
}

int Fragment::rank() const {
  int r = 0;
  for (const auto& m : members_) r = std::max(r, m.size());
  return r;
}

std::optional<int> Fragment::member_index(const FinSeq& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - members_.begin());
}

Fragment uniform_fragment(std::vector<int> base, int k) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (k < 1) throw domain_error("uniform fragment needs k >= 1");
  if (static_cast<int>(base.size()) < k)
    throw domain_error("uniform fragment needs |base| >= k");

  std::vector<FinSeq> members;
  std::vector<int> pick(k);
  // Enumerate k-combinations of base in lexicographic order.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = static_cast<int>(base.size());
  for (;;) {
    for (int i = 0; i < k; ++i) pick[i] = base[idx[i]];
    members.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Fragment(FragmentKind::Barrier, std::move(base), std::move(members));
}

Fragment uniform_fragment(int n, int k) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  return uniform_fragment(std::move(base), k);
}

std::string FragmentViolation::describe() const {
  auto seq = [&](size_t i) { return seqs[i].str(); };
  switch (kind) {
    case Kind::EmptyMember:
      return "EmptyMember: the empty sequence cannot be a member";
    case Kind::MemberOutsideBase:
      return "MemberOutsideBase: member " + seq(0) + " uses elements outside the base";
    case Kind::HorizonViolation:
      return "HorizonViolation: " + seq(0) + " exceeds the horizon";
    case Kind::PrefixViolation:
      return "PrefixViolation(" + seq(0) + "," + seq(1) + ")";
    case Kind::SubsetViolation:
      return "SubsetViolation(" + seq(0) + "," + seq(1) + ")";
    case Kind::Uncovered:
      return "Uncovered: " + seq(0) + " has no member prefix";
    case Kind::MultiplyCovered:
      return "MultiplyCovered: " + seq(0) + " has member prefixes " + seq(1) + " and " + seq(2);
  }
  return "unknown violation";
}

namespace {

// Visits every strictly increasing size-r sequence over base.
template <typename Visit>
void for_each_combination(const std::vector<int>& base, int r, const Visit& visit) {
  const int n = static_cast<int>(base.size());
  if (r < 0 || r > n) return;
  if (r == 0) return;  // the empty sequence is never interesting here
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

}  // namespace

std::optional<FragmentViolation> validate_fragment(const Fragment& f) {
  using K = FragmentViolation::Kind;
  for (int b : f.base())
    if (b >= f.horizon())
      return FragmentViolation{K::HorizonViolation, {FinSeq({b})}};
  for (const auto& m : f.members()) {
    if (m.empty()) return FragmentViolation{K::EmptyMember, {m}};
    for (int e : m.entries())
      if (!std::binary_search(f.base().begin(), f.base().end(), e))
        return FragmentViolation{K::MemberOutsideBase, {m}};
  }
  const auto& ms = f.members();
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j) {
      if (i == j) continue;
      if (ms[i].size() < ms[j].size() && ms[i].prefix_of(ms[j]))
        return FragmentViolation{K::PrefixViolation, {ms[i], ms[j]}};
      if (f.kind() == FragmentKind::Barrier && ms[i].proper_subset_of(ms[j]))
        return FragmentViolation{K::SubsetViolation, {ms[i], ms[j]}};
    }

  // Completeness at the horizon.
  if (f.degenerate()) return std::nullopt;
  std::optional<FragmentViolation> violation;
  for_each_combination(f.base(), f.rank(), [&](const std::vector<int>& pick) {
    FinSeq x(pick);
    const FinSeq* first = nullptr;
    for (const auto& m : ms) {
      if (!m.prefix_of(x)) continue;
      if (first) {
        violation = FragmentViolation{K::MultiplyCovered, {x, *first, m}};
        return false;
      }
      first = &m;
    }
    if (!first) {
      violation = FragmentViolation{K::Uncovered, {x}};
      return false;
    }
    return true;
  });
  return violation;
}

Fragment sub_fragment_after(const Fragment& f, const FinSeq& s) {
  if (!f.member_index(s))
    throw domain_error("MemberNotFound: " + s.str() + " is not a member of the fragment");
  const int cut = s.back();
  std::vector<int> base;
  for (int b : f.base())
    if (b > cut) base.push_back(b);
  std::vector<FinSeq> members;
  for (const auto& m : f.members())
    if (m.front() > cut) members.push_back(m);
  return Fragment(f.kind(), std::move(base), std::move(members), f.horizon());
}

std::vector<FinSeq> chain_intervals(const Fragment& f, const FinSeq& s, const FinSeq& t) {
  if (!f.member_index(s))
    throw domain_error("MemberNotFound: " + s.str() + " is not a member of the fragment");
  if (!f.member_index(t))
    throw domain_error("MemberNotFound: " + t.str() + " is not a member of the fragment");
  if (t.front() <= s.back())
    throw domain_error(t.str() + " does not lie in the sub-fragment after " + s.str());

  // u = enum(s cup t), extended by every fresh base element above max(u);
  // the walk only consumes as much of the extension as member lookups need.
  std::vector<int> u = FinSeq::union_of(s, t).entries();
  for (int b : f.base())
    if (b > u.back()) u.push_back(b);

  std::vector<FinSeq> chain;
  for (size_t shift = 0; shift < u.size(); ++shift) {
    FinSeq view(std::vector<int>(u.begin() + shift, u.end()));
    const FinSeq* found = nullptr;
    for (const auto& m : f.members()) {
      if (!m.prefix_of(view)) continue;
      if (found)
        throw domain_error("fragment violates the block condition: " + found->str() + " and " +
                           m.str() + " both prefix " + view.str());
      found = &m;
    }
    if (!found)
      throw domain_error("MissingPrefix: no member prefixes " + view.str() +
                         " (fragment too small)");
    chain.push_back(*found);
    if (*found == t) return chain;
  }
  throw domain_error("NotReached: " + t.str() + " never became the prefix before the base was exhausted");
}

RefinementResult block_to_barrier(const Fragment& f) {
  if (f.kind() == FragmentKind::Barrier) {
    RefinementResult out;
    out.barrier = f;
    for (const auto& m : f.members()) out.refinement.emplace_back(m, m);
    return out;
  }

  const int r = f.rank();
  std::vector<std::pair<FinSeq, FinSeq>> refinement;  // (extension, source)
  for (const auto& m : f.members()) {
    std::vector<int> avail;
    for (int b : f.base())
      if (b > m.back()) avail.push_back(b);
    const int need = r - m.size();
    if (need > static_cast<int>(avail.size()))
      throw domain_error("HorizonExhausted: cannot extend " + m.str() + " to length " +
                         std::to_string(r) + " within the base");
    if (need == 0) {
      refinement.emplace_back(m, m);
      continue;
    }
    for_each_combination(avail, need, [&](const std::vector<int>& tail) {
      std::vector<int> ext = m.entries();
      ext.insert(ext.end(), tail.begin(), tail.end());
      refinement.emplace_back(FinSeq(std::move(ext)), m);
      return true;
    });
  }

  std::sort(refinement.begin(), refinement.end());
  for (size_t i = 0; i + 1 < refinement.size(); ++i)
    if (refinement[i].first == refinement[i + 1].first)
      throw domain_error("fragment violates the block condition: " + refinement[i].second.str() +
                         " and " + refinement[i + 1].second.str() + " share the extension " +
                         refinement[i].first.str());

  std::set<int> base_elems;
  std::vector<FinSeq> members;
  for (const auto& [ext, src] : refinement) {
    members.push_back(ext);
    base_elems.insert(ext.entries().begin(), ext.entries().end());
  }
  RefinementResult out;
  out.barrier = Fragment(FragmentKind::Barrier,
                         std::vector<int>(base_elems.begin(), base_elems.end()),
                         std::move(members), f.horizon());
  out.refinement = std::move(refinement);
  return out;
}

}  // namespace bqo
