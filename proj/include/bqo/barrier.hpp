#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bqo/errors.hpp"

namespace bqo {

/// Strictly increasing finite sequence of naturals, identified with the
/// finite set it enumerates.
class FinSeq {
public:
  FinSeq() = default;
  /// Throws domain_error unless entries are nonnegative and strictly increasing.
  explicit FinSeq(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int front() const { return entries_.front(); }
  int back() const { return entries_.back(); }

  /// Improper prefixes count: s.prefix_of(s) is true.
  bool prefix_of(const FinSeq& other) const;
  bool proper_subset_of(const FinSeq& other) const;
  FinSeq drop_front(int k) const;
  static FinSeq union_of(const FinSeq& a, const FinSeq& b);

  friend bool operator==(const FinSeq&, const FinSeq&) = default;
  friend std::strong_ordering operator<=>(const FinSeq& a, const FinSeq& b) {
    return a.entries_ <=> b.entries_;  // lexicographic
  }

  std::string str() const;

private:
  std::vector<int> entries_;
};

/// s triangle t: some infinite X has s as initial segment and t as initial
/// segment of X minus its least element. Decidable from u = enum(s cup t):
/// holds iff s and t are prefixes of u and u minus its head, respectively.
/// Throws domain_error (EmptySequence) when s is empty.
bool triangle_lt(const FinSeq& s, const FinSeq& t);

enum class FragmentKind { Block, Barrier };

/// Finite-horizon surrogate of a block or barrier: members drawn from a
/// finite base V subseteq [0, horizon). Structural invariants live in
/// validate_fragment; construction only normalizes ordering.
class Fragment {
public:
  Fragment() = default;
  Fragment(FragmentKind kind, std::vector<int> base, std::vector<FinSeq> members,
           std::optional<int> horizon = std::nullopt);

  FragmentKind kind() const { return kind_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<FinSeq>& members() const { return members_; }
  int horizon() const { return horizon_; }
  /// Max member length; 0 for the degenerate memberless fragment.
  int rank() const;
  bool degenerate() const { return members_.empty(); }
  std::optional<int> member_index(const FinSeq& s) const;

private:
  FragmentKind kind_ = FragmentKind::Barrier;
  std::vector<int> base_;        // sorted, distinct
  std::vector<FinSeq> members_;  // sorted lexicographically, distinct
  int horizon_ = 0;
};

/// Barrier of all size-k subsets of the given base.
Fragment uniform_fragment(std::vector<int> base, int k);
Fragment uniform_fragment(int n, int k);  // base = [0, n)

struct FragmentViolation {
  enum class Kind {
    EmptyMember,        // seqs: {member}
    MemberOutsideBase,  // seqs: {member}
    HorizonViolation,   // seqs: {member or base element as singleton}
    PrefixViolation,    // block condition: seqs: {s, t} with s proper prefix of t
    SubsetViolation,    // barrier condition: seqs: {s, t} with s proper subset of t
    Uncovered,          // completeness: seqs: {size-R sequence with no member prefix}
    MultiplyCovered,    // completeness: seqs: {size-R sequence, member, member}
  };
  Kind kind;
  std::vector<FinSeq> seqs;

  std::string describe() const;
};

/// Checks the kind-specific antichain condition and completeness at the
/// horizon: every increasing size-R sequence over the base (R = max member
/// length) has exactly one member as a prefix.
std::optional<FragmentViolation> validate_fragment(const Fragment& f);

/// B/s: members whose least entry lies strictly above max(s); base
/// restricted accordingly. Throws domain_error (MemberNotFound) when s is
/// not a member. The result may be degenerate (no members).
Fragment sub_fragment_after(const Fragment& f, const FinSeq& s);

/// Interval chain s = r0 tri r1 tri ... tri rn = t through the fragment,
/// built by shifting u = enum(s cup t) (extended by fresh base elements
/// above max(u) as needed) one element at a time and looking up the unique
/// member prefix. Throws domain_error on MissingPrefix / NotReached.
std::vector<FinSeq> chain_intervals(const Fragment& f, const FinSeq& s, const FinSeq& t);

struct RefinementResult {
  Fragment barrier;
  /// Pairs (barrier member, block member it extends), sorted by member.
  std::vector<std::pair<FinSeq, FinSeq>> refinement;
};

/// Refines a block fragment into a barrier one: members are replaced by all
/// of their length-R extensions within the base (R = max member length), so
/// equal lengths force the subset-antichain condition. Barrier-kind input is
/// returned unchanged with the identity refinement. Throws domain_error
/// (HorizonExhausted) when a member admits no length-R extension.
RefinementResult block_to_barrier(const Fragment& f);

}  // namespace bqo
