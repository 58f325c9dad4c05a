#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bqo/errors.hpp"

namespace bqo {

/// Finite partial order on ids 0..n-1, stored as a dense boolean relation.
/// Instances are immutable after construction and cheap to copy at desk scale.
class Poset {
public:
  Poset() = default;

  static Poset chain(int n);
  static Poset antichain(int n);
  /// Three elements: 0 < 1 is the only strict pair, id 2 (labelled "*")
  /// is incomparable to both.
  static Poset one_plus_two();

  /// Builds from an already reflexive/transitive/antisymmetric matrix.
  /// Throws domain_error if the matrix violates the poset axioms.
  static Poset from_relation(int n, const std::vector<uint8_t>& le,
                             std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return le_[static_cast<size_t>(a) * n_ + b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool same_relation(const Poset& other) const { return n_ == other.n_ && le_ == other.le_; }
  /// True when `map` (old id -> other id) is an order isomorphism onto other.
  bool isomorphic_by(const Poset& other, const std::vector<int>& map) const;

private:
  int n_ = 0;
  std::vector<uint8_t> le_;  // n*n, row-major: le_[a*n+b] == (a <= b)
  std::vector<std::string> labels_;

  friend class Preorder;
};

/// Reflexive transitive relation; antisymmetry not required.
class Preorder {
public:
  Preorder() = default;
  static Preorder from_relation(int n, const std::vector<uint8_t>& le,
                                std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return le_[static_cast<size_t>(a) * n_ + b] != 0; }
  const std::string& label(int a) const { return labels_[a]; }

private:
  int n_ = 0;
  std::vector<uint8_t> le_;
  std::vector<std::string> labels_;
};

/// Raw relation as declared by a caller, before validation.
struct RawRelation {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;  // optional; decimal ids when empty
  bool closure = false;             // apply reflexive-transitive closure first
};

struct PosetViolation {
  enum class Kind {
    MissingElement,        // witness: {a, b} with the offending id first
    ReflexivityViolation,  // witness: {a}
    TransitivityViolation, // witness: {a, b, c} with a<=b, b<=c, not a<=c
    AntisymmetryViolation, // witness: {a, b}, the 2-cycle
  };
  Kind kind;
  std::vector<int> witness;

  std::string describe() const;
};

std::variant<Poset, PosetViolation> validate_poset(const RawRelation& raw);
std::variant<Preorder, PosetViolation> validate_preorder(const RawRelation& raw);

/// Total map between posets plus the classification the search verified.
struct OrderMap {
  std::vector<int> map;  // source id -> target id
  bool order_reflecting = false;
  bool embedding = false;
};

struct SumSpec {
  Poset index;
  std::vector<Poset> summands;  // one per index element
};

/// Result of sum_over_index, with the pair <-> id bookkeeping retained so
/// arrays into the sum can be projected back onto the index.
struct SumOrder {
  Poset combined;
  Poset index;
  std::vector<Poset> summands;
  std::vector<std::pair<int, int>> pair_of_id;  // combined id -> (i, q)
  std::vector<std::vector<int>> id_of_pair;     // [i][q] -> combined id
};

SumOrder sum_over_index(const SumSpec& spec);

struct SearchOptions {
  long long budget = 10'000'000;  // cap on |Q|^|P| candidates
  int workers = 1;                // >1 partitions the root branching
};

/// Least (by map vector, lexicographically) injective f with
/// p <= p'  <=>  f(p) <= f(p'); absent when none exists.
std::optional<OrderMap> find_embedding(const Poset& p, const Poset& q,
                                       const SearchOptions& opts = {});

/// Least total f with f(p) <= f(q)  =>  p <= q; absent when none exists.
std::optional<OrderMap> find_order_reflecting(const Poset& p, const Poset& q,
                                              const SearchOptions& opts = {});

struct QuotientResult {
  Poset quotient;
  std::vector<int> projection;      // old id -> new id
  std::vector<int> representative;  // new id -> least old id of the class
};

/// Quotient by mutual <=; each class is represented by its least id.
QuotientResult quotient_preorder(const Preorder& r);

}  // namespace bqo
