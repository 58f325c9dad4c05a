#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "bqo/poset.hpp"

namespace bqo {

/// A partition of a poset into antichain layers indexed by a linear order
/// of class representatives (the least id of each class).
struct Decomposition {
  std::vector<std::vector<int>> classes;  // in index order, each sorted by id
  std::vector<int> reps;                  // class rank -> least id
  std::vector<int> class_of;              // element -> class rank
};

struct ForbiddenWitness {
  enum class Kind { OnePlusTwoEmbedding, Antichain3Embedding };
  Kind kind;
  OrderMap map;  // from one_plus_two() resp. antichain(3) into P
};

/// Returns nullopt when the reflexive closure of incomparability is an
/// equivalence relation; otherwise the least triple (x,y,z) with x || y,
/// y || z, x comparable to z.
std::optional<std::array<int, 3>> incomparability_is_equivalence(const Poset& p);

std::variant<Decomposition, ForbiddenWitness> decompose(const Poset& p);

struct Width2Result {
  std::variant<Decomposition, ForbiddenWitness> result;
  bool linear_sum_of_pairs() const {
    return std::holds_alternative<Decomposition>(result);
  }
};

/// LinearSumOfPairs iff P decomposes into antichains of size <= 2;
/// otherwise a forbidden 1+2 embedding or an antichain-3 embedding.
Width2Result classify_width2(const Poset& p);

struct TwoGammaEmbedding {
  OrderMap map;      // into target.combined, id = 2*rank + layer position
  SumOrder target;   // two_bar_times_gamma with gamma = |C|
};

/// Embeds a width-2 decomposable poset into the finite order 2bar*gamma.
/// Throws domain_error when classify_width2 is not LinearSumOfPairs.
TwoGammaEmbedding embed_into_two_times_gamma(const Poset& p);

}  // namespace bqo
