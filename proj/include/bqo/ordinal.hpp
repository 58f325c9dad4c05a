#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "bqo/poset.hpp"

namespace bqo {

enum class Cmp { lt, eq, gt };

struct CnfTerm;

/// Ordinal below epsilon_0 in Cantor normal form: a sum of terms
/// w^exponent * coefficient with strictly decreasing exponents.
/// The empty term list denotes 0.
struct OrdinalCNF {
  std::vector<CnfTerm> terms;

  static OrdinalCNF zero() { return {}; }
  static OrdinalCNF finite(boost::multiprecision::cpp_int n);
  static OrdinalCNF omega();

  bool is_zero() const { return terms.empty(); }
};

struct CnfTerm {
  OrdinalCNF exponent;
  boost::multiprecision::cpp_int coeff;  // always positive
};

/// Throws domain_error (MalformedCNF) when exponents are not strictly
/// decreasing or a coefficient is not positive.
void require_valid_cnf(const OrdinalCNF& a);
bool cnf_is_valid(const OrdinalCNF& a);

Cmp cnf_compare(const OrdinalCNF& a, const OrdinalCNF& b);
OrdinalCNF cnf_add(const OrdinalCNF& a, const OrdinalCNF& b);

/// Weakly decreasing finite sequence over a linear order alpha
/// (an element of omega^alpha). Entries are ids of alpha.
struct DecSeq {
  std::vector<int> entries;

  bool empty() const { return entries.empty(); }
  int length() const { return static_cast<int>(entries.size()); }
};

/// Throws domain_error when alpha's strict order is not total on the ids
/// used by the sequences.
void require_linear_on(const Poset& alpha, const std::vector<int>& ids);
bool is_weakly_decreasing(const DecSeq& s, const Poset& alpha);

/// Lexicographic comparison with the ordinal reading: at the first
/// difference alpha decides; a strict prefix is smaller.
Cmp omega_alpha_compare(const DecSeq& sigma, const DecSeq& tau, const Poset& alpha);

/// sigma <=' tau iff sigma is a (possibly improper, possibly empty) suffix
/// of tau. This is the partial ranking used for omega^alpha arrays.
bool suffix_leq(const DecSeq& sigma, const DecSeq& tau);

/// Drops the first entry. Throws domain_error (EmptySequence) on empty input.
DecSeq head_remove(const DecSeq& sigma);

/// The order 2bar*gamma for finite gamma, materialized as the sum over
/// chain(gamma) of 2-antichains. Pairs (beta, j) get id 2*beta + j.
SumOrder two_bar_times_gamma(int gamma);

/// Comparison in 2bar*gamma for notation-valued gamma: (b,j) <= (b',j')
/// iff b < b', or b = b' and j = j'.
struct TwoBarPair {
  OrdinalCNF beta;
  int layer;  // 0 or 1
};
bool two_bar_leq(const TwoBarPair& a, const TwoBarPair& b);

}  // namespace bqo
