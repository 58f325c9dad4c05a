#include "bqo/ordinal.hpp"

#include <algorithm>

namespace bqo {

OrdinalCNF OrdinalCNF::finite(boost::multiprecision::cpp_int n) {
  if (n < 0) throw domain_error("finite ordinal must be nonnegative");
  OrdinalCNF a;
  if (n > 0) a.terms.push_back(CnfTerm{OrdinalCNF::zero(), std::move(n)});
  return a;
}

OrdinalCNF OrdinalCNF::omega() {
  OrdinalCNF a;
  a.terms.push_back(CnfTerm{OrdinalCNF::finite(1), 1});
  return a;
}

bool cnf_is_valid(const OrdinalCNF& a) {
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].coeff <= 0) return false;
    if (!cnf_is_valid(a.terms[i].exponent)) return false;
    if (i > 0 && cnf_compare(a.terms[i - 1].exponent, a.terms[i].exponent) != Cmp::gt)
      return false;
  }
  return true;
}

void require_valid_cnf(const OrdinalCNF& a) {
  if (!cnf_is_valid(a))
    throw domain_error("MalformedCNF: exponents must strictly decrease and coefficients be positive");
}

Cmp cnf_compare(const OrdinalCNF& a, const OrdinalCNF& b) {
  const size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp e = cnf_compare(a.terms[i].exponent, b.terms[i].exponent);
    if (e != Cmp::eq) return e;
    if (a.terms[i].coeff != b.terms[i].coeff)
      return a.terms[i].coeff < b.terms[i].coeff ? Cmp::lt : Cmp::gt;
  }
  if (a.terms.size() == b.terms.size()) return Cmp::eq;
  return a.terms.size() < b.terms.size() ? Cmp::lt : Cmp::gt;
}

OrdinalCNF cnf_add(const OrdinalCNF& a, const OrdinalCNF& b) {
  require_valid_cnf(a);
  require_valid_cnf(b);
  if (b.is_zero()) return a;

  const OrdinalCNF& lead = b.terms.front().exponent;
  OrdinalCNF out;
  size_t keep = 0;
  while (keep < a.terms.size() && cnf_compare(a.terms[keep].exponent, lead) == Cmp::gt) ++keep;
  out.terms.assign(a.terms.begin(), a.terms.begin() + keep);

  // Terms of a with exponent < lead are absorbed; an equal exponent merges.
  if (keep < a.terms.size() && cnf_compare(a.terms[keep].exponent, lead) == Cmp::eq) {
    out.terms.push_back(CnfTerm{lead, a.terms[keep].coeff + b.terms.front().coeff});
  } else {
    out.terms.push_back(b.terms.front());
  }
  out.terms.insert(out.terms.end(), b.terms.begin() + 1, b.terms.end());
  return out;
}

void require_linear_on(const Poset& alpha, const std::vector<int>& ids) {
  for (int a : ids) {
    if (a < 0 || a >= alpha.size())
      throw domain_error("sequence entry " + std::to_string(a) + " is not an element of alpha");
    for (int b : ids)
      if (a != b && alpha.incomparable(a, b))
        throw domain_error("alpha is not linear on the used ids (" + std::to_string(a) + " || " +
                           std::to_string(b) + ")");
  }
}

bool is_weakly_decreasing(const DecSeq& s, const Poset& alpha) {
  for (size_t i = 0; i + 1 < s.entries.size(); ++i)
    if (!alpha.leq(s.entries[i + 1], s.entries[i])) return false;
  return true;
}

Cmp omega_alpha_compare(const DecSeq& sigma, const DecSeq& tau, const Poset& alpha) {
  std::vector<int> used = sigma.entries;
  used.insert(used.end(), tau.entries.begin(), tau.entries.end());
  require_linear_on(alpha, used);
  if (!is_weakly_decreasing(sigma, alpha) || !is_weakly_decreasing(tau, alpha))
    throw domain_error("NotDecreasing: sequences in omega^alpha must be weakly decreasing");

  const size_t n = std::min(sigma.entries.size(), tau.entries.size());
  for (size_t i = 0; i < n; ++i) {
    int a = sigma.entries[i], b = tau.entries[i];
    if (a == b) continue;
    return alpha.less(a, b) ? Cmp::lt : Cmp::gt;
  }
  // End of sequence sits below every entry: a strict prefix is smaller.
  if (sigma.entries.size() == tau.entries.size()) return Cmp::eq;
  return sigma.entries.size() < tau.entries.size() ? Cmp::lt : Cmp::gt;
}

bool suffix_leq(const DecSeq& sigma, const DecSeq& tau) {
  if (sigma.entries.size() > tau.entries.size()) return false;
  return std::equal(sigma.entries.begin(), sigma.entries.end(),
                    tau.entries.end() - sigma.entries.size());
}

DecSeq head_remove(const DecSeq& sigma) {
  if (sigma.empty()) throw domain_error("EmptySequence: cannot remove the head of an empty sequence");
  return DecSeq{std::vector<int>(sigma.entries.begin() + 1, sigma.entries.end())};
}

SumOrder two_bar_times_gamma(int gamma) {
  if (gamma < 0) throw domain_error("gamma must be nonnegative");
  SumSpec spec;
  spec.index = Poset::chain(gamma);
  spec.summands.assign(gamma, Poset::antichain(2));
  return sum_over_index(spec);
}

bool two_bar_leq(const TwoBarPair& a, const TwoBarPair& b) {
  Cmp c = cnf_compare(a.beta, b.beta);
  if (c != Cmp::eq) return c == Cmp::lt;
  return a.layer == b.layer;
}

}  // namespace bqo
