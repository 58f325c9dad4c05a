#pragma once

#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "bqo/array.hpp"
#include "bqo/barrier.hpp"
#include "bqo/decomp.hpp"
#include "bqo/hset.hpp"
#include "bqo/mba.hpp"
#include "bqo/ordinal.hpp"
#include "bqo/poset.hpp"

namespace bqo::io {

using json = nlohmann::json;

// ---- posets ----------------------------------------------------------

/// {"elements": n | [labels...], "pairs": [[a,b],...], "closure": bool}
RawRelation raw_relation_from_json(const json& doc);

/// Accepts a builtin name ("chainN", "antichainN", "one_plus_two") or a
/// JSON document (validated with validate_poset; violations throw
/// domain_error carrying the description).
Poset poset_from_json(const json& doc);
bool is_builtin_poset_name(const std::string& name);
Poset builtin_poset(const std::string& name);

json poset_to_json(const Poset& p);

// ---- fragments and arrays --------------------------------------------

/// {"kind": "block"|"barrier", "base": [...], "members": [[...],...],
///  "horizon": n?}
Fragment fragment_from_json(const json& doc);
json fragment_to_json(const Fragment& f);

/// Owning wrapper for a parsed array target, so the pointer-holding array
/// values stay valid for the wrapper's lifetime.
struct LoadedTarget {
  enum class Kind { Plain, Sum, Omega };
  Kind kind = Kind::Plain;
  std::shared_ptr<Poset> poset;    // Plain: the order; Omega: alpha
  std::shared_ptr<SumOrder> sum;   // Sum
};

struct LoadedArray {
  LoadedTarget target;
  std::variant<PosetArray, SeqArray> array;
};

/// {"fragment": {...}, "target": {"poset": ...} | {"sum": {"index": ...,
///  "summands": [...]}} | {"omega_alpha": ...}, "values": [...]}
LoadedArray array_from_json(const json& doc);
json array_to_json(const LoadedArray& a);

/// {"pairs": [[a,b],...]} over a poset target; builds the validated ranking.
PosetRanking ranking_from_json(const json& doc, const Poset& q);

// ---- text formats ----------------------------------------------------

/// Brace term format: atoms are poset labels, sets are brace-delimited and
/// whitespace-separated, e.g. "{* 0 {* 0}}". Throws parse_error with
/// line/column on malformed input, domain_error on unknown atoms.
TermId parse_term(const std::string& text, TermPool& pool, const Poset& q);
std::string format_term(const TermPool& pool, TermId t, const Poset& q);

/// CNF text: "0", "w", "w^(...)", "*n" coefficients, "+" sums,
/// e.g. "w^(w)*2 + w + 3". Parsed notation must already be in canonical
/// form (strictly decreasing exponents).
OrdinalCNF parse_cnf(const std::string& text);
std::string format_cnf(const OrdinalCNF& a);

/// Comma-separated entries, e.g. "2,2,0"; empty string is the empty sequence.
DecSeq parse_decseq(const std::string& text);
std::string format_decseq(const DecSeq& s);

json decomposition_to_json(const Decomposition& d, const Poset& p);
json order_map_to_json(const OrderMap& m);

/// Versioned report envelope; "result" is the deterministic payload.
json make_report(const std::string& command, const std::string& status, json result);

}  // namespace bqo::io
