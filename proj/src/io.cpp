#include "bqo/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace bqo::io {

namespace {

int require_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

RawRelation raw_relation_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("poset document must be an object");
  RawRelation raw;
  if (!doc.contains("elements")) throw parse_error("poset document needs \"elements\"");
  const json& el = doc.at("elements");
  if (el.is_number_integer()) {
    raw.n = el.get<int>();
  } else if (el.is_array()) {
    raw.n = static_cast<int>(el.size());
    for (const auto& l : el) raw.labels.push_back(l.get<std::string>());
  } else {
    throw parse_error("\"elements\" must be a count or a label list");
  }
  if (doc.contains("pairs")) {
    for (const auto& pr : doc.at("pairs")) {
      if (!pr.is_array() || pr.size() != 2) throw parse_error("relation pairs must be [a, b]");
      raw.pairs.emplace_back(require_int(pr[0], "pair entry"), require_int(pr[1], "pair entry"));
    }
  }
  raw.closure = doc.value("closure", false);
  return raw;
}

bool is_builtin_poset_name(const std::string& name) {
  if (name == "one_plus_two") return true;
  for (const char* prefix : {"chain", "antichain"}) {
    std::string p(prefix);
    if (name.size() > p.size() && name.compare(0, p.size(), p) == 0 &&
        std::all_of(name.begin() + p.size(), name.end(), [](char c) { return std::isdigit(c); }))
      return true;
  }
  return false;
}

Poset builtin_poset(const std::string& name) {
  if (name == "one_plus_two") return Poset::one_plus_two();
  auto tail_num = [&](size_t k) { return std::stoi(name.substr(k)); };
  if (name.rfind("chain", 0) == 0) return Poset::chain(tail_num(5));
  if (name.rfind("antichain", 0) == 0) return Poset::antichain(tail_num(9));
  throw parse_error("unknown builtin order: " + name);
}

Poset poset_from_json(const json& doc) {
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (!is_builtin_poset_name(name)) throw parse_error("unknown builtin order: " + name);
    return builtin_poset(name);
  }
  auto result = validate_poset(raw_relation_from_json(doc));
  if (std::holds_alternative<PosetViolation>(result))
    throw domain_error(std::get<PosetViolation>(result).describe());
  return std::get<Poset>(result);
}

json poset_to_json(const Poset& p) {
  json pairs = json::array();
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) pairs.push_back(json::array({a, b}));
  return json{{"elements", p.labels()}, {"pairs", pairs}, {"closure", false}};
}

Fragment fragment_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("fragment document must be an object");
  std::string kind = doc.value("kind", "barrier");
  FragmentKind k;
  if (kind == "block")
    k = FragmentKind::Block;
  else if (kind == "barrier")
    k = FragmentKind::Barrier;
  else
    throw parse_error("fragment kind must be \"block\" or \"barrier\"");

  std::vector<int> base;
  for (const auto& b : doc.at("base")) base.push_back(require_int(b, "base element"));
  std::vector<FinSeq> members;
  for (const auto& m : doc.at("members")) {
    std::vector<int> entries;
    for (const auto& e : m) entries.push_back(require_int(e, "member entry"));
    members.emplace_back(std::move(entries));
  }
  std::optional<int> horizon;
  if (doc.contains("horizon")) horizon = require_int(doc.at("horizon"), "horizon");
  return Fragment(k, std::move(base), std::move(members), horizon);
}

json fragment_to_json(const Fragment& f) {
  json members = json::array();
  for (const auto& m : f.members()) members.push_back(m.entries());
  return json{{"kind", f.kind() == FragmentKind::Block ? "block" : "barrier"},
              {"base", f.base()},
              {"members", members},
              {"horizon", f.horizon()}};
}

LoadedArray array_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("array document must be an object");
  Fragment frag = fragment_from_json(doc.at("fragment"));
  const json& tgt = doc.at("target");
  LoadedArray out;

  auto int_values = [&](size_t limit) {
    std::vector<int> vs;
    for (const auto& v : doc.at("values")) {
      int x = require_int(v, "value");
      if (x < 0 || static_cast<size_t>(x) >= limit)
        throw domain_error("value " + std::to_string(x) + " is outside the target carrier");
      vs.push_back(x);
    }
    if (vs.size() != frag.members().size())
      throw domain_error("value map must be total on the members");
    return vs;
  };

  if (tgt.is_object() && tgt.contains("sum")) {
    const json& s = tgt.at("sum");
    SumSpec spec;
    spec.index = poset_from_json(s.at("index"));
    for (const auto& q : s.at("summands")) spec.summands.push_back(poset_from_json(q));
    out.target.kind = LoadedTarget::Kind::Sum;
    out.target.sum = std::make_shared<SumOrder>(sum_over_index(spec));
    out.array = PosetArray{std::move(frag), int_values(out.target.sum->combined.size()),
                           PosetTarget{&out.target.sum->combined}};
  } else if (tgt.is_object() && tgt.contains("omega_alpha")) {
    out.target.kind = LoadedTarget::Kind::Omega;
    out.target.poset = std::make_shared<Poset>(poset_from_json(tgt.at("omega_alpha")));
    std::vector<DecSeq> vs;
    for (const auto& v : doc.at("values")) {
      if (!v.is_array()) throw parse_error("omega^alpha values must be entry arrays");
      DecSeq s;
      for (const auto& e : v) s.entries.push_back(require_int(e, "sequence entry"));
      if (!is_weakly_decreasing(s, *out.target.poset))
        throw domain_error("NotDecreasing: value sequences must be weakly decreasing in alpha");
      vs.push_back(std::move(s));
    }
    if (vs.size() != frag.members().size())
      throw domain_error("value map must be total on the members");
    out.array = SeqArray{std::move(frag), std::move(vs), OmegaAlphaTarget{out.target.poset.get()}};
  } else {
    const json& inner = tgt.is_object() && tgt.contains("poset") ? tgt.at("poset") : tgt;
    out.target.kind = LoadedTarget::Kind::Plain;
    out.target.poset = std::make_shared<Poset>(poset_from_json(inner));
    out.array = PosetArray{std::move(frag), int_values(out.target.poset->size()),
                           PosetTarget{out.target.poset.get()}};
  }
  return out;
}

json array_to_json(const LoadedArray& a) {
  json doc;
  if (std::holds_alternative<PosetArray>(a.array)) {
    const auto& arr = std::get<PosetArray>(a.array);
    doc["fragment"] = fragment_to_json(arr.domain);
    doc["values"] = arr.values;
    if (a.target.kind == LoadedTarget::Kind::Sum) {
      json summands = json::array();
      for (const auto& q : a.target.sum->summands) summands.push_back(poset_to_json(q));
      doc["target"] = json{{"sum", {{"index", poset_to_json(a.target.sum->index)},
                                    {"summands", summands}}}};
    } else {
      doc["target"] = json{{"poset", poset_to_json(*a.target.poset)}};
    }
  } else {
    const auto& arr = std::get<SeqArray>(a.array);
    doc["fragment"] = fragment_to_json(arr.domain);
    json values = json::array();
    for (const auto& v : arr.values) values.push_back(v.entries);
    doc["values"] = values;
    doc["target"] = json{{"omega_alpha", poset_to_json(*a.target.poset)}};
  }
  return doc;
}

PosetRanking ranking_from_json(const json& doc, const Poset& q) {
  if (doc.is_string()) {
    const std::string name = doc.get<std::string>();
    if (name == "identity") return PosetRanking::identity(q);
    if (name == "discrete") return PosetRanking::discrete(q);
    throw parse_error("unknown ranking name: " + name);
  }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& pr : doc.at("pairs"))
    pairs.emplace_back(require_int(pr[0], "ranking pair"), require_int(pr[1], "ranking pair"));
  return PosetRanking::from_pairs(q, pairs);
}

// ---- term text format --------------------------------------------------

namespace {

struct TermLexer {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }
};

TermId parse_term_rec(TermLexer& lx, TermPool& pool, const Poset& q) {
  lx.skip_space();
  if (lx.pos >= lx.text.size()) throw parse_error("unexpected end of term", lx.line, lx.col);
  if (lx.peek() == '}') throw parse_error("unexpected '}'", lx.line, lx.col);
  if (lx.peek() == '{') {
    lx.advance();
    std::vector<TermId> children;
    for (;;) {
      lx.skip_space();
      if (lx.pos >= lx.text.size()) throw parse_error("missing '}'", lx.line, lx.col);
      if (lx.peek() == '}') {
        lx.advance();
        return pool.set(std::move(children));
      }
      children.push_back(parse_term_rec(lx, pool, q));
    }
  }
  // Atom: a maximal run of non-space, non-brace characters.
  int line = lx.line, col = lx.col;
  std::string atom;
  while (lx.pos < lx.text.size() && !std::isspace(static_cast<unsigned char>(lx.peek())) &&
         lx.peek() != '{' && lx.peek() != '}') {
    atom += lx.peek();
    lx.advance();
  }
  for (int i = 0; i < q.size(); ++i)
    if (q.label(i) == atom) return pool.leaf(i);
  throw parse_error("UnknownLabel: '" + atom + "' is not an element of the order", line, col);
}

}  // namespace

TermId parse_term(const std::string& text, TermPool& pool, const Poset& q) {
  TermLexer lx{text};
  TermId t = parse_term_rec(lx, pool, q);
  if (!lx.done()) throw parse_error("trailing input after term", lx.line, lx.col);
  return t;
}

std::string format_term(const TermPool& pool, TermId t, const Poset& q) {
  if (pool.is_leaf(t)) {
    int label = pool.leaf_label(t);
    if (label >= q.size()) throw domain_error("UnknownLabel: leaf " + std::to_string(label));
    return q.label(label);
  }
  std::string out = "{";
  bool first = true;
  for (TermId c : pool.children(t)) {
    if (!first) out += " ";
    first = false;
    out += format_term(pool, c, q);
  }
  return out + "}";
}

// ---- CNF text format ----------------------------------------------------

namespace {

struct CnfParser {
  const std::string& text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  boost::multiprecision::cpp_int number() {
    skip_space();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number at offset " + std::to_string(pos));
    return boost::multiprecision::cpp_int(text.substr(start, pos - start));
  }

  // term := 'w' ['^' '(' cnf ')'] ['*' nat]  |  nat
  // Returns (exponent, coefficient); a bare "0" yields coefficient 0.
  CnfTerm term() {
    skip_space();
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      OrdinalCNF exp = OrdinalCNF::finite(1);
      if (eat('^')) {
        if (!eat('(')) throw parse_error("expected '(' after '^' at offset " + std::to_string(pos));
        exp = cnf();
        if (!eat(')')) throw parse_error("expected ')' at offset " + std::to_string(pos));
      }
      boost::multiprecision::cpp_int coeff = 1;
      if (eat('*')) coeff = number();
      return CnfTerm{std::move(exp), std::move(coeff)};
    }
    return CnfTerm{OrdinalCNF::zero(), number()};
  }

  OrdinalCNF cnf() {
    OrdinalCNF out;
    bool saw_zero = false;
    for (;;) {
      CnfTerm t = term();
      if (t.coeff == 0) {
        if (t.exponent.is_zero())
          saw_zero = true;  // a literal "0"; only valid standing alone
        else
          throw domain_error("MalformedCNF: zero coefficient");
      } else {
        out.terms.push_back(std::move(t));
      }
      if (!eat('+')) break;
    }
    if (saw_zero && !out.terms.empty())
      throw domain_error("MalformedCNF: \"0\" can only stand alone");
    require_valid_cnf(out);
    return out;
  }
};

std::string format_cnf_term(const CnfTerm& t) {
  std::string out;
  if (t.exponent.is_zero()) return t.coeff.str();
  Cmp vs_one = cnf_compare(t.exponent, OrdinalCNF::finite(1));
  out = vs_one == Cmp::eq ? "w" : "w^(" + format_cnf(t.exponent) + ")";
  if (t.coeff != 1) out += "*" + t.coeff.str();
  return out;
}

}  // namespace

OrdinalCNF parse_cnf(const std::string& text) {
  CnfParser p{text};
  OrdinalCNF out = p.cnf();
  p.skip_space();
  if (p.pos != text.size())
    throw parse_error("trailing input after ordinal at offset " + std::to_string(p.pos));
  return out;
}

std::string format_cnf(const OrdinalCNF& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (i) out += " + ";
    out += format_cnf_term(a.terms[i]);
  }
  return out;
}

DecSeq parse_decseq(const std::string& text) {
  DecSeq out;
  size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) return out;
  for (;;) {
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a sequence entry at offset " + std::to_string(pos));
    out.entries.push_back(std::stoi(text.substr(start, pos - start)));
    skip();
    if (pos == text.size()) return out;
    if (text[pos] != ',') throw parse_error("expected ',' at offset " + std::to_string(pos));
    ++pos;
  }
}

std::string format_decseq(const DecSeq& s) {
  std::string out;
  for (size_t i = 0; i < s.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.entries[i]);
  }
  return out;
}

json decomposition_to_json(const Decomposition& d, const Poset& p) {
  json classes = json::array();
  for (const auto& cls : d.classes) {
    json labels = json::array();
    for (int e : cls) labels.push_back(p.label(e));
    classes.push_back(json{{"ids", cls}, {"labels", labels}});
  }
  return json{{"classes", classes}, {"representatives", d.reps}, {"class_of", d.class_of}};
}

json order_map_to_json(const OrderMap& m) {
  return json{{"map", m.map},
              {"order_reflecting", m.order_reflecting},
              {"embedding", m.embedding}};
}

json make_report(const std::string& command, const std::string& status, json result) {
  return json{{"schema", "bqo.report/1"},
              {"command", command},
              {"status", status},
              {"result", std::move(result)}};
}

}  // namespace bqo::io
