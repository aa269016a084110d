#include "dset/json_io.hpp"

#include "dset/error.hpp"

namespace dset {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError("bad json", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t uint_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    bad(std::string("field '") + key + "' must be a natural number");
  return v.get<std::uint64_t>();
}

std::string kind_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return str_field(j, "kind");
}

Json big_to_json(const BigInt& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return c.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) bad("bad coefficient '" + s + "'");
    return BigInt(s);
  }
  bad("coefficient must be a natural number");
}

Json affine_to_json(const AffineLen& l) {
  if (l.a == 0) return l.b;
  return Json::array({l.a, l.b});
}

AffineLen affine_from_json(const Json& j) {
  if (j.is_number_integer()) return {0, j.get<std::int64_t>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  bad("length must be an integer or [a, b]");
}

}  // namespace

Json ordinal_to_json(const Ordinal& o) {
  if (o.is_zero()) return 0;
  Json out = Json::array();
  for (const auto& t : o.terms()) out.push_back(Json::array({ordinal_to_json(t.exponent), big_to_json(t.coefficient)}));
  return out;
}

Ordinal ordinal_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) bad("ordinal must not be negative");
    return Ordinal(j.get<std::uint64_t>());
  }
  if (!j.is_array()) bad("ordinal must be 0 or [[exponent, coefficient], ...]");
  std::vector<OrdinalTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("ordinal term must be [exponent, coefficient]");
    terms.push_back({ordinal_from_json(t[0]), big_from_json(t[1])});
  }
  try {
    return Ordinal::from_terms(std::move(terms));
  } catch (const DomainError& e) {
    bad(e.detail());
  }
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) bad("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    bad(e.detail());
  }
}

Json point_to_json(const Point& p) { return {{"prefix", p.prefix()}, {"period", p.period()}}; }

Point point_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return Point::parse(j.get<std::string>());
    } catch (const DomainError& e) {
      bad(e.detail());
    }
  }
  try {
    return Point(str_field(j, "prefix"), str_field(j, "period"));
  } catch (const DomainError& e) {
    if (e.code() == "bad json") throw;
    bad(e.detail());
  }
}

Json node_to_json(const Node& n) { return Json(n); }

Json fintree_to_json(const FinTree& t) {
  Json out = Json::array();
  for (const auto& n : t.nodes()) out.push_back(node_to_json(n));
  return out;
}

FinTree fintree_from_json(const Json& j) {
  if (!j.is_array()) bad("tree must be a list of integer arrays");
  std::vector<Node> nodes;
  for (const auto& n : j) {
    if (!n.is_array()) bad("tree node must be an integer array");
    Node node;
    for (const auto& v : n) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) bad("tree node entries must be non-negative integers");
      node.push_back(v.get<std::int64_t>());
    }
    nodes.push_back(std::move(node));
  }
  return FinTree::from_nodes(nodes);
}

Json monotone_map_to_json(const MonotoneMap& m) {
  Json out = Json::array();
  for (const auto& [from, to] : m) out.push_back(Json::array({node_to_json(from), node_to_json(to)}));
  return out;
}

Json schema_to_json(const TreeSchema& t) {
  using K = TreeSchema::Kind;
  switch (t.kind) {
    case K::Empty:
      return {{"kind", "Empty"}};
    case K::Single:
      return {{"kind", "Single"}};
    case K::Chain:
      return {{"kind", "Chain"}, {"len", affine_to_json(t.length)}};
    case K::Spine:
      return {{"kind", "Spine"}, {"len", affine_to_json(t.length)}, {"below", schema_to_json(*t.children[0])}};
    case K::Join: {
      Json kids = Json::array();
      for (const auto& c : t.children) kids.push_back(schema_to_json(*c));
      return {{"kind", "Join"}, {"children", kids}};
    }
    case K::OmegaJoin:
      return {{"kind", "OmegaJoin"}, {"body", schema_to_json(*t.children[0])}};
    case K::FullBranch:
      return {{"kind", "FullBranch"}};
  }
  return nullptr;
}

SchemaPtr schema_from_json(const Json& j) {
  const std::string k = kind_of(j);
  try {
    if (k == "Empty") return TreeSchema::empty();
    if (k == "Single") return TreeSchema::single();
    if (k == "Chain") return TreeSchema::chain(affine_from_json(field(j, "len")));
    if (k == "Spine") return TreeSchema::spine(affine_from_json(field(j, "len")), schema_from_json(field(j, "below")));
    if (k == "Join") {
      const Json& kids = field(j, "children");
      if (!kids.is_array()) bad("children must be a list");
      std::vector<SchemaPtr> out;
      for (const auto& c : kids) out.push_back(schema_from_json(c));
      return TreeSchema::join(std::move(out));
    }
    if (k == "OmegaJoin") return TreeSchema::omega_join(schema_from_json(field(j, "body")));
    if (k == "FullBranch") return TreeSchema::full_branch();
  } catch (const DomainError& e) {
    if (e.code() == "bad json") throw;
    bad(e.detail());
  }
  bad("unknown schema kind '" + k + "'");
}

Json index_set_to_json(const IndexSet& l) {
  using K = IndexSet::Kind;
  switch (l.kind()) {
    case K::Finite:
      return {{"kind", "Finite"}, {"values", l.values()}};
    case K::All:
      return {{"kind", "All"}};
    case K::NodeSet:
      return {{"kind", "NodeSet"}, {"schema", schema_to_json(*l.schema())}};
    case K::BranchSiblings:
      return {{"kind", "BranchSiblings"}, {"point", point_to_json(l.point())}, {"side", side_name(l.side())}};
    case K::BranchPrefixes:
      return {{"kind", "BranchPrefixes"}, {"point", point_to_json(l.point())}};
    case K::Affine:
      return {{"kind", "Affine"}, {"inner", index_set_to_json(l.operands()[0])}, {"a", l.a()}, {"b", l.b()}};
    case K::Union: {
      Json parts = Json::array();
      for (const auto& p : l.operands()) parts.push_back(index_set_to_json(p));
      return {{"kind", "Union"}, {"parts", parts}};
    }
    case K::Drop:
      return {{"kind", "Drop"}, {"inner", index_set_to_json(l.operands()[0])}, {"k", l.count()}};
    case K::AtLeast:
      return {{"kind", "AtLeast"}, {"inner", index_set_to_json(l.operands()[0])}, {"v", l.count()}};
    case K::Intersect:
    case K::Difference:
      return {{"kind", l.kind() == K::Intersect ? "Intersect" : "Difference"},
              {"left", index_set_to_json(l.operands()[0])},
              {"right", index_set_to_json(l.operands()[1])},
              {"certified", l.certified()}};
  }
  return nullptr;
}

IndexSet index_set_from_json(const Json& j) {
  const std::string k = kind_of(j);
  try {
    if (k == "Finite") {
      const Json& v = field(j, "values");
      if (!v.is_array()) bad("values must be a list");
      std::vector<std::uint64_t> vals;
      for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) bad("values must be naturals");
        vals.push_back(x.get<std::uint64_t>());
      }
      return IndexSet::finite(std::move(vals));
    }
    if (k == "All") return IndexSet::all();
    if (k == "NodeSet") return IndexSet::node_set(schema_from_json(field(j, "schema")));
    if (k == "BranchSiblings") {
      Side side = j.contains("side") ? parse_side(str_field(j, "side")) : Side::all;
      return IndexSet::branch_siblings(point_from_json(field(j, "point")), side);
    }
    if (k == "BranchPrefixes") return IndexSet::branch_prefixes(point_from_json(field(j, "point")));
    if (k == "Affine")
      return IndexSet::affine(index_set_from_json(field(j, "inner")), uint_field(j, "a"), uint_field(j, "b"));
    if (k == "Union") {
      const Json& p = field(j, "parts");
      if (!p.is_array()) bad("parts must be a list");
      std::vector<IndexSet> parts;
      for (const auto& x : p) parts.push_back(index_set_from_json(x));
      return IndexSet::unite(std::move(parts));
    }
    if (k == "Drop") return IndexSet::drop(index_set_from_json(field(j, "inner")), uint_field(j, "k"));
    if (k == "AtLeast") return IndexSet::at_least(index_set_from_json(field(j, "inner")), uint_field(j, "v"));
    if (k == "Intersect" || k == "Difference") {
      IndexSet a = index_set_from_json(field(j, "left"));
      IndexSet b = index_set_from_json(field(j, "right"));
      const bool cert = j.contains("certified") && j.at("certified").is_boolean() && j.at("certified").get<bool>();
      return k == "Intersect" ? IndexSet::intersect(a, b, cert) : IndexSet::difference(a, b, cert);
    }
  } catch (const DomainError& e) {
    if (e.code() == "bad json") throw;
    bad(e.detail());
  }
  bad("unknown index set kind '" + k + "'");
}

Json symbolic_fn_to_json(const SymbolicFn& f) {
  using K = SymbolicFn::Kind;
  switch (f.kind) {
    case K::PlusStep:
      return {{"kind", "PlusStep"}, {"point", point_to_json(f.point)}};
    case K::MinusStep:
      return {{"kind", "MinusStep"}, {"point", point_to_json(f.point)}};
    case K::NodeInd:
      return {{"kind", "NodeInd"}, {"word", f.word}};
    case K::PointInd:
      return {{"kind", "PointInd"}, {"point", point_to_json(f.point)}};
    case K::Const:
      return {{"kind", "Const"}, {"value", rational_to_json(f.value)}};
    case K::Zero:
      return {{"kind", "Zero"}};
  }
  return nullptr;
}

SymbolicFn symbolic_fn_from_json(const Json& j) {
  const std::string k = kind_of(j);
  try {
    if (k == "PlusStep") return SymbolicFn::plus_step(point_from_json(field(j, "point")));
    if (k == "MinusStep") return SymbolicFn::minus_step(point_from_json(field(j, "point")));
    if (k == "NodeInd") return SymbolicFn::node_ind(str_field(j, "word"));
    if (k == "PointInd") return SymbolicFn::point_ind(point_from_json(field(j, "point")));
    if (k == "Const") return SymbolicFn::constant(rational_from_json(field(j, "value")));
    if (k == "Zero") return SymbolicFn::zero();
  } catch (const DomainError& e) {
    if (e.code() == "bad json") throw;
    bad(e.detail());
  }
  bad("unknown function kind '" + k + "'");
}

Json sequence_to_json(const DenseSequence& s) {
  if (s.kind != DenseSequence::Kind::FiniteTableWithTail) return {{"kind", s.name()}};
  Json table = Json::array();
  for (const auto& f : s.table) table.push_back(symbolic_fn_to_json(f));
  return {{"kind", s.name()}, {"table", table}, {"tail", sequence_to_json(*s.tail)}};
}

DenseSequence sequence_from_json(const Json& j) {
  const std::string k = kind_of(j);
  if (k == "SplitCantorCanonical") return DenseSequence::split_cantor();
  if (k == "NodeIndicatorsByH") return DenseSequence::node_indicators();
  if (k == "FiniteTableWithTail") {
    const Json& t = field(j, "table");
    if (!t.is_array()) bad("table must be a list");
    std::vector<SymbolicFn> table;
    for (const auto& f : t) table.push_back(symbolic_fn_from_json(f));
    return DenseSequence::table_with_tail(std::move(table), sequence_from_json(field(j, "tail")));
  }
  bad("unknown sequence kind '" + k + "'");
}

Json point_set_to_json(const PointSet& a) {
  using K = PointSet::Kind;
  switch (a.kind()) {
    case K::Everything:
      return {{"kind", "Everything"}};
    case K::Empty:
      return {{"kind", "Empty"}};
    case K::Clopen:
      return {{"kind", "Clopen"}, {"words", a.clopen_set().words()}};
    case K::Interval: {
      const Interval& iv = a.lex_interval();
      return {{"kind", "Interval"},
              {"lo", point_to_json(iv.lo)},
              {"lo_closed", iv.lo_closed},
              {"hi", point_to_json(iv.hi)},
              {"hi_closed", iv.hi_closed}};
    }
    case K::NotEventuallyConstant:
      return {{"kind", "NotEventuallyConstant"}};
    case K::And:
    case K::Or:
      return {{"kind", a.kind() == K::And ? "And" : "Or"},
              {"left", point_set_to_json(a.operands()[0])},
              {"right", point_set_to_json(a.operands()[1])}};
    case K::Not:
      return {{"kind", "Not"}, {"operand", point_set_to_json(a.operands()[0])}};
  }
  return nullptr;
}

PointSet point_set_from_json(const Json& j) {
  const std::string k = kind_of(j);
  try {
    if (k == "Everything") return PointSet::everything();
    if (k == "Empty") return PointSet::nothing();
    if (k == "Clopen") {
      const Json& w = field(j, "words");
      if (!w.is_array()) bad("words must be a list");
      std::vector<Word> words;
      for (const auto& x : w) {
        if (!x.is_string()) bad("words must be strings");
        words.push_back(x.get<std::string>());
      }
      return PointSet::clopen(ClopenSet(std::move(words)));
    }
    if (k == "Interval") {
      auto flag = [&](const char* key) { return !j.contains(key) || j.at(key).get<bool>(); };
      return PointSet::interval(
          {point_from_json(field(j, "lo")), flag("lo_closed"), point_from_json(field(j, "hi")), flag("hi_closed")});
    }
    if (k == "NotEventuallyConstant") return PointSet::not_eventually_constant();
    if (k == "And") return PointSet::both(point_set_from_json(field(j, "left")), point_set_from_json(field(j, "right")));
    if (k == "Or")
      return PointSet::either(point_set_from_json(field(j, "left")), point_set_from_json(field(j, "right")));
    if (k == "Not") return PointSet::negate(point_set_from_json(field(j, "operand")));
  } catch (const DomainError& e) {
    if (e.code() == "bad json") throw;
    bad(e.detail());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
  bad("unknown point set kind '" + k + "'");
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["converges"] = v.converges;
  if (v.converges) {
    out["limit"] = symbolic_fn_to_json(v.limit);
  } else {
    out["witness"] = point_to_json(*v.witness);
    out["sub_lo"] = index_set_to_json(*v.sub_lo);
    out["sub_hi"] = index_set_to_json(*v.sub_hi);
    out["lo_value"] = rational_to_json(v.lo_value);
    out["hi_value"] = rational_to_json(v.hi_value);
    out["theta"] = rational_to_json(v.theta);
  }
  out["strands"] = v.strand_count;
  return out;
}

Json compact_to_json(const Compact& k) {
  if (!k) return nullptr;
  Json atts = Json::array();
  for (const auto& a : k->attachments) {
    if (a.kind == Attachment::Kind::Cycle) {
      Json shapes = Json::array();
      for (const auto& s : a.shapes) shapes.push_back(compact_to_json(s));
      atts.push_back({{"cycle", shapes}});
      continue;
    }
    const Ladder& l = a.ladder;
    Json lj = {{"pattern", pattern_name(l.pattern)},
               {"base", ordinal_to_json(l.base)},
               {"exponent", l.exponent},
               {"offset", l.offset},
               {"derived", l.derived}};
    if (l.derived > 0) lj["pair"] = Json::array({rational_to_json(l.da), rational_to_json(l.db)});
    atts.push_back({{"ladder", lj}});
  }
  return {{"value", rational_to_json(k->value)}, {"attachments", atts}};
}

Compact compact_from_json(const Json& j) {
  if (j.is_null()) return nullptr;
  const Rational v = rational_from_json(field(j, "value"));
  std::vector<Attachment> atts;
  if (j.contains("attachments")) {
    const Json& list = j.at("attachments");
    if (!list.is_array()) bad("attachments must be a list");
    for (const auto& a : list) {
      try {
        if (a.contains("cycle")) {
          const Json& shapes = a.at("cycle");
          if (!shapes.is_array()) bad("cycle must be a list");
          std::vector<Compact> out;
          for (const auto& s : shapes) out.push_back(compact_from_json(s));
          atts.push_back(Attachment::cycle(std::move(out)));
        } else if (a.contains("ladder")) {
          const Json& lj = a.at("ladder");
          Ladder l;
          l.pattern = parse_pattern(str_field(lj, "pattern"));
          l.base = ordinal_from_json(field(lj, "base"));
          l.exponent = static_cast<std::uint32_t>(uint_field(lj, "exponent"));
          l.offset = uint_field(lj, "offset");
          l.derived = lj.contains("derived") ? uint_field(lj, "derived") : 0;
          if (l.derived > 0) {
            const Json& p = field(lj, "pair");
            if (!p.is_array() || p.size() != 2) bad("pair must be [a, b]");
            l.da = rational_from_json(p[0]);
            l.db = rational_from_json(p[1]);
          }
          atts.push_back(Attachment::of_ladder(std::move(l)));
        } else {
          bad("attachment needs 'cycle' or 'ladder'");
        }
      } catch (const DomainError& e) {
        if (e.code() == "bad json") throw;
        bad(e.detail());
      }
    }
  }
  return apex(v, std::move(atts));
}

Json lfnode_to_json(const LfNode& n) {
  Json out = {{"s", n.s}};
  if (!n.t.empty()) out["t"] = n.t;
  out["w"] = n.w;
  return out;
}

LfNode lfnode_from_json(const Json& j) {
  try {
    LfNode n;
    n.s = field(j, "s").get<std::vector<std::uint64_t>>();
    if (j.contains("t")) n.t = j.at("t").get<std::vector<FinBlock>>();
    n.w = field(j, "w").get<std::vector<std::uint64_t>>();
    return n;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json document(Json payload) {
  Json out = {{"schema", "v1"}};
  for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json error_json(const std::string& code, const std::string& detail) {
  return {{"schema", "v1"}, {"error", code}, {"detail", detail}};
}

}  // namespace dset
