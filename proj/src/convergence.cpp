#include "dset/convergence.hpp"

#include "dset/error.hpp"

#include <algorithm>

namespace dset {

namespace {

[[noreturn]] void undecidable(const std::string& why) { throw DomainError("undecidable presentation", why); }

IndexSet bp(const Point& p) { return IndexSet::branch_prefixes(p); }

// ---------------------------------------------------------------------------
// Node indicators. A set W of words gives a convergent family of cylinder
// indicators iff either no point has infinitely many prefixes in W (limit 0)
// or all but finitely many words of W are prefixes of one point x (limit the
// indicator of {x}). We track the accumulation points and whether infinitely
// many words lie off the chains through them.

struct NodeInfo {
  std::vector<Point> acc;
  bool more = false;  // further accumulation points beyond `acc`
  bool off = false;   // infinitely many words off the listed chains
  std::vector<IndexSet> antichains;  // known infinite subsets without accumulation points
};

void add_acc(NodeInfo& info, const Point& p) {
  if (std::find(info.acc.begin(), info.acc.end(), p) == info.acc.end()) info.acc.push_back(p);
}

bool converges_to_zero(const NodeInfo& i) { return i.acc.empty() && !i.more && i.off; }
bool converges_to_point(const NodeInfo& i) { return i.acc.size() == 1 && !i.more && !i.off; }

NodeInfo node_info(const IndexSet& l);

// A subset of a convergent set converges to the same limit when infinite.
NodeInfo inherit(const NodeInfo& parent, const IndexSet& subset) {
  const auto inf = subset.is_infinite();
  if (!inf) undecidable("cannot tell whether " + subset.to_string() + " is infinite");
  NodeInfo out;
  if (!*inf) return out;
  if (converges_to_zero(parent))
    out.off = true;
  else
    out.acc = parent.acc;
  return out;
}

NodeInfo chain_subset(const NodeInfo& parent, const Point& sigma, bool certified) {
  NodeInfo out;
  const bool listed = std::find(parent.acc.begin(), parent.acc.end(), sigma) != parent.acc.end();
  if (certified || listed) {
    out.acc = {sigma};
    return out;
  }
  if (parent.more) undecidable("cannot tell whether the chain through " + sigma.to_string() + " is infinite");
  return out;
}

// Points whose prefixes are removed by `b`, when b is a union of prefix sets.
std::optional<std::vector<Point>> removed_chains(const IndexSet& b) {
  if (b.kind() == IndexSet::Kind::BranchPrefixes) return std::vector<Point>{b.point()};
  if (b.kind() != IndexSet::Kind::Union) return std::nullopt;
  std::vector<Point> out;
  for (const auto& op : b.operands()) {
    auto sub = removed_chains(op);
    if (!sub) return std::nullopt;
    out.insert(out.end(), sub->begin(), sub->end());
  }
  return out;
}

NodeInfo node_info(const IndexSet& l) {
  using K = IndexSet::Kind;
  NodeInfo info;
  switch (l.kind()) {
    case K::Finite:
      return info;
    case K::All:
      info.acc = {Point("", "0"), Point("", "1")};
      info.more = true;
      info.off = true;
      info.antichains = {IndexSet::branch_siblings(Point("", "0"))};
      return info;
    case K::NodeSet: {
      const TreeSchema& t = *l.schema();
      BranchList br = enumerate_branches(t, 3);
      for (const auto& p : br.prefixes) add_acc(info, branch_code(p));
      info.more = br.more;
      if (info.acc.empty())
        info.off = schema_is_infinite(t);
      else if (info.acc.size() == 1 && !info.more)
        info.off = off_branch_infinite(t);
      else
        info.off = true;
      return info;
    }
    case K::BranchSiblings:
      info.off = l.is_infinite().value_or(false);
      if (info.off) info.antichains = {l};
      return info;
    case K::BranchPrefixes:
      info.acc = {l.point()};
      return info;
    case K::Affine:
      if (l.a() == 1 && l.b() == 0) return node_info(l.operands()[0]);
      undecidable("node indicators are only analysed on node sets, not on " + l.to_string());
    case K::Union:
      for (const auto& op : l.operands()) {
        NodeInfo sub = node_info(op);
        for (const auto& p : sub.acc) add_acc(info, p);
        info.more = info.more || sub.more;
        info.off = info.off || sub.off;
        info.antichains.insert(info.antichains.end(), sub.antichains.begin(), sub.antichains.end());
      }
      return info;
    case K::Drop:
    case K::AtLeast:
      return node_info(l.operands()[0]);
    case K::Intersect: {
      const IndexSet& a = l.operands()[0];
      const IndexSet& b = l.operands()[1];
      if (b.kind() == K::BranchPrefixes) return chain_subset(node_info(a), b.point(), l.certified());
      if (a.kind() == K::BranchPrefixes) return chain_subset(node_info(b), a.point(), l.certified());
      NodeInfo ia = node_info(a);
      if (converges_to_zero(ia) || converges_to_point(ia)) return inherit(ia, l);
      NodeInfo ib = node_info(b);
      if (converges_to_zero(ib) || converges_to_point(ib)) return inherit(ib, l);
      undecidable("intersection of two divergent node families");
    }
    case K::Difference: {
      NodeInfo ia = node_info(l.operands()[0]);
      if (auto removed = removed_chains(l.operands()[1])) {
        for (const auto& p : ia.acc)
          if (std::find(removed->begin(), removed->end(), p) == removed->end()) info.acc.push_back(p);
        info.more = ia.more;
        info.off = ia.off;
        for (const auto& a : ia.antichains) info.antichains.push_back(IndexSet::difference(a, l.operands()[1], true));
        return info;
      }
      if (converges_to_zero(ia) || converges_to_point(ia)) return inherit(ia, l);
      undecidable("difference from a divergent node family");
    }
  }
  return info;
}

std::function<IndexSet(const Point&)> drop_prefixes_of_witness(const IndexSet& set) {
  return [set](const Point& z) { return IndexSet::difference(set, bp(z), true); };
}

StrandCover node_cover(const IndexSet& l) {
  NodeInfo info = node_info(l);
  StrandCover cover;
  cover.complete = !info.more;
  if (info.more) {
    for (const auto& a : info.antichains) {
      IndexSet set = IndexSet::intersect(l, a, true);
      cover.strands.push_back({set, SymbolicFn::zero(), drop_prefixes_of_witness(set)});
    }
  }
  for (const auto& sigma : info.acc) {
    IndexSet set = IndexSet::intersect(l, bp(sigma), true);
    cover.strands.push_back({set, SymbolicFn::point_ind(sigma), [set, sigma](const Point& z) {
                               return z == sigma ? set : IndexSet::difference(set, bp(z), true);
                             }});
  }
  if (!info.more && info.off) {
    IndexSet set = l;
    if (!info.acc.empty()) {
      std::vector<IndexSet> chains;
      for (const auto& sigma : info.acc) chains.push_back(bp(sigma));
      set = IndexSet::difference(l, IndexSet::unite(std::move(chains)), true);
    }
    cover.strands.push_back({set, SymbolicFn::zero(), drop_prefixes_of_witness(set)});
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Split Cantor family. Along a strand the step points p_k converge to a point
// p; away from p the steps eventually agree with a step at p, and at p the
// side from which they approach decides the value.

// Members whose step point agrees with the strand limit point on more than
// `bits` leading bits: word length at least bits + 1 + slack.
IndexSet from_level(const IndexSet& set, std::size_t word_len) {
  if (word_len == 0) return set;
  if (word_len > 60) throw DomainError("index overflow", "witness too deep for 64-bit indices");
  return IndexSet::at_least(set, 4 * h_level_start(word_len));
}

Strand converging_strand(const IndexSet& set, const Point& p, bool below, std::size_t slack) {
  SymbolicFn limit = below ? SymbolicFn::plus_step(p) : SymbolicFn::minus_step(p);
  return {set, limit, [set, p, slack](const Point& z) {
            if (z == p) return set;
            return from_level(set, first_difference(z, p) + 1 + slack);
          }};
}

std::optional<Point> candidate_point(const PointSet& domain) {
  Point y("", "01");
  if (domain.contains(y)) return y;
  for (const auto& p : enumerate_points(6))
    if (!p.is_eventually_constant() && domain.contains(p)) return p;
  auto w = domain.witness_in(Region::whole());
  if (w && !w->is_eventually_constant()) return w;
  return std::nullopt;
}

void sibling_strands(const Point& x, Side side, std::uint64_t r, StrandCover& cover) {
  for (Side s : {Side::one, Side::zero}) {
    if (side != Side::all && side != s) continue;
    const char want = s == Side::one ? '1' : '0';
    if (x.period().find(want) == Word::npos) continue;  // only finitely many such siblings
    IndexSet set = IndexSet::affine(IndexSet::branch_siblings(x, s), 4, r);
    // A sibling at a 1 of x lies below x, at a 0 above it.
    cover.strands.push_back(converging_strand(set, x, s == Side::one, 1));
  }
}

void word_strands(const IndexSet& words, std::uint64_t r, const PointSet& domain, StrandCover& cover) {
  using K = IndexSet::Kind;
  switch (words.kind()) {
    case K::Finite:
      return;
    case K::BranchSiblings:
      sibling_strands(words.point(), words.side(), r, cover);
      return;
    case K::BranchPrefixes: {
      const Point& sigma = words.point();
      const char bit = r % 2 == 0 ? '0' : '1';
      const bool plus = r < 2;
      IndexSet set = IndexSet::affine(words, 4, r);
      if (sigma.period() == Word(1, bit)) {
        // Step points sigma|k ⌢ bit^∞ equal sigma once k passes the prefix.
        SymbolicFn limit = plus ? SymbolicFn::plus_step(sigma) : SymbolicFn::minus_step(sigma);
        const std::size_t settle = sigma.prefix().size();
        cover.strands.push_back({set, limit, [set, sigma, settle](const Point& z) {
                                   if (z == sigma) return from_level(set, settle);
                                   return from_level(set, first_difference(z, sigma) + 1);
                                 }});
      } else {
        cover.strands.push_back(converging_strand(set, sigma, bit == '0', 0));
      }
      return;
    }
    case K::Union:
      for (const auto& op : words.operands()) word_strands(op, r, domain, cover);
      return;
    case K::Drop:
    case K::AtLeast:
      word_strands(words.operands()[0], r, domain, cover);
      return;
    case K::All: {
      auto y = candidate_point(domain);
      if (!y) undecidable("no point of the domain to separate the split steps at");
      sibling_strands(*y, Side::all, r, cover);
      cover.complete = false;
      return;
    }
    default:
      undecidable("split steps are not analysed over words of " + words.to_string());
  }
}

StrandCover strand_cover_base(const DenseSequence& seq, const IndexSet& l, const PointSet& domain);

StrandCover inherited_cover(const DenseSequence& seq, const IndexSet& l, const IndexSet& parent,
                            const PointSet& domain) {
  Verdict v = decide_convergence(seq, parent, domain);
  if (!v.converges) undecidable("subset of a divergent subsequence: " + l.to_string());
  const auto inf = l.is_infinite();
  if (!inf) undecidable("cannot tell whether " + l.to_string() + " is infinite");
  StrandCover cover;
  if (!*inf) return cover;
  StrandCover parent_cover = strand_cover(seq, parent, domain);
  cover.strands.push_back({l, v.limit, [l, parent_cover](const Point& z) {
                             std::vector<IndexSet> exact;
                             for (const auto& s : parent_cover.strands) exact.push_back(s.exact_at(z));
                             return IndexSet::intersect(l, IndexSet::unite(std::move(exact)), true);
                           }});
  return cover;
}

StrandCover split_cover(const DenseSequence& seq, const IndexSet& l, const PointSet& domain) {
  using K = IndexSet::Kind;
  StrandCover cover;
  switch (l.kind()) {
    case K::Finite:
      return cover;
    case K::All:
      word_strands(l, 0, domain, cover);
      return cover;
    case K::Affine: {
      const IndexSet& inner = l.operands()[0];
      if (l.a() == 4 && l.b() < 4) {
        word_strands(inner, l.b(), domain, cover);
        return cover;
      }
      if (l.a() == 1 && l.b() == 0) return split_cover(seq, inner, domain);
      if (inner.kind() == K::All && (l.a() == 1 || l.a() == 2)) {
        word_strands(inner, l.b() % l.a(), domain, cover);
        return cover;
      }
      undecidable("split steps are not analysed on " + l.to_string());
    }
    case K::Union:
      for (const auto& op : l.operands()) {
        StrandCover sub = split_cover(seq, op, domain);
        cover.strands.insert(cover.strands.end(), sub.strands.begin(), sub.strands.end());
        cover.complete = cover.complete && sub.complete;
      }
      return cover;
    case K::Drop:
    case K::AtLeast:
      return split_cover(seq, l.operands()[0], domain);
    case K::Intersect:
      try {
        return inherited_cover(seq, l, l.operands()[0], domain);
      } catch (const DomainError& e) {
        if (e.code() != "undecidable presentation") throw;
        return inherited_cover(seq, l, l.operands()[1], domain);
      }
    case K::Difference:
      return inherited_cover(seq, l, l.operands()[0], domain);
    default:
      undecidable("split steps are indexed by 4h(s) + r; " + l.to_string() + " has no such form");
  }
}

StrandCover strand_cover_base(const DenseSequence& seq, const IndexSet& l, const PointSet& domain) {
  if (seq.base().kind == DenseSequence::Kind::NodeIndicatorsByH) return node_cover(l);
  return split_cover(seq, l, domain);
}

}  // namespace

StrandCover strand_cover(const DenseSequence& seq, const IndexSet& l, const PointSet& domain) {
  StrandCover cover = strand_cover_base(seq, l, domain);
  const std::uint64_t offset = seq.base_offset();
  for (auto& s : cover.strands) {
    IndexSet set = IndexSet::intersect(l, s.set, true);
    auto inner = s.exact_at;
    s.set = set;
    s.exact_at = [l, inner, offset](const Point& z) {
      IndexSet e = IndexSet::intersect(l, inner(z), true);
      return offset > 0 ? IndexSet::at_least(e, offset) : e;
    };
  }
  return cover;
}

namespace {

struct Disagreement {
  std::size_t i, j;
  Point z;
};

std::optional<Disagreement> find_disagreement(const StrandCover& cover, const PointSet& domain) {
  for (std::size_t i = 0; i < cover.strands.size(); ++i)
    for (std::size_t j = i + 1; j < cover.strands.size(); ++j) {
      Region r = diff_region(cover.strands[i].limit, cover.strands[j].limit, Rational(0));
      if (auto z = domain.witness_in(r)) return Disagreement{i, j, *z};
    }
  return std::nullopt;
}

}  // namespace

Verdict decide_convergence(const DenseSequence& seq, const IndexSet& l, const PointSet& domain) {
  if (l.is_infinite() == false) throw DomainError("finite index set", l.to_string() + " is finite");
  Verdict v;
  if (!domain.meets(Region::whole())) {
    v.converges = true;
    return v;
  }
  StrandCover cover = strand_cover(seq, l, domain);
  v.strand_count = cover.strands.size();
  if (auto d = find_disagreement(cover, domain)) {
    const Strand& a = cover.strands[d->i];
    const Strand& b = cover.strands[d->j];
    Rational va = eval(a.limit, d->z), vb = eval(b.limit, d->z);
    const bool a_low = va < vb;
    const Strand& lo = a_low ? a : b;
    const Strand& hi = a_low ? b : a;
    v.converges = false;
    v.witness = d->z;
    v.sub_lo = lo.exact_at(d->z);
    v.sub_hi = hi.exact_at(d->z);
    v.lo_value = a_low ? va : vb;
    v.hi_value = a_low ? vb : va;
    v.theta = (v.hi_value - v.lo_value) / 2;
    return v;
  }
  if (!cover.complete) undecidable("only part of " + l.to_string() + " could be analysed");
  if (cover.strands.empty()) throw DomainError("finite index set", l.to_string() + " is finite");
  v.converges = true;
  v.limit = cover.strands.front().limit;
  return v;
}

bool decide_convergence_to(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                           const PointSet& domain) {
  Verdict v = decide_convergence(seq, l, domain);
  return v.converges && !domain.meets(diff_region(v.limit, f, Rational(0)));
}

IndexSet refine_to_convergent(const DenseSequence& seq, const IndexSet& m, const PointSet& domain) {
  if (m.is_infinite() == false) throw DomainError("finite index set", m.to_string() + " is finite");
  StrandCover cover = strand_cover(seq, m, domain);
  if (cover.strands.empty()) undecidable("no infinite part of " + m.to_string() + " was found");
  if (cover.complete && !find_disagreement(cover, domain)) return m;
  for (const auto& s : cover.strands)
    if (s.limit.kind == SymbolicFn::Kind::Zero) return s.set;
  return cover.strands.front().set;
}

bool sampling_oracle_converges(const DenseSequence& seq, const IndexSet& l, const PointSet& domain,
                               std::size_t depth, std::size_t point_len) {
  if (depth < 2) throw DomainError("bad oracle depth", "need at least two indices");
  auto idx = l.take(depth);
  if (idx.size() < depth) throw DomainError("finite index set", "fewer than " + std::to_string(depth) + " members");
  std::vector<SymbolicFn> terms;
  for (std::size_t i = depth / 2; i < depth; ++i) terms.push_back(seq.term(idx[i]));
  for (const auto& y : enumerate_points(point_len)) {
    if (!domain.contains(y)) continue;
    const Rational first = eval(terms.front(), y);
    for (const auto& f : terms)
      if (eval(f, y) != first) return false;
  }
  return true;
}

LabeledTree tree_representation(const DenseSequence& seq, const std::vector<IndexSet>& codes, std::size_t depth) {
  LabeledTree out;
  for (const auto& code : codes) {
    if (!decide_convergence(seq, code, PointSet::everything()).converges)
      throw DomainError("not convergent", code.to_string() + " is not a convergent code");
    Node path;
    std::uint64_t label = 0;
    out.tree.add_with_prefixes(path);
    out.label[path] = 0;
    for (std::size_t k = 0; k < depth; ++k) {
      const bool member = code.contains(k);
      path.push_back(member ? 1 : 0);  // letter s(k) + 2·w(k) with w = 0^∞
      if (member) label = k;
      out.tree.add_with_prefixes(path);
      out.label[path] = label;
    }
  }
  return out;
}

}  // namespace dset
