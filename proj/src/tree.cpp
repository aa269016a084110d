#include "dset/tree.hpp"

#include "dset/error.hpp"

#include <algorithm>

namespace dset {

std::string node_to_string(const Node& node) {
  std::string out = "(";
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(node[i]);
  }
  return out + ")";
}

bool is_node_prefix(const Node& prefix, const Node& node) {
  return prefix.size() <= node.size() && std::equal(prefix.begin(), prefix.end(), node.begin());
}

// ---------------------------------------------------------------------------
// Finite trees

FinTree FinTree::from_nodes(const std::vector<Node>& nodes) {
  FinTree t;
  t.nodes_.insert(nodes.begin(), nodes.end());
  for (const auto& n : t.nodes_) {
    if (n.empty()) continue;
    Node parent(n.begin(), n.end() - 1);
    if (!t.contains(parent))
      throw DomainError("not a tree", node_to_string(n) + " is present but its parent is not");
  }
  return t;
}

FinTree FinTree::closure_of(const std::vector<Node>& nodes) {
  FinTree t;
  for (const auto& n : nodes) t.add_with_prefixes(n);
  return t;
}

FinTree FinTree::chain(std::size_t k) {
  FinTree t;
  if (k > 0) t.add_with_prefixes(Node(k - 1, 0));
  return t;
}

void FinTree::add_with_prefixes(const Node& n) {
  for (std::size_t len = 0; len <= n.size(); ++len) nodes_.emplace(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(len));
}

std::vector<Node> FinTree::children(const Node& n) const {
  std::vector<Node> out;
  for (auto it = nodes_.upper_bound(n); it != nodes_.end() && is_node_prefix(n, *it); ++it)
    if (it->size() == n.size() + 1) out.push_back(*it);
  return out;
}

FinTree derivative(const FinTree& t) {
  FinTree out;
  for (const auto& n : t.nodes())
    if (!n.empty()) out.add_with_prefixes(Node(n.begin(), n.end() - 1));
  return out;
}

namespace {

// Longest chain (node count) starting at each node.
std::map<Node, std::size_t> heights(const FinTree& t) {
  std::map<Node, std::size_t> h;
  for (auto it = t.nodes().rbegin(); it != t.nodes().rend(); ++it) {
    std::size_t& mine = h[*it];
    mine = std::max<std::size_t>(mine, 1);
    if (!it->empty()) {
      std::size_t& parent = h[Node(it->begin(), it->end() - 1)];
      parent = std::max(parent, mine + 1);
    }
  }
  return h;
}

}  // namespace

std::size_t rank_finite(const FinTree& t) {
  if (t.empty()) return 0;
  return heights(t).at(Node{});
}

Ordinal rank(const FinTree& t) { return Ordinal(rank_finite(t)); }

namespace {

struct MapSearch {
  std::vector<Node> order;  // nodes of S, parents first
  std::map<Node, std::size_t> hs, ht;
  const FinTree* t = nullptr;
  MonotoneMap assignment;

  bool assign(std::size_t i) {
    if (i == order.size()) return true;
    const Node& s = order[i];
    const std::size_t need = hs.at(s);
    std::vector<Node> candidates;
    if (s.empty()) {
      for (const auto& n : t->nodes())
        if (ht.at(n) >= need) candidates.push_back(n);
    } else {
      const Node& above = assignment.at(Node(s.begin(), s.end() - 1));
      for (auto it = t->nodes().upper_bound(above); it != t->nodes().end() && is_node_prefix(above, *it); ++it)
        if (ht.at(*it) >= need) candidates.push_back(*it);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Node& a, const Node& b) { return a.size() < b.size(); });
    for (const auto& c : candidates) {
      assignment[s] = c;
      if (assign(i + 1)) return true;
    }
    assignment.erase(s);
    return false;
  }
};

}  // namespace

std::optional<MonotoneMap> find_monotone_map(const FinTree& s, const FinTree& t) {
  if (s.empty()) return MonotoneMap{};
  MapSearch search;
  search.order.assign(s.nodes().begin(), s.nodes().end());
  search.hs = heights(s);
  search.ht = heights(t);
  search.t = &t;
  if (!search.assign(0)) return std::nullopt;
  return search.assignment;
}

bool verify_monotone(const MonotoneMap& m, const FinTree& s, const FinTree& t) {
  if (m.size() != s.size())
    throw DomainError("map domain", "map has " + std::to_string(m.size()) + " entries for " +
                                        std::to_string(s.size()) + " nodes");
  for (const auto& [from, to] : m) {
    if (!s.contains(from)) throw DomainError("map domain", node_to_string(from) + " is not a node of S");
    if (!t.contains(to)) throw DomainError("map range", node_to_string(to) + " is not a node of T");
  }
  // Strict extension is transitive, so parent/child pairs suffice.
  for (const auto& [from, to] : m) {
    if (from.empty()) continue;
    const Node& up = m.at(Node(from.begin(), from.end() - 1));
    if (!(up.size() < to.size() && is_node_prefix(up, to))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Schemas

namespace {

using Kind = TreeSchema::Kind;

SchemaPtr make(Kind k, AffineLen len = {}, std::vector<SchemaPtr> children = {}) {
  auto s = std::make_shared<TreeSchema>();
  s->kind = k;
  s->length = len;
  s->children = std::move(children);
  return s;
}

void check_len(const AffineLen& len) {
  if (len.a < 0 || len.b < 0) throw DomainError("bad schema", "lengths must have non-negative coefficients");
}

void check_child(const SchemaPtr& p) {
  if (!p) throw DomainError("bad schema", "missing subtree");
}

}  // namespace

SchemaPtr TreeSchema::empty() { return make(Kind::Empty); }
SchemaPtr TreeSchema::single() { return make(Kind::Single); }
SchemaPtr TreeSchema::chain(AffineLen len) {
  check_len(len);
  return make(Kind::Chain, len);
}
SchemaPtr TreeSchema::spine(AffineLen len, SchemaPtr below) {
  check_len(len);
  check_child(below);
  return make(Kind::Spine, len, {std::move(below)});
}
SchemaPtr TreeSchema::join(std::vector<SchemaPtr> children) {
  for (const auto& c : children) check_child(c);
  return make(Kind::Join, {}, std::move(children));
}
SchemaPtr TreeSchema::omega_join(SchemaPtr body) {
  check_child(body);
  return make(Kind::OmegaJoin, {}, {std::move(body)});
}
SchemaPtr TreeSchema::full_branch() { return make(Kind::FullBranch); }

namespace {

bool empty_at(const TreeSchema& t, std::int64_t n) {
  switch (t.kind) {
    case Kind::Empty:
      return true;
    case Kind::Chain:
      return t.length.at(n) <= 0;
    case Kind::Spine:
      return t.length.at(n) <= 0 && empty_at(*t.children[0], n);
    default:
      return false;
  }
}

// o(T) at a variable value n is max over pieces of base + (a·n + b).
struct RankPiece {
  Ordinal base;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

std::vector<RankPiece> rank_pieces(const TreeSchema& t) {
  switch (t.kind) {
    case Kind::Empty:
      return {RankPiece{}};
    case Kind::Single:
      return {RankPiece{Ordinal(), 0, 1}};
    case Kind::Chain:
      return {RankPiece{Ordinal(), t.length.a, t.length.b}};
    case Kind::Spine: {
      auto pieces = rank_pieces(*t.children[0]);
      for (auto& p : pieces) {
        p.a += t.length.a;
        p.b += t.length.b;
      }
      return pieces;
    }
    case Kind::Join: {
      std::vector<RankPiece> pieces{RankPiece{}};
      for (const auto& c : t.children) {
        auto sub = rank_pieces(*c);
        pieces.insert(pieces.end(), sub.begin(), sub.end());
      }
      for (auto& p : pieces) p.b += 1;
      return pieces;
    }
    case Kind::OmegaJoin: {
      Ordinal sup;
      for (const auto& p : rank_pieces(*t.children[0])) {
        Ordinal top = p.a > 0 ? p.base + Ordinal::omega() : p.base + Ordinal(static_cast<std::uint64_t>(p.b));
        sup = ord_max(sup, top);
      }
      return {RankPiece{sup + Ordinal(1), 0, 0}};
    }
    case Kind::FullBranch:
      throw DomainError("not well-founded", "schema contains an infinite branch");
  }
  return {};
}

bool contains_at(const TreeSchema& t, const Node& node, std::size_t pos, std::int64_t n) {
  switch (t.kind) {
    case Kind::Empty:
      return false;
    case Kind::Single:
      return pos == node.size();
    case Kind::Chain:
    case Kind::Spine: {
      const std::int64_t len = t.length.at(n);
      for (std::int64_t j = 0; j < len; ++j) {
        if (pos == node.size()) return true;
        if (node[pos] != 0) return false;
        ++pos;
      }
      if (t.kind == Kind::Chain) return false;
      return contains_at(*t.children[0], node, pos, n);
    }
    case Kind::Join: {
      if (pos == node.size()) return true;
      const std::int64_t i = node[pos];
      if (i < 0 || static_cast<std::size_t>(i) >= t.children.size()) return false;
      return contains_at(*t.children[static_cast<std::size_t>(i)], node, pos + 1, n);
    }
    case Kind::OmegaJoin: {
      if (pos == node.size()) return true;
      const std::int64_t m = node[pos];
      if (m < 0) return false;
      return contains_at(*t.children[0], node, pos + 1, m);
    }
    case Kind::FullBranch:
      return std::all_of(node.begin() + static_cast<std::ptrdiff_t>(pos), node.end(),
                         [](std::int64_t v) { return v == 0; });
  }
  return false;
}

// Depth-first walk. `allow(cur, letter, omega)` decides whether to descend to
// cur ⌢ letter; it must eventually refuse along every path.
using Allow = std::function<bool(const Node&, std::int64_t, bool)>;

void walk(const TreeSchema& t, std::int64_t n, Node& cur, const Allow& allow,
          const std::function<void(const Node&)>& emit) {
  if (empty_at(t, n)) return;
  switch (t.kind) {
    case Kind::Empty:
      return;
    case Kind::Single:
      emit(cur);
      return;
    case Kind::Chain:
    case Kind::Spine: {
      const std::int64_t len = t.length.at(n);
      std::size_t pushed = 0;
      bool stopped = false;
      for (std::int64_t j = 0; j < len; ++j) {
        if (j > 0) {
          if (!allow(cur, 0, false)) {
            stopped = true;
            break;
          }
          cur.push_back(0);
          ++pushed;
        }
        emit(cur);
      }
      if (!stopped && t.kind == Kind::Spine) {
        if (len == 0) {
          walk(*t.children[0], n, cur, allow, emit);
        } else if (allow(cur, 0, false)) {
          cur.push_back(0);
          walk(*t.children[0], n, cur, allow, emit);
          cur.pop_back();
        }
      }
      cur.resize(cur.size() - pushed);
      return;
    }
    case Kind::Join:
      emit(cur);
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (!allow(cur, static_cast<std::int64_t>(i), false)) continue;
        cur.push_back(static_cast<std::int64_t>(i));
        walk(*t.children[i], n, cur, allow, emit);
        cur.pop_back();
      }
      return;
    case Kind::OmegaJoin:
      emit(cur);
      for (std::int64_t m = 0; allow(cur, m, true); ++m) {
        cur.push_back(m);
        walk(*t.children[0], m, cur, allow, emit);
        cur.pop_back();
      }
      return;
    case Kind::FullBranch: {
      emit(cur);
      std::size_t pushed = 0;
      while (allow(cur, 0, false)) {
        cur.push_back(0);
        ++pushed;
        emit(cur);
      }
      cur.resize(cur.size() - pushed);
      return;
    }
  }
}

std::size_t code_length(const Node& node) {
  std::size_t len = 0;
  for (auto v : node) len += static_cast<std::size_t>(v) + 1;
  return len;
}

void collect_branches(const TreeSchema& t, std::int64_t n, Node prefix, std::size_t limit, BranchList& out) {
  switch (t.kind) {
    case Kind::FullBranch:
      if (out.prefixes.size() < limit)
        out.prefixes.push_back(prefix);
      else
        out.more = true;
      return;
    case Kind::Spine:
      prefix.insert(prefix.end(), static_cast<std::size_t>(t.length.at(n)), 0);
      collect_branches(*t.children[0], n, std::move(prefix), limit, out);
      return;
    case Kind::Join:
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        Node p = prefix;
        p.push_back(static_cast<std::int64_t>(i));
        collect_branches(*t.children[i], n, std::move(p), limit, out);
      }
      return;
    case Kind::OmegaJoin:
      if (is_wellfounded(*t.children[0])) return;
      for (std::int64_t m = 0; out.prefixes.size() < limit; ++m) {
        Node p = prefix;
        p.push_back(m);
        collect_branches(*t.children[0], m, std::move(p), limit, out);
      }
      out.more = true;
      return;
    default:
      return;
  }
}

}  // namespace

bool is_wellfounded(const TreeSchema& t) {
  if (t.kind == Kind::FullBranch) return false;
  return std::all_of(t.children.begin(), t.children.end(), [](const SchemaPtr& c) { return is_wellfounded(*c); });
}

Ordinal schema_rank(const TreeSchema& t) {
  Ordinal best;
  for (const auto& p : rank_pieces(t)) best = ord_max(best, p.base + Ordinal(static_cast<std::uint64_t>(p.b)));
  return best;
}

bool schema_contains(const TreeSchema& t, const Node& node) { return contains_at(t, node, 0, 0); }

bool schema_is_infinite(const TreeSchema& t) {
  switch (t.kind) {
    case Kind::Spine:
      return schema_is_infinite(*t.children[0]);
    case Kind::Join:
      return std::any_of(t.children.begin(), t.children.end(),
                         [](const SchemaPtr& c) { return schema_is_infinite(*c); });
    case Kind::OmegaJoin:
      // Lengths are affine with non-negative coefficients, so a body that is
      // empty at 1 is empty everywhere past 0.
      return !empty_at(*t.children[0], 1);
    case Kind::FullBranch:
      return true;
    default:
      return false;
  }
}

FinTree truncate_schema(const TreeSchema& t, std::size_t depth, std::size_t width) {
  FinTree out;
  Node cur;
  walk(
      t, 0, cur,
      [&](const Node& at, std::int64_t letter, bool omega) {
        return at.size() < depth && (!omega || letter < static_cast<std::int64_t>(width));
      },
      [&](const Node& n) { out.add_with_prefixes(n); });
  return out;
}

void visit_coded_nodes(const TreeSchema& t, std::size_t max_code_len, const std::function<void(const Node&)>& visit) {
  Node cur;
  walk(
      t, 0, cur,
      [&](const Node& at, std::int64_t letter, bool) {
        return code_length(at) + static_cast<std::size_t>(letter) + 1 <= max_code_len;
      },
      visit);
}

Node konig_branch(const TreeSchema& t, std::size_t depth) {
  if (is_wellfounded(t)) throw DomainError("no infinite branch", "schema is well-founded");
  Node out;
  const TreeSchema* cur = &t;
  std::int64_t n = 0;
  std::int64_t pending_zeros = 0;  // remaining chain nodes of a Spine before its subtree
  while (out.size() < depth) {
    if (pending_zeros > 0) {
      out.push_back(0);
      --pending_zeros;
      continue;
    }
    switch (cur->kind) {
      case Kind::FullBranch:
        out.push_back(0);
        break;
      case Kind::Spine: {
        const std::int64_t len = cur->length.at(n);
        cur = cur->children[0].get();
        pending_zeros = len;
        break;
      }
      case Kind::Join: {
        auto it = std::find_if(cur->children.begin(), cur->children.end(),
                               [](const SchemaPtr& c) { return !is_wellfounded(*c); });
        out.push_back(it - cur->children.begin());
        cur = it->get();
        break;
      }
      case Kind::OmegaJoin:
        out.push_back(0);
        cur = cur->children[0].get();
        n = 0;
        break;
      default:
        throw DomainError("no infinite branch", "reached a well-founded part");
    }
  }
  return out;
}

BranchList enumerate_branches(const TreeSchema& t, std::size_t limit) {
  BranchList out;
  collect_branches(t, 0, {}, limit, out);
  return out;
}

bool off_branch_infinite(const TreeSchema& t) {
  switch (t.kind) {
    case Kind::FullBranch:
      return false;
    case Kind::Spine:
      return off_branch_infinite(*t.children[0]);
    case Kind::Join: {
      bool off = false;
      for (const auto& c : t.children) off = off || (is_wellfounded(*c) ? schema_is_infinite(*c) : off_branch_infinite(*c));
      return off;
    }
    case Kind::OmegaJoin:
      throw DomainError("many branches", "an OmegaJoin over an ill-founded body has infinitely many branches");
    default:
      return schema_is_infinite(t);
  }
}

Word node_code(const Node& node) {
  Word w;
  for (auto v : node) {
    if (v < 0) throw DomainError("bad node", "negative letters have no binary code");
    w.append(static_cast<std::size_t>(v), '1');
    w.push_back('0');
  }
  return w;
}

std::optional<Node> decode_node(const Word& w) {
  Node out;
  std::int64_t run = 0;
  for (char c : w) {
    if (c == '1') {
      ++run;
    } else {
      out.push_back(run);
      run = 0;
    }
  }
  if (run != 0) return std::nullopt;
  return out;
}

Point branch_code(const Node& prefix) { return Point::eventually(node_code(prefix), '0'); }

}  // namespace dset
