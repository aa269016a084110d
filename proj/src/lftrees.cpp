#include "dset/lftrees.hpp"

#include "dset/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dset {

bool is_acceptable(const std::vector<std::uint64_t>& w) {
  Word prev;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Word u = ball_word(w[i]);
    if (i > 0 && !is_prefix(prev, u)) return false;
    if (u.size() < 63 && (std::uint64_t{1} << u.size()) < i + 1) return false;
    prev = u;
  }
  return true;
}

bool block_less(const FinBlock& f, const FinBlock& g) { return f.back() < g.front(); }

std::string tree_kind_name(TreeKind k) { return k == TreeKind::T ? "T" : "S"; }

TreeKind parse_tree_kind(const std::string& s) {
  if (s == "T") return TreeKind::T;
  if (s == "S") return TreeKind::S;
  throw DomainError("bad kind", "expected T or S, got '" + s + "'");
}

Rational separation_threshold(std::uint64_t d) { return Rational(1, static_cast<std::int64_t>(d) + 1); }

namespace {

void check_structure(const LfNode& n, bool with_blocks) {
  if (n.w.size() != n.s.size() || (with_blocks ? n.t.size() != n.s.size() : !n.t.empty()))
    throw DomainError("malformed node", "coordinate lengths differ in " + lfnode_to_string(n));
  for (std::size_t i = 1; i < n.s.size(); ++i)
    if (n.s[i - 1] >= n.s[i]) throw DomainError("malformed node", "s is not increasing");
  for (std::size_t i = 0; i < n.t.size(); ++i) {
    const FinBlock& f = n.t[i];
    if (f.empty()) throw DomainError("malformed node", "empty block");
    for (std::size_t j = 1; j < f.size(); ++j)
      if (f[j - 1] >= f[j]) throw DomainError("malformed node", "block is not sorted");
    if (i > 0 && !block_less(n.t[i - 1], f)) throw DomainError("malformed node", "blocks are not increasing");
  }
}

bool indices_in(const IndexSet& l, const LfNode& n) {
  for (auto v : n.s)
    if (!l.contains(v)) return false;
  for (const auto& f : n.t)
    for (auto v : f)
      if (!l.contains(v)) return false;
  return true;
}

Region block_region(const DenseSequence& seq, std::uint64_t n, const FinBlock& f, const Rational& theta) {
  Region r;
  for (auto m : f) r = r.unite(diff_region(seq.term(n), seq.term(m), theta));
  return r;
}

void check_caps(const Caps& caps) {
  if (caps.n_l == 0 || caps.n_l > 24) throw DomainError("caps", "n_l must be in 1..24");
  if (caps.ball_len > 20) throw DomainError("caps", "ball_len must be <= 20");
  if (caps.block_max == 0) throw DomainError("caps", "block_max must be >= 1");
}

// Every word u with prefix `from` and |u| <= max_len, shortest first.
std::vector<Word> extensions(const Word& from, std::size_t max_len) {
  std::vector<Word> out{from};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() < max_len) {
      out.push_back(out[i] + '0');
      out.push_back(out[i] + '1');
    }
  return out;
}

std::size_t min_ball_len(std::size_t i) {
  std::size_t j = 0;
  while ((std::uint64_t{1} << j) < i + 1) ++j;
  return j;
}

}  // namespace

bool tdl_member(const DenseSequence& seq, const IndexSet& l, std::uint64_t d, const LfNode& node) {
  check_structure(node, true);
  if (!indices_in(l, node) || !is_acceptable(node.w)) return false;
  const Rational theta = separation_threshold(d);
  for (std::size_t i = 0; i < node.size(); ++i)
    if (!block_region(seq, node.s[i], node.t[i], theta).contains_cylinder(ball_word(node.w[i]))) return false;
  return true;
}

bool sdl_member(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f, std::uint64_t d,
                const LfNode& node) {
  check_structure(node, false);
  if (!indices_in(l, node) || !is_acceptable(node.w)) return false;
  const Rational theta = separation_threshold(d);
  for (std::size_t i = 0; i < node.size(); ++i)
    if (!diff_region(seq.term(node.s[i]), f, theta).contains_cylinder(ball_word(node.w[i]))) return false;
  return true;
}

bool glued_member(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                  const LfNode& node) {
  if (node.size() == 0 && node.t.empty() && node.w.empty()) return true;
  if (node.s.empty() || node.w.empty() || (kind == TreeKind::T && node.t.empty()))
    throw DomainError("malformed node", "glued node lacks a leading coordinate");
  const std::uint64_t d = node.s[0];
  if (node.w[0] != d || (kind == TreeKind::T && node.t[0] != FinBlock{d}))
    throw DomainError("malformed node", "leading coordinates disagree in " + lfnode_to_string(node));
  LfNode rest;
  rest.s.assign(node.s.begin() + 1, node.s.end());
  rest.w.assign(node.w.begin() + 1, node.w.end());
  if (kind == TreeKind::T) {
    rest.t.assign(node.t.begin() + 1, node.t.end());
    return tdl_member(seq, l, d, rest);
  }
  if (!node.t.empty()) throw DomainError("malformed node", "S nodes carry no blocks");
  return sdl_member(seq, l, f, d, rest);
}

Node TruncatedTree::encode(const LfNode& node) const {
  const std::size_t lb = caps.ball_len + 1;
  Node out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    auto pos = [&](std::uint64_t v) -> std::uint64_t {
      auto it = std::lower_bound(elements.begin(), elements.end(), v);
      if (it == elements.end() || *it != v)
        throw DomainError("caps", "index " + std::to_string(v) + " is not among the first " + std::to_string(caps.n_l) +
                                      " members of L");
      return static_cast<std::uint64_t>(it - elements.begin());
    };
    const std::uint64_t l = node.w[i];
    if (ball_word(l).size() > caps.ball_len) throw DomainError("caps", "ball " + std::to_string(l) + " is too small");
    std::uint64_t letter = pos(node.s[i]);
    if (kind == TreeKind::T) {
      if (node.t[i].size() > caps.block_max) throw DomainError("caps", "block larger than block_max");
      std::uint64_t mask = 0;
      for (auto m : node.t[i]) mask |= std::uint64_t{1} << pos(m);
      letter = (letter << caps.n_l) | mask;
    }
    out.push_back(static_cast<std::int64_t>((letter << lb) | l));
  }
  return out;
}

LfNode TruncatedTree::decode(const Node& node) const {
  const std::size_t lb = caps.ball_len + 1;
  LfNode out;
  for (std::int64_t raw : node) {
    std::uint64_t letter = static_cast<std::uint64_t>(raw);
    out.w.push_back(letter & ((std::uint64_t{1} << lb) - 1));
    letter >>= lb;
    if (kind == TreeKind::T) {
      const std::uint64_t mask = letter & ((std::uint64_t{1} << caps.n_l) - 1);
      letter >>= caps.n_l;
      FinBlock f;
      for (std::size_t p = 0; p < caps.n_l; ++p)
        if (mask >> p & 1) f.push_back(elements.at(p));
      out.t.push_back(std::move(f));
    }
    out.s.push_back(elements.at(letter));
  }
  return out;
}

TruncatedTree truncate_tree(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                            std::uint64_t d, const Caps& caps) {
  check_caps(caps);
  TruncatedTree out;
  out.kind = kind;
  out.caps = caps;
  out.elements = l.take(caps.n_l);
  const std::size_t n = out.elements.size();
  const Rational theta = separation_threshold(d);

  // Blocks over window positions, as sorted position lists in lex order.
  std::vector<std::vector<std::size_t>> blocks;
  if (kind == TreeKind::T) {
    std::function<void(std::vector<std::size_t>&, std::size_t)> gen = [&](std::vector<std::size_t>& cur,
                                                                         std::size_t from) {
      for (std::size_t p = from; p < n; ++p) {
        cur.push_back(p);
        blocks.push_back(cur);
        if (cur.size() < caps.block_max) gen(cur, p + 1);
        cur.pop_back();
      }
    };
    std::vector<std::size_t> cur;
    gen(cur, 0);
  }

  std::map<std::pair<std::size_t, std::size_t>, Region> regions;  // (n position, block number)
  auto region_for = [&](std::size_t p, std::size_t b) -> const Region& {
    auto key = std::make_pair(p, b);
    auto it = regions.find(key);
    if (it != regions.end()) return it->second;
    Region r;
    if (kind == TreeKind::S) {
      r = diff_region(seq.term(out.elements[p]), f, theta);
    } else {
      for (std::size_t q : blocks[b]) r = r.unite(diff_region(seq.term(out.elements[p]), seq.term(out.elements[q]), theta));
    }
    return regions.emplace(key, std::move(r)).first->second;
  };

  const std::size_t lb = caps.ball_len + 1;
  Node cur;
  out.tree.add_with_prefixes(cur);
  std::function<void(std::size_t, std::ptrdiff_t, const Word&)> grow = [&](std::size_t next_pos,
                                                                           std::ptrdiff_t block_floor,
                                                                           const Word& ball) {
    const std::size_t i = cur.size();
    if (i >= caps.depth) return;
    const std::size_t min_len = min_ball_len(i);
    const std::vector<Word> balls = extensions(ball, caps.ball_len);
    for (std::size_t p = next_pos; p < n; ++p) {
      for (const Word& u : balls) {
        if (u.size() < min_len) continue;
        const std::uint64_t lidx = ball_index(u);
        auto visit = [&](std::uint64_t letter, std::ptrdiff_t floor) {
          cur.push_back(static_cast<std::int64_t>((letter << lb) | lidx));
          out.tree.add_with_prefixes(cur);
          if (out.tree.size() > caps.max_nodes)
            throw DomainError("caps", "window exceeds " + std::to_string(caps.max_nodes) + " nodes");
          grow(p + 1, floor, u);
          cur.pop_back();
        };
        if (kind == TreeKind::S) {
          if (region_for(p, 0).contains_cylinder(u)) visit(p, -1);
          continue;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          if (static_cast<std::ptrdiff_t>(blocks[b].front()) <= block_floor) continue;
          if (!region_for(p, b).contains_cylinder(u)) continue;
          std::uint64_t mask = 0;
          for (std::size_t q : blocks[b]) mask |= std::uint64_t{1} << q;
          visit((static_cast<std::uint64_t>(p) << caps.n_l) | mask, static_cast<std::ptrdiff_t>(blocks[b].back()));
        }
      }
    }
  };
  grow(0, -1, "");
  return out;
}

FinTree truncate_glued(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                       const std::vector<std::uint64_t>& ds, const Caps& caps) {
  FinTree out;
  out.add_with_prefixes({});
  if (caps.depth == 0) return out;
  Caps inner = caps;
  inner.depth = caps.depth - 1;
  for (auto d : ds) {
    const TruncatedTree t = truncate_tree(kind, seq, l, f, d, inner);
    for (const Node& node : t.tree.nodes()) {
      Node glued{static_cast<std::int64_t>(d)};
      glued.insert(glued.end(), node.begin(), node.end());
      out.add_with_prefixes(glued);
    }
  }
  return out;
}

BranchWitness::BranchWitness(const DenseSequence& seq, const IndexSet& l, std::uint64_t d)
    : seq_(seq), d_(d), lo_(IndexSet::finite({})), hi_(IndexSet::finite({})) {
  const Verdict v = decide_convergence(seq, l);
  if (v.converges) throw DomainError("convergent", "the subsequence converges; no infinite branch exists");
  if (!(v.hi_value - v.lo_value > separation_threshold(d)))
    throw DomainError("gap", "oscillation " + format_rational(v.hi_value - v.lo_value) + " does not exceed 1/(d+1)");
  x_ = *v.witness;
  lo_ = *v.sub_lo;
  hi_ = *v.sub_hi;
}

LfNode BranchWitness::node(std::size_t k) const {
  LfNode out;
  if (k == 0) return out;
  const auto ns = lo_.take(k);
  const auto ms = hi_.take(k);
  const Rational theta = separation_threshold(d_);
  std::size_t j = 0;
  for (std::size_t i = 0; i < k; ++i) {
    j = std::max(j, min_ball_len(i));
    const Region r = diff_region(seq_.term(ns[i]), seq_.term(ms[i]), theta);
    while (!r.contains_cylinder(x_.restrict(j))) {
      if (++j > 62) throw DomainError("index overflow", "no ball around the witness fits in 62 bits");
    }
    out.s.push_back(ns[i]);
    out.t.push_back({ms[i]});
    out.w.push_back(ball_index(x_.restrict(j)));
  }
  return out;
}

MonotoneWitness newp3_monotone(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f, std::uint64_t d,
                               const Caps& caps) {
  if (!f.is_continuous()) throw DomainError("not continuous", f.to_string() + " is not continuous");
  if (!decide_convergence_to(seq, l, f))
    throw DomainError("not convergent", "the subsequence does not converge to " + f.to_string());
  MonotoneWitness out;
  out.s_tree = truncate_tree(TreeKind::S, seq, l, f, d, caps);
  out.t_tree = truncate_tree(TreeKind::T, seq, l, f, d, caps);
  const Rational theta = separation_threshold(d);
  const auto& window = out.s_tree.elements;

  // Blocks above p covering [u]: one index per piece of a cylinder split.
  std::function<void(std::uint64_t, const Word&, std::optional<std::uint64_t>, std::set<std::uint64_t>&)> cover =
      [&](std::uint64_t n, const Word& u, std::optional<std::uint64_t> p, std::set<std::uint64_t>& acc) {
        for (auto m : window) {
          if (p && m <= *p) continue;
          if (diff_region(seq.term(n), seq.term(m), theta).contains_cylinder(u)) {
            acc.insert(m);
            return;
          }
        }
        if (u.size() >= caps.ball_len + 8)
          throw DomainError("caps", "no index in the window separates on [" + u + "]");
        cover(n, u + '0', p, acc);
        cover(n, u + '1', p, acc);
      };

  std::map<Node, std::vector<FinBlock>> phi;
  phi[{}] = {};
  // std::set order visits every parent before its children.
  for (const Node& node : out.s_tree.tree.nodes()) {
    if (node.empty()) {
      out.map[node] = node;
      continue;
    }
    const Node parent(node.begin(), node.end() - 1);
    const std::vector<FinBlock>& before = phi.at(parent);
    std::optional<std::uint64_t> p;
    for (const auto& b : before) p = p ? std::max(*p, b.back()) : b.back();
    const LfNode dec = out.s_tree.decode(node);
    std::set<std::uint64_t> acc;
    cover(dec.s.back(), ball_word(dec.w.back()), p, acc);
    std::vector<FinBlock> blocks = before;
    blocks.emplace_back(acc.begin(), acc.end());
    const LfNode image{dec.s, blocks, dec.w};
    const Node code = out.t_tree.encode(image);
    if (!out.t_tree.tree.contains(code))
      throw DomainError("caps", "image " + lfnode_to_string(image) + " lies outside the T window");
    out.map[node] = code;
    phi[node] = std::move(blocks);
  }
  return out;
}

std::string lfnode_to_string(const LfNode& n) {
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  std::string s = "(s=" + list(n.s);
  if (!n.t.empty()) {
    s += ", t=[";
    for (std::size_t i = 0; i < n.t.size(); ++i) {
      std::string b = list(n.t[i]);
      s += (i ? "," : "") + ("{" + b.substr(1, b.size() - 2) + "}");
    }
    s += "]";
  }
  return s + ", w=" + list(n.w) + ")";
}

}  // namespace dset
