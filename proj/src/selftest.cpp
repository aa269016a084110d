#include "dset/selftest.hpp"

#include "dset/error.hpp"
#include "dset/reductions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace dset {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.ok; }));
}

namespace {

// std::uniform_int_distribution is implementation defined; plain modulo keeps
// reports identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 gen_;
};

Word random_word(Rng& rng, std::size_t max_len, std::size_t min_len = 0) {
  const std::size_t len = min_len + rng.below(max_len - min_len + 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(rng.chance(1, 2) ? '1' : '0');
  return w;
}

Point random_point(Rng& rng, std::size_t max_desc) {
  const std::size_t period = 1 + rng.below(max_desc);
  const Word prefix = random_word(rng, max_desc - period);
  return Point(prefix, random_word(rng, period, period));
}

std::string join_values(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// Runs `body`, turning an escaping DomainError into a failed case.
void run_case(SuiteReport& r, const std::string& id, const std::function<std::string(bool&)>& body) {
  CaseResult c{id, true, ""};
  try {
    c.detail = body(c.ok);
  } catch (const DomainError& e) {
    c.ok = false;
    c.detail = "error " + e.code() + ": " + e.detail();
  }
  r.cases.push_back(std::move(c));
}

// ---------------------------------------------------------------------------
// monotone

FinTree random_fintree(Rng& rng, std::size_t max_nodes) {
  const std::size_t n = rng.below(max_nodes + 1);
  if (n == 0) return {};
  std::vector<Node> nodes{Node{}};
  std::map<Node, std::int64_t> kids;
  while (nodes.size() < n) {
    Node parent = nodes[rng.below(nodes.size())];
    Node child = parent;
    child.push_back(kids[parent]++);
    nodes.push_back(child);
  }
  return FinTree::from_nodes(nodes);
}

std::string canonical_shape(const FinTree& t, const Node& n) {
  std::vector<std::string> parts;
  for (const Node& c : t.children(n)) parts.push_back(canonical_shape(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

// Every rooted tree with at most max_nodes nodes, one per isomorphism class,
// plus the empty tree.
std::vector<FinTree> all_small_trees(std::size_t max_nodes) {
  std::vector<FinTree> out{FinTree{}};
  std::vector<FinTree> level{FinTree::chain(1)};
  for (std::size_t size = 1; size <= max_nodes && !level.empty(); ++size) {
    out.insert(out.end(), level.begin(), level.end());
    std::map<std::string, FinTree> next;
    for (const FinTree& t : level) {
      for (const Node& v : t.nodes()) {
        Node child = v;
        child.push_back(static_cast<std::int64_t>(t.children(v).size()));
        FinTree u = t;
        u.add_with_prefixes(child);
        next.emplace(canonical_shape(u, Node{}), u);
      }
    }
    level.clear();
    for (auto& [k, t] : next) level.push_back(t);
  }
  return out;
}

// Height by longest node, kept apart from the library's derivative count.
std::size_t height(const FinTree& t) {
  std::size_t h = 0;
  for (const Node& n : t.nodes()) h = std::max(h, n.size() + 1);
  return h;
}

void suite_monotone(SuiteReport& r, Rng& rng) {
  for (std::size_t i = 0; i < r.samples; ++i) {
    const FinTree s = random_fintree(rng, 12);
    const FinTree t = random_fintree(rng, 12);
    run_case(r, "random " + std::to_string(i), [&](bool& ok) {
      const auto map = find_monotone_map(s, t);
      const std::size_t rs = rank_finite(s), rt = rank_finite(t);
      ok = rs == height(s) && rt == height(t);
      if (map) ok = ok && verify_monotone(*map, s, t) && rs <= rt;
      return "|S|=" + std::to_string(s.size()) + " |T|=" + std::to_string(t.size()) + " o(S)=" + std::to_string(rs) +
             " o(T)=" + std::to_string(rt) + (map ? " map" : " no map");
    });
  }
  const auto trees = all_small_trees(6);
  std::size_t pairs = 0, agree = 0;
  for (const FinTree& s : trees)
    for (const FinTree& t : trees) {
      ++pairs;
      const bool has = find_monotone_map(s, t).has_value();
      if (has == (height(s) <= height(t))) ++agree;
    }
  r.cases.push_back({"exhaustive up to 6 nodes", agree == pairs,
                     std::to_string(trees.size()) + " trees, " + std::to_string(agree) + "/" + std::to_string(pairs) +
                         " pairs agree"});
}

// ---------------------------------------------------------------------------
// oracle, attain, ball

const std::vector<Rational>& small_values() {
  static const std::vector<Rational> v{Rational(0), Rational(1, 2), Rational(1)};
  return v;
}

Compact random_compact(Rng& rng, int depth) {
  const Rational value = rng.pick(small_values());
  if (depth == 0 || rng.chance(1, 4)) return leaf(value);
  std::vector<Attachment> atts;
  const std::size_t m = 1 + rng.below(2);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Compact> shapes;
    const std::size_t len = 1 + rng.below(2);
    for (std::size_t j = 0; j < len; ++j) shapes.push_back(rng.chance(1, 6) ? nullptr : random_compact(rng, depth - 1));
    atts.push_back(Attachment::cycle(std::move(shapes)));
  }
  return apex(value, std::move(atts));
}

struct Presentation {
  std::string name;
  Compact k;
  std::vector<std::pair<Rational, Rational>> pairs;
};

// Random cycle presentations with α ≤ 6 mixed with the canonical examples of
// ranks 1..6.
Presentation random_presentation(Rng& rng, std::size_t i) {
  if (rng.chance(1, 4)) {
    const std::uint64_t xi = 1 + rng.below(6);
    const Pattern p = static_cast<Pattern>(rng.below(3));
    const RankExample ex = build_rank_example(Ordinal(xi), p);
    return {"example " + std::to_string(xi) + " " + pattern_name(p), ex.compact, {{ex.a, ex.b}}};
  }
  for (;;) {
    Compact k = random_compact(rng, 3);
    auto pairs = crossing_pairs(k);
    const Ordinal full = alpha_full(k, pairs);
    if (full.is_finite() && full.to_finite() <= 6) return {"random " + std::to_string(i), k, pairs};
  }
}

std::string pair_name(const std::pair<Rational, Rational>& p) {
  return "(" + format_rational(p.first) + "," + format_rational(p.second) + ")";
}

void suite_oracle(SuiteReport& r, Rng& rng) {
  for (std::size_t i = 0; i < r.samples; ++i) {
    const Presentation pr = random_presentation(rng, i);
    run_case(r, pr.name, [&](bool& ok) {
      const std::size_t depth = replication_need(pr.k);
      const auto points = instantiate(pr.k, depth);
      std::string detail = std::to_string(points.size()) + " points";
      for (const auto& [a, b] : pr.pairs) {
        const Ordinal sym = alpha_on(pr.k, a, b);
        const std::uint64_t bf = brute_force_alpha(points, a, b);
        ok = ok && sym == Ordinal(bf);
        detail += " " + pair_name({a, b}) + ":" + sym.to_string() + "/" + std::to_string(bf);
      }
      return detail;
    });
  }
}

void check_attainment(const Compact& k, const Rational& a, const Rational& b, bool& ok, std::string& detail) {
  const Ordinal alpha = alpha_on(k, a, b);
  detail += " " + pair_name({a, b}) + ":" + alpha.to_string();
  if (alpha.is_zero()) return;
  if (!alpha.is_successor()) {
    ok = false;
    detail += " limit";
    return;
  }
  const auto wit = attainment_witness(k, a, b);
  if (wit.empty() || !(wit[0].alpha == alpha)) {
    ok = false;
    return;
  }
  const Ordinal xi = alpha.predecessor();
  if (xi.is_successor()) {
    if (wit.size() < 2) {
      ok = false;
      detail += " no sub-compactum";
      return;
    }
    // Re-derive the witness rank instead of trusting the reported one.
    const Ordinal sub = alpha_on(wit[1].sub, a, b);
    ok = ok && sub == xi && wit[1].alpha == xi;
    detail += " attained " + sub.to_string() + " @" + (wit[1].location.empty() ? "root" : wit[1].location);
  }
}

void suite_attain(SuiteReport& r, Rng& rng) {
  for (std::size_t i = 0; i < r.samples; ++i) {
    const Presentation pr = random_presentation(rng, i);
    run_case(r, pr.name, [&](bool& ok) {
      std::string detail;
      for (const auto& [a, b] : pr.pairs) check_attainment(pr.k, a, b, ok, detail);
      return detail;
    });
  }
  static const char* const infinite[] = {"w^{1} + 1", "w^{1} + 2", "w^{1}*2 + 1", "w^{1}*3 + 2", "w^{2} + 1",
                                         "w^{2} + w^{1} + 3"};
  for (const char* txt : infinite)
    for (Pattern p : {Pattern::A1, Pattern::A2, Pattern::A3}) {
      run_case(r, std::string("example ") + txt + " " + pattern_name(p), [&](bool& ok) {
        const RankExample ex = build_rank_example(Ordinal::parse(txt), p);
        std::string detail;
        check_attainment(ex.compact, ex.a, ex.b, ok, detail);
        ok = ok && alpha_on(ex.compact, ex.a, ex.b) == Ordinal::parse(txt);
        return detail;
      });
    }
}

// Apexes of k whose defining word has length < max_len.
void collect_apexes(const Compact& k, const Word& w, std::size_t max_len, std::vector<Point>& out) {
  if (!k || w.size() >= max_len) return;
  out.push_back(Point(w, "1"));
  const std::size_t m = k->attachments.size();
  if (m == 0) return;
  for (std::size_t slot = 0; w.size() + slot + 1 < max_len; ++slot) {
    const Compact c = k->attachments[slot % m].copy(slot / m);
    collect_apexes(c, w + std::string(slot, '1') + "0", max_len, out);
  }
}

void suite_ball(SuiteReport& r, Rng& rng) {
  std::size_t i = 0;
  while (r.cases.size() < r.samples) {
    const Presentation pr = random_presentation(rng, i++);
    const auto& [a, b] = pr.pairs[rng.below(pr.pairs.size())];
    const Ordinal alpha = alpha_on(pr.k, a, b);
    if (alpha.is_zero()) continue;
    const std::uint64_t xi = rng.below(alpha.to_finite());
    const auto trace = derivation_trace(pr.k, a, b, xi + 1);
    std::vector<Point> apexes;
    collect_apexes(trace[xi], "", 12, apexes);
    if (apexes.empty()) continue;
    const Point x = rng.pick(apexes);
    run_case(r, pr.name + " " + pair_name({a, b}) + " xi=" + std::to_string(xi) + " x=" + x.to_string(),
             [&](bool& ok) {
               ok = in_compact(trace[xi], x) && in_compact(pr.k, x);
               for (std::size_t n = 0; n <= 6; ++n) ok = ok && restrict_ball(pr.k, a, b, x.restrict(n), Ordinal(xi), x);
               // One step past the rank nothing survives.
               ok = ok && !restrict_ball(pr.k, a, b, x.restrict(0), alpha, x);
               return std::string(ok ? "survives in every ball" : "lost");
             });
  }
}

// ---------------------------------------------------------------------------
// wf

SchemaPtr random_wellfounded(Rng& rng, int depth, bool inside_omega) {
  const std::uint64_t roll = depth == 0 ? rng.below(2) : rng.below(6);
  switch (roll) {
    case 0:
      return TreeSchema::single();
    case 1:
      return TreeSchema::chain(AffineLen{inside_omega ? static_cast<std::int64_t>(rng.below(2)) : 0,
                                         1 + static_cast<std::int64_t>(rng.below(3))});
    case 2:
      return TreeSchema::spine(AffineLen{inside_omega ? static_cast<std::int64_t>(rng.below(2)) : 0,
                                         1 + static_cast<std::int64_t>(rng.below(2))},
                               random_wellfounded(rng, depth - 1, inside_omega));
    case 3:
      return TreeSchema::join({random_wellfounded(rng, depth - 1, inside_omega),
                               random_wellfounded(rng, depth - 1, inside_omega)});
    default:
      return TreeSchema::omega_join(random_wellfounded(rng, depth - 1, true));
  }
}

// Rank ω·2, or ω·2+1 under a one-node spine: the n-th tooth is a spine of
// length n+b over a comb of rank ω.
SchemaPtr tower(Rng& rng) {
  const auto comb = TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 1}));
  auto t = TreeSchema::omega_join(
      TreeSchema::spine(AffineLen{1, 1 + static_cast<std::int64_t>(rng.below(2))}, comb));
  return rng.chance(1, 2) ? TreeSchema::spine(AffineLen{0, 1}, t) : t;
}

SchemaPtr with_full_branch(Rng& rng, int depth) {
  switch (depth == 0 ? 0 : rng.below(4)) {
    case 0:
      return TreeSchema::full_branch();
    case 1:
      return TreeSchema::spine(AffineLen{0, 1 + static_cast<std::int64_t>(rng.below(3))}, with_full_branch(rng, depth - 1));
    case 2:
      return TreeSchema::join({random_wellfounded(rng, 2, false), with_full_branch(rng, depth - 1)});
    default:
      return TreeSchema::omega_join(
          TreeSchema::join({random_wellfounded(rng, 1, true), with_full_branch(rng, depth - 1)}));
  }
}

void suite_wf(SuiteReport& r, Rng& rng) {
  const Ordinal bound = Ordinal::parse("w^{1}*2 + 1");
  const std::size_t half = r.samples / 2;
  for (std::size_t i = 0; i < r.samples; ++i) {
    const bool want_wf = i < r.samples - half;
    SchemaPtr t;
    std::string rank_text = "ill-founded";
    if (want_wf) {
      for (;;) {
        t = i % 4 == 0 ? tower(rng) : random_wellfounded(rng, 3, false);
        if (!schema_is_infinite(*t)) continue;
        const Ordinal o = schema_rank(*t);
        if (o <= bound) {
          rank_text = o.to_string();
          break;
        }
      }
    } else {
      t = with_full_branch(rng, 3);
    }
    run_case(r, (want_wf ? "well-founded " : "ill-founded ") + std::to_string(i), [&](bool& ok) {
      const bool wf = is_wellfounded(*t);
      const bool conv =
          decide_convergence_to(DenseSequence::node_indicators(), IndexSet::node_set(t), SymbolicFn::zero());
      ok = wf == want_wf && conv == wf;
      return "rank " + rank_text + (conv ? ", converges to 0" : ", does not converge to 0");
    });
  }
}

// ---------------------------------------------------------------------------
// p1

void suite_p1(SuiteReport& r, Rng& rng) {
  const auto h0 = h_image(Point()).take(4);
  r.cases.push_back({"H(0^inf) prefix", h0 == std::vector<std::uint64_t>{8, 16, 32, 64}, join_values(h0)});

  std::vector<PointSet> sets;
  std::vector<std::string> names;
  while (sets.size() < 10) {
    std::vector<Word> words;
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t j = 0; j < n; ++j) words.push_back(random_word(rng, 3));
    const ClopenSet c(words);
    if (c.is_empty()) continue;
    PointSet a = PointSet::both(PointSet::clopen(c), PointSet::not_eventually_constant());
    if (a.admissibility() != Admissibility::proven) continue;
    names.push_back(a.to_string());
    sets.push_back(std::move(a));
  }
  const auto pool = enumerate_points(6);
  for (std::size_t i = 0; i < r.samples; ++i) {
    const Point x = rng.pick(pool);
    run_case(r, "x=" + x.to_string(), [&](bool& ok) {
      std::size_t inside = 0;
      for (const PointSet& a : sets) {
        ok = ok && verify_p1(x, a);
        inside += a.contains(x) ? 1 : 0;
      }
      // H(x) must also determine x.
      const Word back = branch_from_siblings(phi_map(x), 12);
      ok = ok && back == x.restrict(12);
      return "in " + std::to_string(inside) + "/" + std::to_string(sets.size()) + " sets";
    });
  }
}

// ---------------------------------------------------------------------------
// branch

struct CatalogCase {
  std::string name;
  DenseSequence seq;
  IndexSet l;
};

std::vector<CatalogCase> divergent_cases(Rng& rng, std::size_t n) {
  std::vector<CatalogCase> out;
  while (out.size() < n) {
    Point x = random_point(rng, 5);
    switch (out.size() % 3) {
      case 0:
        if (x.is_eventually_constant()) continue;
        out.push_back({"split H(" + x.to_string() + ")", DenseSequence::split_cantor(), h_image(x)});
        break;
      case 1:
        out.push_back({"nodes prefixes+siblings " + x.to_string(), DenseSequence::node_indicators(),
                       IndexSet::unite({IndexSet::branch_prefixes(x), IndexSet::branch_siblings(x)})});
        break;
      default:
        out.push_back({"nodes FullBranch+antichain", DenseSequence::node_indicators(),
                       IndexSet::node_set(TreeSchema::join(
                           {TreeSchema::full_branch(), TreeSchema::omega_join(TreeSchema::single())}))});
        x = Point();
        break;
    }
  }
  return out;
}

// Sibling antichains under the node indicators: their reduction trees have
// finite rank, so the window's chains stop growing once the caps see it.
std::vector<CatalogCase> convergent_cases(Rng& rng, std::size_t n) {
  std::vector<CatalogCase> out;
  while (out.size() < n) {
    const Point x = random_point(rng, 5);
    const Side side = static_cast<Side>(rng.below(3));
    IndexSet l = IndexSet::branch_siblings(x, side);
    if (l.is_infinite() != true) continue;
    out.push_back({"nodes siblings " + x.to_string() + " " + side_name(side), DenseSequence::node_indicators(),
                   std::move(l)});
  }
  return out;
}

std::size_t chain_length(const FinTree& t) { return t.empty() ? 0 : height(t) - 1; }

void suite_branch(SuiteReport& r, Rng& rng) {
  for (const auto& c : divergent_cases(rng, r.samples)) {
    const std::uint64_t d = 1 + rng.below(2);
    run_case(r, "divergent " + c.name + " d=" + std::to_string(d), [&](bool& ok) {
      const BranchWitness bw(c.seq, c.l, d);
      LfNode prev;
      for (std::size_t k = 0; k <= 6; ++k) {
        const LfNode n = bw.node(k);
        ok = ok && tdl_member(c.seq, c.l, d, n);
        ok = ok && std::equal(prev.s.begin(), prev.s.end(), n.s.begin()) &&
             std::equal(prev.w.begin(), prev.w.end(), n.w.begin());
        prev = n;
      }
      return "witness " + bw.point().to_string() + " node " + lfnode_to_string(prev);
    });
  }
  for (const auto& c : convergent_cases(rng, r.samples)) {
    const std::uint64_t d = 1 + rng.below(2);
    run_case(r, "convergent " + c.name + " d=" + std::to_string(d), [&](bool& ok) {
      Caps caps;
      caps.n_l = 2;
      caps.ball_len = 3;
      caps.depth = 2;
      caps.block_max = 1;
      std::vector<std::size_t> lengths;
      for (int step = 0; step < 3; ++step) {
        const auto t = truncate_tree(TreeKind::T, c.seq, c.l, SymbolicFn::zero(), d, caps);
        lengths.push_back(chain_length(t.tree));
        caps.n_l *= 2;
        caps.depth *= 2;
      }
      ok = lengths[1] == lengths[2];
      return "max chain " + join_values({lengths.begin(), lengths.end()});
    });
  }
}

// ---------------------------------------------------------------------------
// newp3

void suite_newp3(SuiteReport& r, Rng& rng) {
  for (std::size_t i = 0; i < r.samples; ++i) {
    const Point x = random_point(rng, 4);
    const Side side = static_cast<Side>(rng.below(3));
    const std::uint64_t d = i % 3;
    const IndexSet l = IndexSet::branch_siblings(x, side);
    if (l.is_infinite() != true) {
      --i;
      continue;
    }
    run_case(r, "siblings " + x.to_string() + " " + side_name(side) + " d=" + std::to_string(d), [&](bool& ok) {
      Caps caps;
      caps.n_l = 6;
      caps.ball_len = 5;
      caps.depth = 4;
      caps.block_max = 2;
      const auto seq = DenseSequence::node_indicators();
      const auto m = newp3_monotone(seq, l, SymbolicFn::zero(), d, caps);
      ok = verify_monotone(m.map, m.s_tree.tree, m.t_tree.tree);
      std::set<Node> images;
      for (const auto& [from, to] : m.map) {
        images.insert(to);
        const LfNode node = m.t_tree.decode(to);
        ok = ok && tdl_member(seq, l, d, node);
        for (std::size_t k = 1; k < node.t.size(); ++k) ok = ok && block_less(node.t[k - 1], node.t[k]);
        for (std::size_t k = 1; k < node.t.size(); ++k) ok = ok && node.t[k - 1].back() < node.s[k];
      }
      ok = ok && images.size() == m.map.size();
      const std::size_t rs = rank_finite(m.s_tree.tree), rt = rank_finite(m.t_tree.tree);
      ok = ok && rs <= rt;
      return "|S|=" + std::to_string(m.s_tree.tree.size()) + " |T|=" + std::to_string(m.t_tree.tree.size()) +
             " o(S)=" + std::to_string(rs) + " o(T)=" + std::to_string(rt);
    });
  }
}

// ---------------------------------------------------------------------------
// dual

struct CorpusEntry {
  std::string name;
  DenseSequence seq;
  IndexSet l;
  PointSet domain;
};

std::vector<CorpusEntry> fixed_corpus() {
  const auto split = DenseSequence::split_cantor();
  const auto nodes = DenseSequence::node_indicators();
  const auto all = PointSet::everything();
  const auto nec = PointSet::not_eventually_constant();
  const Point zero, one("", "1"), alt("", "01"), mixed("1", "001");
  const auto antichain = TreeSchema::omega_join(TreeSchema::single());
  std::vector<SymbolicFn> table{SymbolicFn::constant(Rational(3)), SymbolicFn::node_ind("1"), SymbolicFn::zero()};
  const auto tabled = DenseSequence::table_with_tail(table, nodes);
  std::vector<CorpusEntry> out{
      {"split all", split, IndexSet::all(), all},
      {"nodes all", nodes, IndexSet::all(), all},
      {"split residue 0", split, IndexSet::affine(IndexSet::all(), 4, 0), all},
      {"split residue 2", split, IndexSet::affine(IndexSet::all(), 4, 2), all},
      {"split H(0)", split, h_image(zero), all},
      {"split H(1)", split, h_image(one), all},
      {"split H(01)", split, h_image(alt), all},
      {"split H(1(001))", split, h_image(mixed), all},
      {"split H(01) on NEC", split, h_image(alt), nec},
      {"nodes siblings 0", nodes, IndexSet::branch_siblings(zero), all},
      {"nodes siblings 01", nodes, IndexSet::branch_siblings(alt), all},
      {"nodes siblings 0(1) side 1", nodes, IndexSet::branch_siblings(Point("0", "1"), Side::one), all},
      {"nodes prefixes 01", nodes, IndexSet::branch_prefixes(alt), all},
      {"nodes prefixes+siblings 01", nodes,
       IndexSet::unite({IndexSet::branch_prefixes(alt), IndexSet::branch_siblings(alt)}), all},
      {"nodes antichain", nodes, IndexSet::node_set(antichain), all},
      {"nodes full branch", nodes, IndexSet::node_set(TreeSchema::full_branch()), all},
      {"nodes branch+antichain", nodes,
       IndexSet::node_set(TreeSchema::join({TreeSchema::full_branch(), antichain})), all},
      {"nodes drop prefixes", nodes, IndexSet::drop(IndexSet::branch_prefixes(mixed), 3), all},
      {"nodes at least", nodes, IndexSet::at_least(IndexSet::branch_siblings(one), 40), all},
      {"table then nodes, siblings", tabled, IndexSet::unite({IndexSet::finite({0, 1, 2}), IndexSet::branch_siblings(zero)}),
       all},
      {"split siblings then prefixes", split,
       IndexSet::affine(IndexSet::unite({IndexSet::branch_siblings(alt), IndexSet::branch_prefixes(alt)}), 4, 1), all},
      {"nodes psi glue well-founded", nodes, psi_glue(TreeSchema::chain(3), antichain), all},
      {"nodes psi glue ill-founded", nodes, psi_glue(TreeSchema::full_branch(), antichain), all},
  };
  return out;
}

void suite_dual(SuiteReport& r, Rng& rng) {
  auto corpus = fixed_corpus();
  const auto split = DenseSequence::split_cantor();
  for (std::size_t i = 0; i < r.samples; ++i) {
    const Point x = random_point(rng, 6);
    corpus.push_back({"split H(" + x.to_string() + ")", split, h_image(x), PointSet::everything()});
  }
  for (const auto& e : corpus) {
    run_case(r, e.name, [&](bool& ok) {
      const Verdict v = decide_convergence(e.seq, e.l, e.domain);
      const bool sampled = sampling_oracle_converges(e.seq, e.l, e.domain, 50, 6);
      ok = v.converges == sampled;
      return std::string(v.converges ? "converges" : "diverges") + ", oracle " + (sampled ? "converges" : "diverges");
    });
  }
}

struct SuiteEntry {
  void (*run)(SuiteReport&, Rng&);
  std::size_t default_samples;
};

const std::map<std::string, SuiteEntry>& suites() {
  static const std::map<std::string, SuiteEntry> s{
      {"monotone", {suite_monotone, 200}}, {"oracle", {suite_oracle, 100}}, {"attain", {suite_attain, 100}},
      {"ball", {suite_ball, 100}},         {"wf", {suite_wf, 50}},          {"p1", {suite_p1, 100}},
      {"branch", {suite_branch, 10}},      {"newp3", {suite_newp3, 20}},    {"dual", {suite_dual, 20}},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"monotone", "oracle", "attain", "ball", "wf",
                                              "p1",       "branch", "newp3",  "dual"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::size_t samples, std::uint64_t seed) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("bad suite", "unknown suite '" + name + "'");
  SuiteReport r;
  r.suite = name;
  r.seed = seed;
  r.samples = samples == 0 ? it->second.default_samples : samples;
  Rng rng(seed);
  it->second.run(r, rng);
  return r;
}

Json report_to_json(const SuiteReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back({{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"suite", r.suite},
          {"seed", r.seed},
          {"samples", r.samples},
          {"passed", r.passed()},
          {"failures", r.failures()},
          {"cases", cases}};
}

}  // namespace dset
