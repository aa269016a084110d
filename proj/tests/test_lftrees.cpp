#include "dset/error.hpp"
#include "dset/lftrees.hpp"
#include "dset/reductions.hpp"

#include <doctest.h>

using namespace dset;

namespace {

const DenseSequence nodes = DenseSequence::node_indicators();

// The T-condition straight from its definition: every point of the ball is
// separated from f_{s_i} by more than 1/(d+1) by some member of the block.
// Checked on all sampled points inside the ball.
bool sampled_t_condition(const DenseSequence& seq, std::uint64_t d, const LfNode& node) {
  const Rational theta = separation_threshold(d);
  for (std::size_t i = 0; i < node.size(); ++i) {
    const Word ball = ball_word(node.w[i]);
    for (const auto& z : enumerate_points(ball.size() + 4)) {
      if (!z.has_prefix(ball)) continue;
      bool some = false;
      for (auto m : node.t[i]) some = some || abs(eval(seq.term(node.s[i]), z) - eval(seq.term(m), z)) > theta;
      if (!some) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("acceptable sequences and blocks") {
  CHECK(is_acceptable({}));
  CHECK(is_acceptable({0}));
  CHECK(is_acceptable({1, 3}));           // [0] ⊇ [00], 2 >= 2
  CHECK_FALSE(is_acceptable({1, 2}));     // [0] and [1] are not nested
  CHECK_FALSE(is_acceptable({0, 0, 0}));  // [∅] at i = 1 is too large
  CHECK(block_less({1, 2}, {3}));
  CHECK_FALSE(block_less({1, 4}, {3}));
  CHECK(ball_word(ball_index("0110")) == "0110");
}

TEST_CASE("membership") {
  const auto l = IndexSet::branch_siblings(Point());  // words 1, 01, 001, ...
  // Both coordinates use a ball inside the support of the node indicator and
  // a block whose indicator vanishes there.
  LfNode root;
  CHECK(tdl_member(nodes, l, 1, root));
  CHECK(sdl_member(nodes, l, SymbolicFn::zero(), 1, root));
  LfNode a{{2}, {{4}}, {ball_index("1")}};
  CHECK(tdl_member(nodes, l, 1, a));
  CHECK(sampled_t_condition(nodes, 1, a));
  LfNode b{{2, 4}, {{4}, {8}}, {ball_index("1"), ball_index("10")}};
  CHECK_FALSE(tdl_member(nodes, l, 1, b));  // [10] misses the support of f_4
  CHECK_FALSE(sampled_t_condition(nodes, 1, b));
  LfNode s{{4}, {}, {ball_index("01")}};
  CHECK(sdl_member(nodes, l, SymbolicFn::zero(), 1, s));
  LfNode s2{{4}, {}, {ball_index("0")}};
  CHECK_FALSE(sdl_member(nodes, l, SymbolicFn::zero(), 1, s2));
  LfNode bad{{4, 2}, {{8}, {16}}, {1, 3}};
  CHECK_THROWS_AS(tdl_member(nodes, l, 1, bad), DomainError);
  LfNode outside{{3}, {{4}}, {ball_index("1")}};
  CHECK_FALSE(tdl_member(nodes, l, 1, outside));
}

TEST_CASE("glued membership") {
  const auto l = IndexSet::branch_siblings(Point());
  for (std::uint64_t d = 0; d < 4; ++d) {
    LfNode n{{d}, {{d}}, {d}};
    CHECK(glued_member(TreeKind::T, nodes, l, SymbolicFn::zero(), n));
  }
  LfNode n{{3, 2}, {{3}, {4}}, {3, ball_index("1")}};
  CHECK(glued_member(TreeKind::T, nodes, l, SymbolicFn::zero(), n) == tdl_member(nodes, l, 3, {{2}, {{4}}, {2}}));
  LfNode mixed{{3}, {{2}}, {3}};
  CHECK_THROWS_AS(glued_member(TreeKind::T, nodes, l, SymbolicFn::zero(), mixed), DomainError);
}

TEST_CASE("truncations") {
  const auto l = IndexSet::branch_siblings(Point("", "01"));
  Caps caps;
  caps.n_l = 4;
  caps.ball_len = 4;
  caps.depth = 0;
  CHECK(truncate_tree(TreeKind::T, nodes, l, SymbolicFn::zero(), 1, caps).tree.size() == 1);
  caps.depth = 3;
  const auto t = truncate_tree(TreeKind::T, nodes, l, SymbolicFn::zero(), 1, caps);
  for (const Node& n : t.tree.nodes()) {
    const LfNode node = t.decode(n);
    CHECK(t.encode(node) == n);
    CHECK(tdl_member(nodes, l, 1, node));
    CHECK(sampled_t_condition(nodes, 1, node));
  }
  // Every member within the caps is in the window: check the length-1 layer
  // against an independent enumeration.
  std::size_t layer = 0;
  for (auto n : t.elements)
    for (auto m : t.elements)
      for (std::uint64_t w = 0; w < h_level_start(caps.ball_len + 1); ++w)
        if (tdl_member(nodes, l, 1, {{n}, {{m}}, {w}})) ++layer;
  std::size_t got = 0;
  for (const Node& n : t.tree.nodes())
    if (n.size() == 1 && t.decode(n).t[0].size() == 1) ++got;
  CHECK(got == layer);
  caps.max_nodes = 10;
  CHECK_THROWS_AS(truncate_tree(TreeKind::T, nodes, l, SymbolicFn::zero(), 1, caps), DomainError);
}

TEST_CASE("glued rank is the sup plus one of the parts") {
  const auto l = IndexSet::branch_siblings(Point("1", "0"));
  Caps caps;
  caps.n_l = 4;
  caps.ball_len = 4;
  caps.depth = 3;
  const std::vector<std::uint64_t> ds{0, 1, 2};
  const FinTree glued = truncate_glued(TreeKind::T, nodes, l, SymbolicFn::zero(), ds, caps);
  Caps inner = caps;
  inner.depth = caps.depth - 1;
  std::vector<Ordinal> parts;
  for (auto d : ds) parts.push_back(rank(truncate_tree(TreeKind::T, nodes, l, SymbolicFn::zero(), d, inner).tree));
  CHECK(rank(glued) == ord_sup_plus_one(parts));
}

TEST_CASE("branch witnesses") {
  const Point x("", "01");
  const auto split = DenseSequence::split_cantor();
  const BranchWitness bw(split, h_image(x), 1);
  CHECK(bw.node(0) == LfNode{});
  LfNode prev;
  for (std::size_t k = 1; k <= 5; ++k) {
    const LfNode n = bw.node(k);
    CHECK(tdl_member(split, h_image(x), 1, n));
    CHECK(x.has_prefix(ball_word(n.w.back())));
    CHECK(std::equal(prev.w.begin(), prev.w.end(), n.w.begin()));
    prev = n;
  }
  CHECK(ball_word(bw.node(5).w.back()).size() >= 3);
  CHECK_THROWS_AS(BranchWitness(nodes, IndexSet::branch_siblings(x), 1), DomainError);
  CHECK_THROWS_AS(BranchWitness(split, h_image(x), 0), DomainError);  // gap 1 is not > 1
}

TEST_CASE("monotone map from S into T") {
  const auto l = IndexSet::branch_siblings(Point("", "10"));
  Caps caps;
  caps.n_l = 6;
  caps.ball_len = 5;
  caps.depth = 3;
  const auto m = newp3_monotone(nodes, l, SymbolicFn::zero(), 1, caps);
  CHECK(m.map.size() == m.s_tree.tree.size());
  CHECK(verify_monotone(m.map, m.s_tree.tree, m.t_tree.tree));
  for (const auto& [from, to] : m.map) {
    const LfNode s = m.s_tree.decode(from), t = m.t_tree.decode(to);
    CHECK(s.s == t.s);
    CHECK(s.w == t.w);
    CHECK(tdl_member(nodes, l, 1, t));
    for (std::size_t k = 1; k < t.t.size(); ++k) CHECK(block_less(t.t[k - 1], t.t[k]));
  }
  CHECK(rank(m.s_tree.tree) <= rank(m.t_tree.tree));

  // d = 0: no ball sits inside a region where an indicator differs from 0 by
  // more than 1, so S is the root alone.
  const auto root_only = newp3_monotone(nodes, l, SymbolicFn::zero(), 0, caps);
  CHECK(root_only.s_tree.tree.size() == 1);
  CHECK(root_only.map.size() == 1);

  CHECK_THROWS_AS(newp3_monotone(nodes, l, SymbolicFn::point_ind(Point()), 1, caps), DomainError);
  CHECK_THROWS_AS(newp3_monotone(nodes, IndexSet::branch_prefixes(Point()), SymbolicFn::zero(), 1, caps),
                  DomainError);
}
