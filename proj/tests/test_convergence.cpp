#include "dset/convergence.hpp"
#include "dset/error.hpp"
#include "dset/reductions.hpp"

#include <doctest.h>

using namespace dset;

namespace {

const DenseSequence nodes = DenseSequence::node_indicators();
const DenseSequence split = DenseSequence::split_cantor();

}  // namespace

TEST_CASE("node indicator verdicts") {
  const auto antichain = IndexSet::node_set(TreeSchema::omega_join(TreeSchema::single()));
  const Verdict v = decide_convergence(nodes, antichain);
  CHECK(v.converges);
  CHECK(extensionally_equal(v.limit, SymbolicFn::zero()));
  CHECK(sampling_oracle_converges(nodes, antichain, PointSet::everything()));

  // The full branch codes 0^∞ through the words 0, 00, ...; its indicators
  // converge to the indicator of that point.
  const auto chain = IndexSet::node_set(TreeSchema::full_branch());
  CHECK_FALSE(decide_convergence_to(nodes, chain, SymbolicFn::zero()));
  const Verdict c = decide_convergence(nodes, chain);
  REQUIRE(c.converges);
  CHECK(extensionally_equal(c.limit, SymbolicFn::point_ind(branch_code({}))));
  CHECK(decide_convergence_to(nodes, chain, c.limit));
}

TEST_CASE("split family verdicts") {
  const Point x("", "01");
  const Verdict v = decide_convergence(split, h_image(x));
  REQUIRE_FALSE(v.converges);
  CHECK(*v.witness == x);
  // Divergence data checked term by term on the first 20 members.
  for (auto n : v.sub_lo->take(20)) {
    CHECK(h_image(x).contains(n));
    CHECK(eval(split.term(n), x) == v.lo_value);
  }
  for (auto n : v.sub_hi->take(20)) {
    CHECK(h_image(x).contains(n));
    CHECK(eval(split.term(n), x) == v.hi_value);
  }
  CHECK(v.hi_value - v.lo_value == 2 * v.theta);
  CHECK(v.theta > 0);
}

TEST_CASE("finite modifications do not change verdicts") {
  const std::vector<std::pair<DenseSequence, IndexSet>> cases{
      {nodes, IndexSet::branch_siblings(Point("1", "0"))},
      {nodes, IndexSet::branch_prefixes(Point("", "110"))},
      {split, h_image(Point("", "01"))},
      {split, h_image(Point("1", "0"))},
  };
  for (const auto& [seq, core] : cases) {
    const bool base = decide_convergence(seq, core).converges;
    CHECK(decide_convergence(seq, IndexSet::unite({IndexSet::finite({0, 3, 9}), core})).converges == base);
    CHECK(decide_convergence(seq, IndexSet::drop(core, 5)).converges == base);
  }
}

TEST_CASE("verdicts agree with sampling on converging limits") {
  const std::vector<IndexSet> sets{IndexSet::branch_siblings(Point("0", "1")), IndexSet::branch_prefixes(Point("", "10")),
                                   IndexSet::unite({IndexSet::branch_prefixes(Point()), IndexSet::branch_siblings(Point())})};
  for (const auto& l : sets) {
    const Verdict v = decide_convergence(nodes, l);
    CHECK(v.converges == sampling_oracle_converges(nodes, l, PointSet::everything()));
    if (!v.converges) continue;
    // The limit is the eventual value along L at each sampled point.
    const auto idx = l.take(60);
    for (const auto& y : enumerate_points(5)) CHECK(eval(nodes.term(idx.back()), y) == eval(v.limit, y));
  }
}

TEST_CASE("the sampling window can be too short") {
  // Tooth n of the comb carries indicators nonzero at 1^n0^∞ up to word
  // length 2n+1, so fifty terms do not reach the tail for n = 5.
  const auto comb = IndexSet::node_set(TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 1})));
  CHECK(decide_convergence_to(nodes, comb, SymbolicFn::zero()));
  CHECK_FALSE(sampling_oracle_converges(nodes, comb, PointSet::everything(), 50, 6));
  CHECK(sampling_oracle_converges(nodes, comb, PointSet::everything(), 100, 6));
}

TEST_CASE("refinement") {
  const auto all = IndexSet::all();
  const IndexSet r = refine_to_convergent(nodes, all);
  CHECK(decide_convergence(nodes, r).converges);
  for (auto n : r.take(20)) CHECK(all.contains(n));

  const auto fours = IndexSet::affine(IndexSet::all(), 4, 0);
  const IndexSet s = refine_to_convergent(split, fours);
  CHECK(decide_convergence(split, s).converges);
  for (auto n : s.take(20)) CHECK(n % 4 == 0);

  const auto chain = IndexSet::node_set(TreeSchema::full_branch());
  const IndexSet c = refine_to_convergent(nodes, chain);
  for (auto n : c.take(20)) CHECK(chain.contains(n));
}

TEST_CASE("tree representation") {
  CHECK_THROWS_AS(tree_representation(nodes, {IndexSet::node_set(TreeSchema::join(
                                                 {TreeSchema::full_branch(), TreeSchema::omega_join(TreeSchema::single())}))},
                                      3),
                  DomainError);
  const auto code = IndexSet::branch_siblings(Point());  // 2, 4, 8, ...
  const LabeledTree t = tree_representation(nodes, {code}, 5);
  CHECK(t.tree.size() == 6);
  CHECK(t.label.at(Node{}) == 0);
  // Letters are membership bits; labels follow the last member seen.
  CHECK(t.tree.contains(Node{0, 0, 1, 0, 1}));
  CHECK(t.label.at(Node{0, 0, 1}) == 2);
  CHECK(t.label.at(Node{0, 0, 1, 0, 1}) == 4);

  const auto other = IndexSet::branch_siblings(Point("", "1"));  // 1, 5, 13, ...
  const LabeledTree two = tree_representation(nodes, {code, other}, 4);
  CHECK(two.tree.children(Node{0}).size() == 2);
}
