#include "dset/error.hpp"
#include "dset/tree.hpp"

#include <doctest.h>

#include <random>

using namespace dset;

namespace {

FinTree tree(std::vector<Node> nodes) { return FinTree::from_nodes(nodes); }

// Derivative count by repeated leaf stripping, kept apart from rank().
std::size_t strip_count(FinTree t) {
  std::size_t n = 0;
  while (!t.empty()) {
    std::vector<Node> keep;
    for (const Node& v : t.nodes())
      if (!t.children(v).empty()) keep.push_back(v);
    t = FinTree::from_nodes(keep);
    ++n;
  }
  return n;
}

FinTree random_tree(std::mt19937_64& gen, std::size_t max_nodes) {
  const std::size_t n = gen() % (max_nodes + 1);
  FinTree t;
  if (n == 0) return t;
  std::vector<Node> nodes{Node{}};
  t.add_with_prefixes(Node{});
  while (nodes.size() < n) {
    Node c = nodes[gen() % nodes.size()];
    c.push_back(static_cast<std::int64_t>(gen() % 3));
    if (t.contains(c)) continue;
    t.add_with_prefixes(c);
    nodes.push_back(c);
  }
  return t;
}

}  // namespace

TEST_CASE("derivative") {
  CHECK(derivative(FinTree{}).empty());
  CHECK(derivative(tree({{}, {0}, {1}})) == tree({{}}));
  CHECK(derivative(tree({{}, {0}, {0, 0}, {1}})) == tree({{}, {0}}));
  CHECK_THROWS_AS(FinTree::from_nodes({{0}}), DomainError);
}

TEST_CASE("finite rank") {
  CHECK(rank(FinTree{}) == Ordinal(0));
  CHECK(rank(tree({{}, {0}, {0, 0}})) == Ordinal(3));
  CHECK(rank(tree({{}, {0}, {1}, {1, 0}})) == Ordinal(3));

  std::mt19937_64 gen(11);
  for (int i = 0; i < 200; ++i) {
    const FinTree t = random_tree(gen, 14);
    CHECK(rank_finite(t) == strip_count(t));
    if (!t.empty()) CHECK(rank_finite(derivative(t)) + 1 == rank_finite(t));
    const FinTree dt = derivative(t);
    for (const Node& v : dt.nodes()) CHECK(t.contains(v));
  }
}

TEST_CASE("schema rank") {
  CHECK(schema_rank(*TreeSchema::chain(3)) == Ordinal(3));
  const auto comb = TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 1}));
  CHECK(schema_rank(*comb) == Ordinal::omega() + Ordinal(1));
  CHECK(schema_rank(*TreeSchema::join({TreeSchema::chain(2), TreeSchema::chain(5)})) == Ordinal(6));
  CHECK_THROWS_AS(schema_rank(*TreeSchema::full_branch()), DomainError);

  // Truncation consistency: the comb truncated at depth D has rank D+1.
  for (std::size_t d = 1; d <= 6; ++d) CHECK(rank_finite(truncate_schema(*comb, d, 64)) == d + 1);

  // Finite schemas agree with the rank of their full truncation.
  const std::vector<SchemaPtr> finite{
      TreeSchema::single(),
      TreeSchema::spine(AffineLen{0, 2}, TreeSchema::join({TreeSchema::chain(1), TreeSchema::chain(3)})),
      TreeSchema::join({TreeSchema::single(), TreeSchema::spine(AffineLen{0, 1}, TreeSchema::chain(4))}),
  };
  for (const auto& s : finite) {
    CHECK_FALSE(schema_is_infinite(*s));
    CHECK(schema_rank(*s) == Ordinal(strip_count(truncate_schema(*s, 20, 20))));
  }
}

TEST_CASE("well-foundedness and branches") {
  CHECK(is_wellfounded(*TreeSchema::chain(7)));
  CHECK_FALSE(is_wellfounded(*TreeSchema::full_branch()));
  CHECK(is_wellfounded(*TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 0}))));

  const Node b3 = konig_branch(*TreeSchema::full_branch(), 3);
  CHECK(b3 == Node{0, 0, 0});
  const auto mixed = TreeSchema::join({TreeSchema::full_branch(), TreeSchema::chain(2)});
  const Node b4 = konig_branch(*mixed, 4);
  CHECK(b4.size() == 4);
  CHECK(b4[0] == 0);
  CHECK(schema_contains(*mixed, b4));
  CHECK(is_node_prefix(konig_branch(*mixed, 2), b4));
  CHECK_THROWS_AS(konig_branch(*TreeSchema::chain(9), 1), DomainError);
}

TEST_CASE("monotone maps") {
  CHECK(find_monotone_map(FinTree::chain(2), FinTree::chain(3)).has_value());
  CHECK_FALSE(find_monotone_map(FinTree::chain(3), FinTree::chain(2)).has_value());
  const auto id = find_monotone_map(FinTree::chain(1), FinTree::chain(1));
  REQUIRE(id.has_value());
  CHECK(verify_monotone(*id, FinTree::chain(1), FinTree::chain(1)));

  const FinTree ante = tree({{}, {0}, {1}});
  CHECK(verify_monotone({{{}, {}}, {{0}, {0}}, {{1}, {0}}}, ante, FinTree::chain(2)));
  CHECK_FALSE(verify_monotone({{{}, {}}, {{0}, {}}}, FinTree::chain(2), FinTree::chain(2)));
  CHECK_THROWS_AS(verify_monotone({{{}, {}}}, FinTree::chain(2), FinTree::chain(2)), DomainError);
  CHECK_THROWS_AS(verify_monotone({{{}, {5}}}, FinTree::chain(1), FinTree::chain(1)), DomainError);

  std::mt19937_64 gen(3);
  for (int i = 0; i < 150; ++i) {
    const FinTree s = random_tree(gen, 8), t = random_tree(gen, 8);
    const auto m = find_monotone_map(s, t);
    CHECK(m.has_value() == (strip_count(s) <= strip_count(t)));
    if (m) CHECK(verify_monotone(*m, s, t));
  }
}

TEST_CASE("node coding") {
  CHECK(node_code({}) == "");
  CHECK(node_code({2, 0}) == "1100");
  CHECK(decode_node("1100") == Node{2, 0});
  CHECK_FALSE(decode_node("11").has_value());
  const Node a{1, 3}, b{1, 3, 0};
  CHECK(is_prefix(node_code(a), node_code(b)));
  CHECK_FALSE(is_prefix(node_code({2}), node_code({1, 3})));
  CHECK(branch_code({1}).to_string() == "1(0)");
}
