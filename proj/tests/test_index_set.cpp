#include "dset/error.hpp"
#include "dset/index_set.hpp"

#include <doctest.h>

#include <set>

using namespace dset;

namespace {

// Members below `bound` by testing every n, independent of the enumerators.
std::vector<std::uint64_t> by_membership(const IndexSet& l, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < bound; ++n)
    if (l.contains(n)) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("kth element") {
  CHECK(index_kth(IndexSet::finite({3, 1, 4}), 0) == 1);
  CHECK(index_kth(IndexSet::unite({IndexSet::finite({2}), IndexSet::finite({2})}), 0) == 2);
  CHECK_THROWS_AS(index_kth(IndexSet::finite({1}), 3), DomainError);
  const auto h = IndexSet::affine(IndexSet::branch_siblings(Point()), 4, 0);
  CHECK(index_kth(h, 0) == 8);
}

TEST_CASE("branch sets from the rule") {
  const Point x("0", "10");
  const auto sib = IndexSet::branch_siblings(x);
  const auto pre = IndexSet::branch_prefixes(x);
  std::vector<std::uint64_t> want_sib, want_pre;
  for (std::size_t k = 0; k < 9; ++k) {
    Word w = x.restrict(k);
    want_pre.push_back(h_enum(w));
    w.push_back(flip(x.bit(k)));
    want_sib.push_back(h_enum(w));
  }
  CHECK(sib.take(9) == want_sib);
  CHECK(pre.take(9) == want_pre);

  // Side filters keep the siblings off positions with the given bit.
  const auto ones = IndexSet::branch_siblings(x, Side::one);
  std::vector<std::uint64_t> want_ones;
  for (std::size_t k = 0; k < 12; ++k)
    if (x.bit(k) == '1') {
      Word w = x.restrict(k);
      w.push_back('0');
      want_ones.push_back(h_enum(w));
    }
  CHECK(ones.take(want_ones.size()) == want_ones);
  CHECK(IndexSet::branch_siblings(Point(), Side::one).is_infinite() == false);
}

TEST_CASE("combinators agree with membership") {
  const auto comb = TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 1}));
  const std::vector<IndexSet> sets{
      IndexSet::all(),
      IndexSet::node_set(comb),
      IndexSet::branch_siblings(Point("1", "01")),
      IndexSet::affine(IndexSet::branch_prefixes(Point("", "1")), 3, 2),
      IndexSet::unite({IndexSet::finite({5, 700}), IndexSet::branch_siblings(Point())}),
      IndexSet::drop(IndexSet::node_set(comb), 4),
      IndexSet::at_least(IndexSet::all(), 17),
      IndexSet::intersect(IndexSet::all(), IndexSet::node_set(comb), true),
      IndexSet::difference(IndexSet::node_set(comb), IndexSet::finite({0, 1, 3}), true),
  };
  for (const auto& l : sets) {
    const auto got = l.elements_below(600);
    CHECK(got == by_membership(l, 600));
    const auto first = l.take(10);
    for (std::size_t k = 1; k < first.size(); ++k) CHECK(first[k - 1] < first[k]);
    CHECK(l.is_infinite() != false);
  }
  CHECK(IndexSet::finite({1, 2}).is_infinite() == false);
  CHECK(IndexSet::node_set(TreeSchema::chain(4)).is_infinite() == false);
}

TEST_CASE("node sets are codes of the nodes") {
  const auto t = TreeSchema::join({TreeSchema::chain(2), TreeSchema::single()});
  std::set<std::uint64_t> want;
  const FinTree full = truncate_schema(*t, 10, 10);
  for (const Node& n : full.nodes()) want.insert(h_enum(node_code(n)));
  const auto got = IndexSet::node_set(t).take(100);
  CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == want);
}
