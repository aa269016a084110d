#include "dset/error.hpp"
#include "dset/json_io.hpp"

#include <doctest.h>

#include <string>

using namespace dset;

namespace {

std::string code_of(const auto& fn) {
  try {
    fn();
  } catch (const DomainError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("ordinals and rationals") {
  const Ordinal o = Ordinal::omega_power(Ordinal::omega(), 2) + Ordinal::omega_power(Ordinal(1), 3) + Ordinal(7);
  CHECK(ordinal_from_json(ordinal_to_json(o)) == o);
  CHECK(ordinal_from_json(Json(0)) == Ordinal(0));
  CHECK(ordinal_from_json(Json::parse(R"([[0, "123456789012345678901234567890"]])")) ==
        Ordinal::omega_power(Ordinal(0), BigInt("123456789012345678901234567890")));
  CHECK(rational_to_json(Rational(2, 4)) == Json("1/2"));
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(rational_from_json(Json(5)) == Rational(5));
  CHECK(code_of([] { rational_from_json(Json("1/0")); }) == "bad json");
  CHECK(code_of([] { ordinal_from_json(Json("w")); }) == "bad json");
}

TEST_CASE("points, trees and schemas") {
  for (const auto& p : enumerate_points(4)) CHECK(point_from_json(point_to_json(p)) == p);
  CHECK(point_from_json(Json("01(10)")) == Point("01", "10"));
  CHECK(code_of([] { point_from_json(Json("01")); }) != "");

  const FinTree t = FinTree::closure_of({{0, 1}, {2}});
  CHECK(fintree_from_json(fintree_to_json(t)) == t);
  CHECK(code_of([] { fintree_from_json(Json::parse("[[0, -1]]")); }) == "bad json");
  CHECK(code_of([] { fintree_from_json(Json::parse("[[0, 1]]")); }) == "not a tree");

  const SchemaPtr s = TreeSchema::join({TreeSchema::omega_join(TreeSchema::chain(AffineLen{2, 1})),
                                        TreeSchema::spine(AffineLen{0, 3}, TreeSchema::full_branch())});
  CHECK(schema_to_json(*schema_from_json(schema_to_json(*s))) == schema_to_json(*s));
}

TEST_CASE("index sets, functions and sequences") {
  const IndexSet l = IndexSet::unite(
      {IndexSet::affine(IndexSet::branch_siblings(Point("1", "01"), Side::one), 3, 2),
       IndexSet::drop(IndexSet::node_set(TreeSchema::omega_join(TreeSchema::single())), 2),
       IndexSet::difference(IndexSet::all(), IndexSet::finite({1, 2}), true)});
  const IndexSet back = index_set_from_json(index_set_to_json(l));
  CHECK(back.take(30) == l.take(30));
  CHECK(index_set_to_json(back) == index_set_to_json(l));
  CHECK(code_of([] { index_set_from_json(Json::parse(R"({"kind":"Nope"})")); }) == "bad json");

  for (const auto& f : {SymbolicFn::zero(), SymbolicFn::constant(Rational(1, 3)), SymbolicFn::node_ind("011"),
                        SymbolicFn::plus_step(Point("1", "0")), SymbolicFn::point_ind(Point())})
    CHECK(symbolic_fn_from_json(symbolic_fn_to_json(f)) == f);

  const DenseSequence seq = DenseSequence::table_with_tail(
      {SymbolicFn::constant(Rational(1)), SymbolicFn::zero()}, DenseSequence::split_cantor());
  const DenseSequence seq2 = sequence_from_json(sequence_to_json(seq));
  for (std::uint64_t n = 0; n < 12; ++n) CHECK(seq2.term(n) == seq.term(n));
}

TEST_CASE("point sets and compacts") {
  const PointSet a = PointSet::either(PointSet::both(PointSet::clopen(ClopenSet({"01", "1"})),
                                                     PointSet::not_eventually_constant()),
                                      PointSet::negate(PointSet::interval(Interval::cylinder("00"))));
  const PointSet b = point_set_from_json(point_set_to_json(a));
  for (const auto& x : enumerate_points(5)) CHECK(b.contains(x) == a.contains(x));

  const RankExample ex = build_rank_example(Ordinal::omega() + Ordinal(2), Pattern::A2);
  const Compact k = compact_from_json(compact_to_json(ex.compact));
  CHECK(compact_to_json(k) == compact_to_json(ex.compact));
  CHECK(alpha_on(k, ex.a, ex.b) == alpha_on(ex.compact, ex.a, ex.b));
  CHECK(compact_from_json(Json()) == nullptr);
}

TEST_CASE("nodes and documents") {
  const LfNode n{{2, 4}, {{4, 5}, {8}}, {1, 3}};
  CHECK(lfnode_from_json(lfnode_to_json(n)) == n);
  const LfNode s{{2}, {}, {1}};
  CHECK(lfnode_from_json(lfnode_to_json(s)) == s);
  const Json d = document(Json{{"rank", "3"}});
  CHECK(d.begin().key() == "schema");
  CHECK(d["schema"] == "v1");
  const Json e = error_json("caps", "too many nodes");
  CHECK(e["error"] == "caps");
  CHECK(e["schema"] == "v1");
}
