#include "dset/point_set.hpp"

#include <doctest.h>

#include <functional>

using namespace dset;

TEST_CASE("boolean combinations agree with pointwise evaluation") {
  const auto c = PointSet::clopen(ClopenSet({"01", "1"}));
  const auto iv = PointSet::interval({Point("0", "1"), false, Point("11", "0"), true});
  const auto nec = PointSet::not_eventually_constant();
  const std::vector<std::pair<PointSet, std::function<bool(const Point&)>>> cases{
      {PointSet::both(c, nec), [&](const Point& p) { return c.contains(p) && !p.is_eventually_constant(); }},
      {PointSet::either(iv, nec), [&](const Point& p) { return iv.contains(p) || !p.is_eventually_constant(); }},
      {PointSet::negate(PointSet::both(c, iv)), [&](const Point& p) { return !(c.contains(p) && iv.contains(p)); }},
  };
  for (const auto& [set, pred] : cases)
    for (const auto& p : enumerate_points(6)) CHECK(set.contains(p) == pred(p));
}

TEST_CASE("admissibility") {
  CHECK(PointSet::not_eventually_constant().admissibility() == Admissibility::proven);
  CHECK(PointSet::both(PointSet::clopen(ClopenSet({"0"})), PointSet::not_eventually_constant()).admissibility() ==
        Admissibility::proven);
  CHECK(PointSet::clopen(ClopenSet({"0"})).admissibility() == Admissibility::refuted);
  CHECK(PointSet::nothing().admissibility() == Admissibility::proven);
  CHECK(PointSet::interval(Interval::single(Point("", "01"))).admissibility() == Admissibility::proven);
}

TEST_CASE("witnesses") {
  const auto a = PointSet::both(PointSet::clopen(ClopenSet({"10"})), PointSet::not_eventually_constant());
  const auto w = a.witness_in(Region::whole());
  REQUIRE(w.has_value());
  CHECK(a.contains(*w));
  CHECK_FALSE(a.meets(Region::cylinder("0")));
  CHECK(a.meets(Region::cylinder("101")));
}
