#include "dset/error.hpp"
#include "dset/rank.hpp"

#include <doctest.h>

using namespace dset;

namespace {

const Rational third(1, 3), two_thirds(2, 3);

// A convergent sequence with alternating values 0 and 1 and apex value 0.
Compact alternating() { return apex(0, {Attachment::cycle({leaf(0), leaf(1)})}); }

// Brute force on a finite instantiation deep enough for the presentation.
std::uint64_t oracle(const Compact& k, const Rational& a, const Rational& b) {
  return brute_force_alpha(instantiate(k, replication_need(k)), a, b);
}

}  // namespace

TEST_CASE("derivative of simple compacta") {
  CHECK(sep_derivative(apex(0, {Attachment::cycle({leaf(0)})}), third, two_thirds) == nullptr);
  CHECK(sep_derivative(leaf(1), third, two_thirds) == nullptr);
  const Compact d = sep_derivative(alternating(), third, two_thirds);
  REQUIRE(d != nullptr);
  CHECK(d->attachments.empty() == true);
  CHECK(in_compact(d, Point("", "1")));
  CHECK_THROWS_AS(sep_derivative(leaf(0), two_thirds, third), DomainError);
}

TEST_CASE("alpha on small compacta") {
  CHECK(alpha_on(leaf(0), third, two_thirds) == Ordinal(1));
  CHECK(alpha_on(alternating(), third, two_thirds) == Ordinal(2));
  CHECK(oracle(alternating(), third, two_thirds) == 2);
  CHECK(brute_force_alpha(instantiate(leaf(0), 1), third, two_thirds) == 1);
  for (Pattern p : {Pattern::A1, Pattern::A2, Pattern::A3}) {
    const RankExample ex = build_rank_example(Ordinal(3), p);
    CHECK(alpha_on(ex.compact, ex.a, ex.b) == Ordinal(3));
    CHECK(oracle(ex.compact, ex.a, ex.b) == 3);
  }
  CHECK_THROWS_AS(alpha_on(leaf(0), 1, 1), DomainError);
}

TEST_CASE("rank examples agree with brute force up to 6") {
  for (std::uint64_t xi = 1; xi <= 6; ++xi)
    for (Pattern p : {Pattern::A1, Pattern::A2, Pattern::A3}) {
      const RankExample ex = build_rank_example(Ordinal(xi), p);
      CHECK(alpha_on(ex.compact, ex.a, ex.b) == Ordinal(xi));
      CHECK(oracle(ex.compact, ex.a, ex.b) == xi);
      // xi nonempty stages, then the empty set.
      const auto trace = derivation_trace(ex.compact, ex.a, ex.b, 20);
      REQUIRE(trace.size() == xi + 1);
      CHECK(trace.back() == nullptr);
      for (std::size_t i = 0; i < xi; ++i) CHECK(trace[i] != nullptr);
    }
  const RankExample two = build_rank_example(Ordinal(2), Pattern::A1);
  CHECK(two.compact->value == Rational(0));
  CHECK_THROWS_AS(build_rank_example(Ordinal(0), Pattern::A1), DomainError);
  CHECK_THROWS_AS(build_rank_example(Ordinal::omega(), Pattern::A1), DomainError);
}

TEST_CASE("infinite rank examples") {
  const std::vector<std::string> ranks{"w^{1} + 1", "w^{1}*2 + 1", "w^{2} + 1", "w^{2} + w^{1} + 3"};
  for (const auto& r : ranks)
    for (Pattern p : {Pattern::A1, Pattern::A2, Pattern::A3}) {
      const Ordinal xi = Ordinal::parse(r);
      const RankExample ex = build_rank_example(xi, p);
      CHECK(alpha_on(ex.compact, ex.a, ex.b) == xi);
      // A finite number of derivative steps leaves the rank's limit part.
      const auto trace = derivation_trace(ex.compact, ex.a, ex.b, 4);
      REQUIRE(trace.size() == 4);
      CHECK(alpha_on(trace[3], ex.a, ex.b) == xi);
    }
  // Ladders have no finite instantiation.
  const RankExample w1 = build_rank_example(Ordinal::parse("w^{1} + 1"), Pattern::A3);
  CHECK_THROWS_AS(instantiate(w1.compact, 4), DomainError);
}

TEST_CASE("monotonicity under inclusion") {
  // Dropping copies from a cycle can only lower the rank.
  const Compact big = apex(Rational(1, 2), {Attachment::cycle({alternating(), leaf(1)}), Attachment::cycle({leaf(0)})});
  const Compact small = apex(Rational(1, 2), {Attachment::cycle({alternating(), nullptr})});
  for (const auto& [a, b] : crossing_pairs(big)) CHECK(alpha_on(small, a, b) <= alpha_on(big, a, b));
}

TEST_CASE("full alpha over crossing pairs") {
  CHECK(alpha_full(leaf(Rational(5)), crossing_pairs(leaf(Rational(5)))) == Ordinal(1));
  CHECK_THROWS_AS(alpha_full(leaf(0), {}), DomainError);
  const Compact three = apex(Rational(1, 2), {Attachment::cycle({leaf(0), leaf(1), alternating()})});
  const auto pairs = crossing_pairs(three);
  CHECK(pairs.size() >= 2);
  const auto pts = instantiate(three, replication_need(three));
  std::uint64_t best = 0;
  for (const auto& [a, b] : pairs) {
    CHECK(alpha_on(three, a, b) == Ordinal(brute_force_alpha(pts, a, b)));
    best = std::max(best, brute_force_alpha(pts, a, b));
  }
  CHECK(alpha_full(three, pairs) == Ordinal(best));
}

TEST_CASE("restriction to balls") {
  const RankExample ex = build_rank_example(Ordinal(2), Pattern::A1);
  const Point x("", "1");
  CHECK(restrict_ball(ex.compact, ex.a, ex.b, x.restrict(1), Ordinal(1), x));
  CHECK(restrict_ball(ex.compact, ex.a, ex.b, "", Ordinal(0), x));
  const Point leaf_point("0", "1");
  CHECK_FALSE(restrict_ball(ex.compact, ex.a, ex.b, "0", Ordinal(1), leaf_point));
  CHECK_THROWS_AS(restrict_ball(ex.compact, ex.a, ex.b, "0", Ordinal(0), x), DomainError);
  CHECK_THROWS_AS(restrict_ball(ex.compact, ex.a, ex.b, "", Ordinal(0), Point("", "01")), DomainError);
}

TEST_CASE("attainment") {
  const RankExample ex = build_rank_example(Ordinal(4), Pattern::A2);
  const auto wit = attainment_witness(ex.compact, ex.a, ex.b);
  REQUIRE(wit.size() == 2);
  CHECK(wit[0].alpha == Ordinal(4));
  CHECK(alpha_on(wit[1].sub, ex.a, ex.b) == Ordinal(3));
  CHECK(oracle(wit[1].sub, ex.a, ex.b) == 3);
}

TEST_CASE("component spaces") {
  ComponentSpace s;
  s.components = {build_rank_example(Ordinal(3), Pattern::A1).compact, leaf(0)};
  s.tail = leaf(0);
  CHECK(alpha_space(s, third, two_thirds) == Ordinal(3));
  CHECK(alpha_on_components(s, {1, 5}, third, two_thirds) == Ordinal(1));
  CHECK(alpha_on_components(s, {0, 1}, third, two_thirds) == Ordinal(3));
}
