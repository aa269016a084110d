#include "dset/error.hpp"
#include "dset/ordinal.hpp"

#include <doctest.h>

#include <tuple>
#include <utility>
#include <vector>

using namespace dset;

namespace {

// Ordinals below ω² as pairs (a, b) = ω·a + b, compared and added by hand.
using Small = std::pair<unsigned, unsigned>;

Ordinal to_ord(Small s) {
  return Ordinal::omega_power(Ordinal(1), s.first) + Ordinal(s.second);
}

Small small_add(Small x, Small y) {
  if (y.first > 0) return {x.first + y.first, y.second};
  return {x.first, x.second + y.second};
}

std::vector<Small> smalls() {
  std::vector<Small> v;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) v.push_back({a, b});
  return v;
}

Ordinal w(unsigned c = 1) { return Ordinal::omega_power(Ordinal(1), c); }

}  // namespace

TEST_CASE("ordinal comparison") {
  CHECK(ord_compare(Ordinal(0), Ordinal(0)) == Cmp::equal);
  CHECK(ord_compare(Ordinal(3), Ordinal::omega()) == Cmp::less);
  CHECK(ord_compare(w(2) + Ordinal(1), w(2)) == Cmp::greater);

  for (Small x : smalls())
    for (Small y : smalls()) {
      const Cmp want = x < y ? Cmp::less : (x == y ? Cmp::equal : Cmp::greater);
      CHECK(ord_compare(to_ord(x), to_ord(y)) == want);
    }
}

TEST_CASE("ordinal comparison on two-term normal forms") {
  // Terms ω^e·c with e in {0, 1, 2, ω}; the order of such sums is lexicographic
  // on (leading exponent, coefficient, second exponent, coefficient).
  const std::vector<Ordinal> exps{Ordinal(0), Ordinal(1), Ordinal(2), Ordinal::omega()};
  struct Two {
    int e1;
    unsigned c1;
    int e2;
    unsigned c2;
  };
  std::vector<Two> all;
  for (int e1 = 0; e1 < 4; ++e1)
    for (unsigned c1 = 1; c1 <= 3; ++c1) {
      all.push_back({e1, c1, -1, 0});
      for (int e2 = 0; e2 < e1; ++e2)
        for (unsigned c2 = 1; c2 <= 3; ++c2) all.push_back({e1, c1, e2, c2});
    }
  auto build = [&](const Two& t) {
    Ordinal o = Ordinal::omega_power(exps[t.e1], t.c1);
    if (t.e2 >= 0) o = o + Ordinal::omega_power(exps[t.e2], t.c2);
    return o;
  };
  auto key = [](const Two& t) { return std::tuple(t.e1, t.c1, t.e2, t.c2); };
  for (const Two& x : all)
    for (const Two& y : all) {
      const Cmp want = key(x) < key(y) ? Cmp::less : (key(x) == key(y) ? Cmp::equal : Cmp::greater);
      CHECK(ord_compare(build(x), build(y)) == want);
    }
}

TEST_CASE("ordinal addition") {
  const Ordinal a = w() + Ordinal(5);
  CHECK(a + Ordinal(0) == a);
  CHECK(Ordinal(1) + Ordinal::omega() == Ordinal::omega());
  CHECK(w() + Ordinal(3) + w(2) == w(3));

  for (Small x : smalls())
    for (Small y : smalls()) CHECK(to_ord(x) + to_ord(y) == to_ord(small_add(x, y)));
}

TEST_CASE("addition laws on generated values") {
  std::vector<Ordinal> vals;
  for (Small s : smalls()) vals.push_back(to_ord(s));
  vals.push_back(Ordinal::omega_power(Ordinal(2), 2) + w());
  vals.push_back(Ordinal::omega_power(Ordinal::omega()));
  for (const auto& a : vals)
    for (const auto& b : vals) {
      for (const auto& c : vals) CHECK((a + b) + c == a + (b + c));
      if (b < a + Ordinal(1)) CHECK(b <= a);  // a+1 is the immediate successor
      if (b < a) CHECK(Ordinal(7) + b <= Ordinal(7) + a);
    }
  for (const auto& a : vals)
    for (const auto& b1 : vals)
      for (const auto& b2 : vals)
        if (b1 < b2) CHECK(a + b1 < a + b2);
}

TEST_CASE("sup plus one") {
  std::vector<Ordinal> one{Ordinal(0)};
  CHECK(ord_sup_plus_one(one) == Ordinal(1));
  std::vector<Ordinal> mixed{Ordinal::omega(), Ordinal(5), Ordinal::omega()};
  CHECK(ord_sup_plus_one(mixed) == Ordinal::omega() + Ordinal(1));
  std::vector<Ordinal> two{w(2), w() + Ordinal(7)};
  CHECK(ord_sup_plus_one(two) == w(2) + Ordinal(1));
  std::vector<Ordinal> none;
  CHECK_THROWS_AS(ord_sup_plus_one(none), DomainError);
  for (Small s : smalls()) {
    std::vector<Ordinal> v{to_ord(s)};
    CHECK(ord_sup_plus_one(v) == to_ord(s) + Ordinal(1));
  }
}

TEST_CASE("text round trip and big coefficients") {
  const Ordinal big = Ordinal::omega_power(Ordinal::omega() + Ordinal(1), BigInt("123456789012345678901234567890")) +
                      Ordinal(4);
  CHECK(Ordinal::parse(big.to_string()) == big);
  CHECK(Ordinal::omega().to_string() == "w^{1}");
  CHECK(Ordinal(0).to_string() == "0");
  CHECK((w(2) + Ordinal(1)).is_successor());
  CHECK(w(2).is_limit());
  CHECK((w(2) + Ordinal(1)).predecessor() == w(2));
  CHECK(ord_left_subtract(3, w() + Ordinal(2)) == w() + Ordinal(2));
  CHECK(ord_left_subtract(3, Ordinal(5)) == Ordinal(2));
}

TEST_CASE("unbounded sentinel") {
  const RankValue u = RankValue::unbounded();
  CHECK(u.is_unbounded());
  CHECK(u.to_string() == "w_1");
  CHECK_THROWS(u.value());
  CHECK(RankValue(Ordinal(3)).value() == Ordinal(3));
}
