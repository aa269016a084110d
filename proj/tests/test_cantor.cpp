#include "dset/cantor.hpp"
#include "dset/error.hpp"

#include <doctest.h>

#include <random>

using namespace dset;

namespace {

// The first n bits of prefix⌢period^∞, expanded by hand.
std::string expand(const std::string& prefix, const std::string& period, std::size_t n) {
  std::string out = prefix;
  while (out.size() < n) out += period;
  return out.substr(0, n);
}

std::string expand(const Point& p, std::size_t n) { return expand(p.prefix(), p.period(), n); }

// Length-lex position computed by counting, independent of the closed form.
std::uint64_t count_index(const Word& s) {
  std::uint64_t n = 0;
  for (std::size_t len = 0; len < s.size(); ++len) n += std::uint64_t{1} << len;
  std::uint64_t within = 0;
  for (char c : s) within = within * 2 + (c == '1');
  return n + within;
}

}  // namespace

TEST_CASE("canonical points") {
  const Point a("0101", "01"), b("", "01");
  CHECK(a == b);
  CHECK(Point("1", "11") == Point("", "1"));
  CHECK(Point::parse("01(10)") == Point("01", "10"));

  std::mt19937_64 gen(5);
  for (int i = 0; i < 300; ++i) {
    std::string prefix, period;
    for (std::size_t k = gen() % 5; k > 0; --k) prefix += gen() % 2 ? '1' : '0';
    for (std::size_t k = 1 + gen() % 4; k > 0; --k) period += gen() % 2 ? '1' : '0';
    const Point p(prefix, period);
    const std::size_t n = 2 * (prefix.size() + period.size()) + 8;
    CHECK(expand(p, n) == expand(prefix, period, n));
    CHECK(Point(p.prefix(), p.period()) == p);
    CHECK(p.restrict(n) == expand(prefix, period, n));
  }
}

TEST_CASE("lexicographic order") {
  CHECK(lex_compare(Point(), Point("", "1")) == Cmp::less);
  CHECK(lex_compare(Point("01", "0"), Point("0", "10")) == Cmp::less);
  const Point x("1", "10");
  CHECK(lex_compare(x, x) == Cmp::equal);

  const auto pts = enumerate_points(4);
  for (const auto& p : pts)
    for (const auto& q : pts) {
      const std::string ep = expand(p, 40), eq = expand(q, 40);
      const Cmp want = ep < eq ? Cmp::less : (ep == eq ? Cmp::equal : Cmp::greater);
      CHECK(lex_compare(p, q) == want);
    }
}

TEST_CASE("h enumeration") {
  CHECK(h_enum("") == 0);
  CHECK(h_enum("1") == 2);
  CHECK(h_enum("001") == 8);
  std::uint64_t expected = 0;
  for (std::size_t len = 0; len <= 8; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      Word s;
      for (std::size_t k = len; k > 0; --k) s += (v >> (k - 1)) & 1 ? '1' : '0';
      CHECK(h_enum(s) == expected);
      CHECK(count_index(s) == expected);
      CHECK(h_inv(expected) == s);
      ++expected;
    }
  CHECK(h_level_start(3) == 7);
}

TEST_CASE("clopen algebra") {
  CHECK(ClopenSet({"0"}).unite(ClopenSet({"1"})) == ClopenSet::whole());
  CHECK(ClopenSet({"0"}).intersect(ClopenSet({"1"})).is_empty());
  CHECK(ClopenSet({"01"}).subset_of(ClopenSet({"0"})));

  std::mt19937_64 gen(9);
  auto random_set = [&] {
    std::vector<Word> ws;
    for (std::size_t k = gen() % 4; k > 0; --k) {
      Word w;
      for (std::size_t j = gen() % 4; j > 0; --j) w += gen() % 2 ? '1' : '0';
      ws.push_back(w);
    }
    return ClopenSet(ws);
  };
  const auto pts = enumerate_points(5);
  for (int i = 0; i < 60; ++i) {
    const ClopenSet a = random_set(), b = random_set();
    const ClopenSet u = a.unite(b), n = a.intersect(b), c = a.complement();
    for (const auto& p : pts) {
      // Membership by prefix test on the expansion.
      auto in = [&](const ClopenSet& s) {
        for (const auto& w : s.words())
          if (expand(p, w.size()) == w) return true;
        return false;
      };
      CHECK(u.contains(p) == (in(a) || in(b)));
      CHECK(n.contains(p) == (in(a) && in(b)));
      CHECK(c.contains(p) == !in(a));
      CHECK(a.to_region().contains(p) == in(a));
    }
    CHECK(a.subset_of(b) == a.intersect(b.complement()).is_empty());
    CHECK(a.complement().complement() == a);
    CHECK(a.unite(b.intersect(c)) == a.unite(b).intersect(a.unite(c)));
  }
}

TEST_CASE("regions") {
  const Point x("0", "1");
  const Region r = Region::at_or_above(x);
  CHECK(r.contains(x));
  CHECK_FALSE(Region::above(x).contains(x));
  CHECK(Region::point(x).contains(x));
  CHECK(Region::cylinder("0").unite(Region::cylinder("1")) == Region::whole());
  // 01^∞ and 10^∞ are neighbours, so (01^∞, 1] equals [10^∞, 1].
  CHECK(Region::above(x) == Region::at_or_above(Point("1", "0")));
  CHECK(Region::cylinder("01").subset_of(Region::cylinder("0")));
  CHECK(Region::whole().complement().is_empty());
}
