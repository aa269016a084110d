#include "dset/cantor.hpp"

#include "dset/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <utility>

namespace dset {

void check_word(const Word& w) {
  for (char c : w)
    if (c != '0' && c != '1') throw DomainError("bad word", "'" + w + "' is not a bit string");
}

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

constexpr std::size_t kMaxIndexedWord = 62;

std::uint64_t h_level_start(std::size_t len) {
  if (len > kMaxIndexedWord) throw DomainError("index overflow", "words longer than 62 bits are not indexed");
  return (std::uint64_t{1} << len) - 1;
}

std::uint64_t h_enum(const Word& s) {
  check_word(s);
  std::uint64_t value = 0;
  for (char c : s) value = (value << 1) | static_cast<std::uint64_t>(c - '0');
  return h_level_start(s.size()) + value;
}

Word h_inv(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << (kMaxIndexedWord + 1)) - 1)
    throw DomainError("index overflow", std::to_string(n) + " lies beyond 62-bit words");
  const std::size_t len = static_cast<std::size_t>(std::bit_width(n + 1)) - 1;
  std::uint64_t value = n - h_level_start(len);
  Word w(len, '0');
  for (std::size_t i = 0; i < len; ++i)
    if ((value >> (len - 1 - i)) & 1U) w[i] = '1';
  return w;
}

// ---------------------------------------------------------------------------
// Points

Point::Point() : period_("0") {}

Point::Point(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  check_word(prefix_);
  check_word(period_);
  if (period_.empty()) throw DomainError("bad point", "period must be non-empty");
  const std::size_t q = period_.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < q && periodic; ++i) periodic = period_[i] == period_[i - d];
    if (periodic) {
      period_.resize(d);
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

char Point::bit(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

Word Point::restrict(std::size_t n) const {
  Word w(n, '0');
  for (std::size_t i = 0; i < n; ++i) w[i] = bit(i);
  return w;
}

bool Point::has_prefix(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (bit(i) != w[i]) return false;
  return true;
}

std::optional<Point> Point::lex_successor() const {
  if (period_ != "1" || prefix_.empty()) return std::nullopt;
  Word u = prefix_;
  u.back() = '1';
  return Point(u, "0");
}

std::optional<Point> Point::lex_predecessor() const {
  if (period_ != "0" || prefix_.empty()) return std::nullopt;
  Word u = prefix_;
  u.back() = '0';
  return Point(u, "1");
}

std::string Point::to_string() const { return prefix_ + "(" + period_ + ")"; }

Point Point::parse(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')' || text.find('(', open + 1) != std::string::npos)
    throw DomainError("bad point", "expected prefix(period), got '" + text + "'");
  return Point(text.substr(0, open), text.substr(open + 1, text.size() - open - 2));
}

Cmp lex_compare(const Point& x, const Point& y) {
  const std::size_t n = std::max(x.prefix().size(), y.prefix().size()) +
                        std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < n; ++i) {
    const char a = x.bit(i), b = y.bit(i);
    if (a != b) return a < b ? Cmp::less : Cmp::greater;
  }
  return Cmp::equal;
}

std::size_t first_difference(const Point& x, const Point& y) {
  const std::size_t n = std::max(x.prefix().size(), y.prefix().size()) +
                        std::lcm(x.period().size(), y.period().size());
  for (std::size_t i = 0; i < n; ++i)
    if (x.bit(i) != y.bit(i)) return i;
  throw DomainError("equal points", "first_difference needs distinct points");
}

std::vector<Point> enumerate_points(std::size_t max_len) {
  std::set<std::tuple<std::size_t, Word, Word>> seen;
  for (std::size_t total = 1; total <= max_len; ++total) {
    for (std::size_t q = 1; q <= total; ++q) {
      const std::size_t p = total - q;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << total); ++bits) {
        Word all(total, '0');
        for (std::size_t i = 0; i < total; ++i)
          if ((bits >> (total - 1 - i)) & 1U) all[i] = '1';
        Point pt(all.substr(0, p), all.substr(p));
        seen.emplace(pt.description_length(), pt.prefix(), pt.period());
      }
    }
  }
  std::vector<Point> out;
  out.reserve(seen.size());
  for (const auto& [len, prefix, period] : seen) out.emplace_back(prefix, period);
  return out;
}

// ---------------------------------------------------------------------------
// Intervals

namespace {

bool below_lo(const Point& p, const Interval& iv) {
  const Cmp c = lex_compare(p, iv.lo);
  return c == Cmp::less || (c == Cmp::equal && !iv.lo_closed);
}

bool above_hi(const Point& p, const Interval& iv) {
  const Cmp c = lex_compare(p, iv.hi);
  return c == Cmp::greater || (c == Cmp::equal && !iv.hi_closed);
}

// Closes open endpoints that have an immediate neighbour.
Interval close_endpoints(Interval iv) {
  if (!iv.lo_closed) {
    if (auto s = iv.lo.lex_successor()) {
      iv.lo = *s;
      iv.lo_closed = true;
    }
  }
  if (!iv.hi_closed) {
    if (auto p = iv.hi.lex_predecessor()) {
      iv.hi = *p;
      iv.hi_closed = true;
    }
  }
  return iv;
}

}  // namespace

Interval Interval::cylinder(const Word& w) {
  return closed(Point::eventually(w, '0'), Point::eventually(w, '1'));
}

Interval Interval::whole() { return closed(Point::eventually("", '0'), Point::eventually("", '1')); }

bool Interval::contains(const Point& p) const { return !below_lo(p, *this) && !above_hi(p, *this); }

bool Interval::is_empty() const {
  const Interval iv = close_endpoints(*this);
  const Cmp c = lex_compare(iv.lo, iv.hi);
  if (c == Cmp::greater) return true;
  if (c == Cmp::equal) return !(iv.lo_closed && iv.hi_closed);
  return false;
}

std::optional<Word> Interval::inner_cylinder() const {
  if (lex_compare(lo, hi) != Cmp::less) return std::nullopt;
  const std::size_t j = first_difference(lo, hi);
  const Word v = lo.restrict(j);
  const std::size_t bound = std::max(lo.description_length(), hi.description_length()) + j + 2;
  auto inside = [&](const Word& w) {
    return lex_compare(Point::eventually(w, '0'), lo) == Cmp::greater &&
           lex_compare(Point::eventually(w, '1'), hi) == Cmp::less;
  };
  for (std::size_t k = 1; k <= bound; ++k) {
    Word a = v + "0" + Word(k, '1');
    if (inside(a)) return a;
    Word b = v + "1" + Word(k, '0');
    if (inside(b)) return b;
  }
  return std::nullopt;
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() + (hi_closed ? "]" : ")");
}

// ---------------------------------------------------------------------------
// Regions

Region::Region(std::vector<Interval> parts) {
  std::vector<Interval> items;
  for (auto& iv : parts) {
    Interval n = close_endpoints(std::move(iv));
    if (!n.is_empty()) items.push_back(std::move(n));
  }
  std::sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) {
    const Cmp c = lex_compare(a.lo, b.lo);
    if (c != Cmp::equal) return c == Cmp::less;
    return a.lo_closed && !b.lo_closed;
  });
  for (auto& iv : items) {
    if (!parts_.empty()) {
      Interval& cur = parts_.back();
      const Cmp c = lex_compare(cur.hi, iv.lo);
      bool merge = c == Cmp::greater || (c == Cmp::equal && (cur.hi_closed || iv.lo_closed));
      if (!merge && cur.hi_closed && iv.lo_closed) {
        auto s = cur.hi.lex_successor();
        merge = s && *s == iv.lo;
      }
      if (merge) {
        const Cmp h = lex_compare(cur.hi, iv.hi);
        if (h == Cmp::less) {
          cur.hi = iv.hi;
          cur.hi_closed = iv.hi_closed;
        } else if (h == Cmp::equal) {
          cur.hi_closed = cur.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    parts_.push_back(std::move(iv));
  }
}

Region Region::at_or_above(const Point& x) { return Region({Interval{x, true, Point("", "1"), true}}); }

Region Region::above(const Point& x) { return Region({Interval{x, false, Point("", "1"), true}}); }

bool Region::contains(const Point& p) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& iv) { return iv.contains(p); });
}

bool Region::contains_cylinder(const Word& w) const { return Region::cylinder(w).subset_of(*this); }

bool Region::meets_cylinder(const Word& w) const { return !intersect(Region::cylinder(w)).is_empty(); }

Region Region::complement() const {
  std::vector<Interval> gaps;
  Point cur("", "0");
  bool cur_closed = true;
  for (const auto& iv : parts_) {
    gaps.push_back(Interval{cur, cur_closed, iv.lo, !iv.lo_closed});
    cur = iv.hi;
    cur_closed = !iv.hi_closed;
  }
  gaps.push_back(Interval{cur, cur_closed, Point("", "1"), true});
  return Region(std::move(gaps));
}

Region Region::unite(const Region& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Region(std::move(all));
}

Region Region::intersect(const Region& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      Interval iv;
      const Cmp lo = lex_compare(a.lo, b.lo);
      if (lo == Cmp::equal) {
        iv.lo = a.lo;
        iv.lo_closed = a.lo_closed && b.lo_closed;
      } else {
        const Interval& src = lo == Cmp::greater ? a : b;
        iv.lo = src.lo;
        iv.lo_closed = src.lo_closed;
      }
      const Cmp hi = lex_compare(a.hi, b.hi);
      if (hi == Cmp::equal) {
        iv.hi = a.hi;
        iv.hi_closed = a.hi_closed && b.hi_closed;
      } else {
        const Interval& src = hi == Cmp::less ? a : b;
        iv.hi = src.hi;
        iv.hi_closed = src.hi_closed;
      }
      out.push_back(std::move(iv));
    }
  }
  return Region(std::move(out));
}

std::optional<Point> Region::some_point_eventually_constant() const {
  for (const auto& iv : parts_) {
    if (iv.lo_closed && iv.lo.is_eventually_constant()) return iv.lo;
    if (auto w = iv.inner_cylinder()) return Point::eventually(*w, '0');
    if (iv.hi_closed && iv.hi.is_eventually_constant()) return iv.hi;
  }
  return std::nullopt;
}

std::optional<Point> Region::some_point_not_eventually_constant() const {
  for (const auto& iv : parts_) {
    if (iv.lo_closed && !iv.lo.is_eventually_constant()) return iv.lo;
    if (auto w = iv.inner_cylinder()) return Point(*w, "01");
    if (iv.hi_closed && !iv.hi.is_eventually_constant()) return iv.hi;
  }
  return std::nullopt;
}

std::optional<Point> Region::some_point() const {
  for (const auto& iv : parts_) {
    if (iv.lo_closed) return iv.lo;
    if (iv.hi_closed) return iv.hi;
    if (auto w = iv.inner_cylinder()) return Point(*w, "01");
  }
  return std::nullopt;
}

std::string Region::to_string() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clopen sets

ClopenSet::ClopenSet(std::vector<Word> words) {
  for (const auto& w : words) check_word(w);
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (;;) {
    // Drop words that extend another member.
    std::vector<Word> kept;
    for (const auto& w : words) {
      bool covered = std::any_of(words.begin(), words.end(),
                                 [&](const Word& u) { return u.size() < w.size() && is_prefix(u, w); });
      if (!covered) kept.push_back(w);
    }
    // Merge sibling pairs into their parent.
    std::set<Word> present(kept.begin(), kept.end());
    bool changed = false;
    std::set<Word> next;
    for (const auto& w : kept) {
      if (!w.empty()) {
        Word sib = w;
        sib.back() = flip(sib.back());
        if (present.count(sib)) {
          next.insert(w.substr(0, w.size() - 1));
          changed = true;
          continue;
        }
      }
      next.insert(w);
    }
    words.assign(next.begin(), next.end());
    if (!changed) break;
  }
  words_ = std::move(words);
}

bool ClopenSet::contains(const Point& p) const {
  return std::any_of(words_.begin(), words_.end(), [&](const Word& w) { return p.has_prefix(w); });
}

ClopenSet ClopenSet::unite(const ClopenSet& other) const {
  std::vector<Word> all = words_;
  all.insert(all.end(), other.words_.begin(), other.words_.end());
  return ClopenSet(std::move(all));
}

ClopenSet ClopenSet::intersect(const ClopenSet& other) const {
  std::vector<Word> out;
  for (const auto& u : words_)
    for (const auto& v : other.words_) {
      if (is_prefix(u, v))
        out.push_back(v);
      else if (is_prefix(v, u))
        out.push_back(u);
    }
  return ClopenSet(std::move(out));
}

namespace {

void complement_below(const std::vector<Word>& words, const Word& at, std::vector<Word>& out) {
  bool extends_below = false;
  for (const auto& w : words) {
    if (is_prefix(w, at)) return;
    if (is_prefix(at, w)) extends_below = true;
  }
  if (!extends_below) {
    out.push_back(at);
    return;
  }
  complement_below(words, at + "0", out);
  complement_below(words, at + "1", out);
}

}  // namespace

ClopenSet ClopenSet::complement() const {
  std::vector<Word> out;
  complement_below(words_, "", out);
  return ClopenSet(std::move(out));
}

Region ClopenSet::to_region() const {
  std::vector<Interval> parts;
  for (const auto& w : words_) parts.push_back(Interval::cylinder(w));
  return Region(std::move(parts));
}

}  // namespace dset
