#ifndef DSET_CANTOR_HPP
#define DSET_CANTOR_HPP

#include "dset/ordinal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dset {

// Finite binary words are ASCII strings over {'0','1'}.
using Word = std::string;

void check_word(const Word& w);
bool is_prefix(const Word& prefix, const Word& w);
inline char flip(char bit) { return bit == '0' ? '1' : '0'; }

// Length-lex enumeration of 2^{<N}: h(s) = 2^{|s|} - 1 + (s read in binary).
// Words are limited to 62 bits so every index fits in 63 bits.
std::uint64_t h_enum(const Word& s);
Word h_inv(std::uint64_t n);
// Smallest index of a word of length `len`.
std::uint64_t h_level_start(std::size_t len);

// An eventually periodic point prefix ⌢ period^∞ of Cantor space, always held
// in canonical form (minimal period, prefix tail folded into the period), so
// equality of denotations is equality of fields.
class Point {
 public:
  Point();  // 0^∞
  Point(Word prefix, Word period);

  static Point eventually(const Word& prefix, char bit) { return Point(prefix, Word(1, bit)); }

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }

  char bit(std::size_t i) const;
  Word restrict(std::size_t n) const;  // x|n
  bool has_prefix(const Word& w) const;
  bool is_eventually_constant() const { return period_.size() == 1; }
  std::size_t description_length() const { return prefix_.size() + period_.size(); }

  // Immediate neighbours in the lexicographic order: u01^∞ <-> u10^∞.
  std::optional<Point> lex_successor() const;
  std::optional<Point> lex_predecessor() const;

  // "prefix(period)", e.g. "01(10)"; parse accepts the same form.
  std::string to_string() const;
  static Point parse(const std::string& text);

  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  Word prefix_;
  Word period_;
};

Cmp lex_compare(const Point& x, const Point& y);
inline bool lex_less(const Point& x, const Point& y) { return lex_compare(x, y) == Cmp::less; }
// Index of the first bit where x and y differ; x != y required.
std::size_t first_difference(const Point& x, const Point& y);

// Every canonical point with |prefix| + |period| <= max_len, in a fixed order.
std::vector<Point> enumerate_points(std::size_t max_len);

// A lexicographic interval with eventually periodic endpoints.
struct Interval {
  Point lo;
  bool lo_closed = true;
  Point hi;
  bool hi_closed = true;

  static Interval closed(Point lo, Point hi) { return {std::move(lo), true, std::move(hi), true}; }
  static Interval single(const Point& p) { return {p, true, p, true}; }
  static Interval cylinder(const Word& w);
  static Interval whole();

  bool contains(const Point& p) const;
  bool is_empty() const;
  bool is_single_point() const { return lo_closed && hi_closed && lo == hi; }
  // A word w with [w] inside the open part (lo, hi), if there is one.
  std::optional<Word> inner_cylinder() const;
  std::string to_string() const;

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

// A finite union of intervals kept sorted, disjoint and merged. Open
// endpoints that have an immediate neighbour are closed onto it, so two
// regions with the same points have the same representation.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Interval> parts);
  static Region whole() { return Region({Interval::whole()}); }
  static Region cylinder(const Word& w) { return Region({Interval::cylinder(w)}); }
  static Region point(const Point& p) { return Region({Interval::single(p)}); }
  // Half lines {y : y >= x} (closed) or {y : y > x} (open).
  static Region at_or_above(const Point& x);
  static Region above(const Point& x);

  const std::vector<Interval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(const Point& p) const;
  bool contains_cylinder(const Word& w) const;
  bool meets_cylinder(const Word& w) const;

  Region complement() const;
  Region unite(const Region& other) const;
  Region intersect(const Region& other) const;
  Region minus(const Region& other) const { return intersect(other.complement()); }
  bool subset_of(const Region& other) const { return minus(other).is_empty(); }

  // Some member point that is (not) eventually constant, when one exists.
  std::optional<Point> some_point_eventually_constant() const;
  std::optional<Point> some_point_not_eventually_constant() const;
  std::optional<Point> some_point() const;

  std::string to_string() const;
  friend bool operator==(const Region& a, const Region& b) = default;

 private:
  std::vector<Interval> parts_;
};

// Clopen set as a canonical antichain of words (union of their cylinders).
class ClopenSet {
 public:
  ClopenSet() = default;
  explicit ClopenSet(std::vector<Word> words);
  static ClopenSet whole() { return ClopenSet({Word()}); }
  static ClopenSet cylinder(const Word& w) { return ClopenSet({w}); }

  const std::vector<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool contains(const Point& p) const;

  ClopenSet unite(const ClopenSet& other) const;
  ClopenSet intersect(const ClopenSet& other) const;
  ClopenSet complement() const;
  bool subset_of(const ClopenSet& other) const { return intersect(other.complement()).is_empty(); }

  Region to_region() const;
  friend bool operator==(const ClopenSet& a, const ClopenSet& b) = default;

 private:
  std::vector<Word> words_;
};

}  // namespace dset

#endif
