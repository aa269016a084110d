#ifndef DSET_RANK_HPP
#define DSET_RANK_HPP

#include "dset/cantor.hpp"
#include "dset/ordinal.hpp"
#include "dset/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dset {

// Countable compacta in Cantor space together with a finitely valued function
// on them. A node is an apex point carrying a value and a list of attachments;
// each attachment is an ω-sequence of copies converging to the apex.
//
// Placement is fixed: the node at word w has its apex at w1^∞ and its slot k
// occupies [w 1^k 0]. With m attachments, slot k holds copy k/m of attachment
// k mod m. The root sits at the empty word.

enum class Pattern { A1, A2, A3 };
std::string pattern_name(Pattern p);
Pattern parse_pattern(const std::string& s);

struct CompactNode;
using Compact = std::shared_ptr<const CompactNode>;  // nullptr: the empty set

// Copy n is the canonical rank example of rank base + ω^(exponent-1)·n + offset
// for `pattern`, derived `derived` times under the pair (da, db). The ranks
// increase to base + ω^exponent.
struct Ladder {
  Pattern pattern = Pattern::A1;
  Ordinal base;
  std::uint32_t exponent = 1;
  std::uint64_t offset = 1;
  std::uint64_t derived = 0;
  Rational da = 0, db = 0;

  Ordinal copy_rank(std::uint64_t n) const;
  Ordinal limit() const;
};

struct Attachment {
  enum class Kind { Cycle, Ladder };
  Kind kind = Kind::Cycle;
  std::vector<Compact> shapes;  // Cycle: copy n is shapes[n % size]; null entries are empty copies
  Ladder ladder;

  static Attachment cycle(std::vector<Compact> shapes);
  static Attachment of_ladder(Ladder l);
  Compact copy(std::uint64_t n) const;
};

struct CompactNode {
  Rational value;
  std::vector<Attachment> attachments;
};

Compact leaf(Rational value);
Compact apex(Rational value, std::vector<Attachment> attachments);

// Least ξ with F^(ξ) ∩ A = ∅, likewise for B, and α itself.
struct RankSummary {
  Ordinal alpha;
  Ordinal alpha_a;
  Ordinal alpha_b;
};

// All of these throw DomainError("bad pair") unless a < b.
RankSummary rank_summary(const Compact& k, const Rational& a, const Rational& b);
Ordinal alpha_on(const Compact& k, const Rational& a, const Rational& b);
Compact sep_derivative(const Compact& k, const Rational& a, const Rational& b);
// K, K', K'', ... up to the first empty set or max_steps entries.
std::vector<Compact> derivation_trace(const Compact& k, const Rational& a, const Rational& b,
                                      std::size_t max_steps);

// Pairs (a, b) exhausting the distinct splits of the value set of k.
std::vector<std::pair<Rational, Rational>> crossing_pairs(const Compact& k);
// Throws DomainError("no pairs") on an empty list.
Ordinal alpha_full(const Compact& k, const std::vector<std::pair<Rational, Rational>>& pairs);

// Points of the denotation are apexes; throws DomainError("not in compact").
bool in_compact(const Compact& k, const Point& x);
// Whether x survives ξ derivative steps inside K ∩ [cyl].
// Throws DomainError("not in compact") / ("not in cylinder").
bool restrict_ball(const Compact& k, const Rational& a, const Rational& b, const Word& cyl,
                   const Ordinal& xi, const Point& x);

struct RankExample {
  Compact compact;
  Rational a, b;
};
// Values 0, 1/2, 1 and pair (1/3, 2/3). ξ must be a successor below ω^ω;
// DomainError("not attainable on a compactum") for 0 and limits,
// DomainError("unsupported rank") beyond the generator.
RankExample build_rank_example(const Ordinal& xi, Pattern pattern);

// Finite instantiation. Each point carries the length of the prefix that
// defines its neighbourhood of declared limit points; leaves have none.
struct InstPoint {
  Point x;
  Rational value;
  std::size_t nbhd_len = 0;
  bool has_nbhd = false;
};
// Largest (attachments × cycle length) over the presentation: the number of
// trailing copies needed to see every shape near every apex.
std::size_t replication_need(const Compact& k);
// Keeps the first `depth` copies of every sequence. Throws
// DomainError("precision") on ladders or words longer than `precision`.
std::vector<InstPoint> instantiate(const Compact& k, std::size_t depth, std::size_t precision = 62);
// Iterates the set derivative on the finite instantiation; returns the step
// count. Throws DomainError("precision") if two points coincide.
std::uint64_t brute_force_alpha(const std::vector<InstPoint>& points, const Rational& a, const Rational& b);

// K itself, then (when α = ξ+1 with ξ a successor) a sub-compactum, located
// by its cylinder, whose rank is exactly ξ.
struct Attainment {
  Word location;
  Compact sub;
  Ordinal alpha;
};
std::vector<Attainment> attainment_witness(const Compact& k, const Rational& a, const Rational& b);

// Disjoint union of countably many components, component i living in [1^i 0].
// Components past the listed ones all equal `tail`.
struct ComponentSpace {
  std::vector<Compact> components;
  Compact tail;

  const Compact& component(std::size_t i) const;
};
// α over the space: every compactum meets finitely many components, so this is
// the largest component rank.
Ordinal alpha_space(const ComponentSpace& s, const Rational& a, const Rational& b);
Ordinal alpha_on_components(const ComponentSpace& s, const std::vector<std::size_t>& which,
                            const Rational& a, const Rational& b);

std::string compact_to_string(const Compact& k);

}  // namespace dset

#endif
