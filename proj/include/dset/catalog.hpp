#ifndef DSET_CATALOG_HPP
#define DSET_CATALOG_HPP

#include "dset/cantor.hpp"
#include "dset/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dset {

// Step functions on Cantor space with finitely many values.
//   PlusStep(x)  = 1 on {y : x <= y}     MinusStep(x) = 1 on {y : x < y}
//   NodeInd(s)   = 1 on [s]              PointInd(x)  = 1 at x only
//   Const(q), Zero
struct SymbolicFn {
  enum class Kind { PlusStep, MinusStep, NodeInd, PointInd, Const, Zero };

  Kind kind = Kind::Zero;
  Point point;     // PlusStep, MinusStep, PointInd
  Word word;       // NodeInd
  Rational value;  // Const

  static SymbolicFn plus_step(Point x) { return {Kind::PlusStep, std::move(x), {}, {}}; }
  static SymbolicFn minus_step(Point x) { return {Kind::MinusStep, std::move(x), {}, {}}; }
  static SymbolicFn node_ind(Word s);
  static SymbolicFn point_ind(Point x) { return {Kind::PointInd, std::move(x), {}, {}}; }
  static SymbolicFn constant(Rational q) { return {Kind::Const, {}, {}, q}; }
  static SymbolicFn zero() { return {}; }

  bool is_continuous() const { return kind == Kind::Zero || kind == Kind::Const || kind == Kind::NodeInd; }
  std::string to_string() const;

  friend bool operator==(const SymbolicFn&, const SymbolicFn&) = default;
};

Rational eval(const SymbolicFn& f, const Point& y);
// Partition of the space into regions on which f is constant.
std::vector<std::pair<Region, Rational>> level_sets(const SymbolicFn& f);
// {z : |f(z) - g(z)| > theta}, exactly.
Region diff_region(const SymbolicFn& f, const SymbolicFn& g, const Rational& theta);
// Same function on the whole space.
bool extensionally_equal(const SymbolicFn& f, const SymbolicFn& g);
// [cyl] ⊆ union of the regions.
bool region_covers(const Word& cyl, const std::vector<Region>& regions);

// A total rule n ↦ f_n.
//   SplitCantorCanonical: f_{4m+r} for s = h_inv(m) is PlusStep(s0^∞),
//     PlusStep(s1^∞), MinusStep(s0^∞), MinusStep(s1^∞) for r = 0, 1, 2, 3.
//   NodeIndicatorsByH:    f_n = NodeInd(h_inv(n)).
//   FiniteTableWithTail:  f_n = table[n] below the table length, tail(n) after.
struct DenseSequence {
  enum class Kind { SplitCantorCanonical, NodeIndicatorsByH, FiniteTableWithTail };

  Kind kind = Kind::NodeIndicatorsByH;
  std::vector<SymbolicFn> table;
  std::shared_ptr<const DenseSequence> tail;

  static DenseSequence split_cantor() { return {Kind::SplitCantorCanonical, {}, nullptr}; }
  static DenseSequence node_indicators() { return {Kind::NodeIndicatorsByH, {}, nullptr}; }
  static DenseSequence table_with_tail(std::vector<SymbolicFn> table, DenseSequence tail);

  SymbolicFn term(std::uint64_t n) const;
  // The catalog rule that produces all but finitely many terms, and the index
  // from which it does so.
  const DenseSequence& base() const;
  std::uint64_t base_offset() const;
  std::string name() const;
};

}  // namespace dset

#endif
