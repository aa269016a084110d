#include "dset/catalog.hpp"

#include "dset/error.hpp"

namespace dset {

SymbolicFn SymbolicFn::node_ind(Word s) {
  check_word(s);
  return {Kind::NodeInd, {}, std::move(s), {}};
}

std::string SymbolicFn::to_string() const {
  switch (kind) {
    case Kind::PlusStep:
      return "PlusStep(" + point.to_string() + ")";
    case Kind::MinusStep:
      return "MinusStep(" + point.to_string() + ")";
    case Kind::NodeInd:
      return "NodeInd(" + word + ")";
    case Kind::PointInd:
      return "PointInd(" + point.to_string() + ")";
    case Kind::Const:
      return "Const(" + format_rational(value) + ")";
    case Kind::Zero:
      return "Zero";
  }
  return "?";
}

Rational eval(const SymbolicFn& f, const Point& y) {
  switch (f.kind) {
    case SymbolicFn::Kind::PlusStep:
      return lex_compare(f.point, y) != Cmp::greater ? 1 : 0;
    case SymbolicFn::Kind::MinusStep:
      return lex_compare(f.point, y) == Cmp::less ? 1 : 0;
    case SymbolicFn::Kind::NodeInd:
      return y.has_prefix(f.word) ? 1 : 0;
    case SymbolicFn::Kind::PointInd:
      return f.point == y ? 1 : 0;
    case SymbolicFn::Kind::Const:
      return f.value;
    case SymbolicFn::Kind::Zero:
      return 0;
  }
  return 0;
}

std::vector<std::pair<Region, Rational>> level_sets(const SymbolicFn& f) {
  Region one;
  switch (f.kind) {
    case SymbolicFn::Kind::PlusStep:
      one = Region::at_or_above(f.point);
      break;
    case SymbolicFn::Kind::MinusStep:
      one = Region::above(f.point);
      break;
    case SymbolicFn::Kind::NodeInd:
      one = Region::cylinder(f.word);
      break;
    case SymbolicFn::Kind::PointInd:
      one = Region::point(f.point);
      break;
    case SymbolicFn::Kind::Const:
      return {{Region::whole(), f.value}};
    case SymbolicFn::Kind::Zero:
      return {{Region::whole(), Rational(0)}};
  }
  return {{one, Rational(1)}, {one.complement(), Rational(0)}};
}

Region diff_region(const SymbolicFn& f, const SymbolicFn& g, const Rational& theta) {
  if (theta < 0) throw DomainError("bad threshold", "theta must be >= 0");
  Region out;
  for (const auto& [rf, vf] : level_sets(f))
    for (const auto& [rg, vg] : level_sets(g))
      if (abs(vf - vg) > theta) out = out.unite(rf.intersect(rg));
  return out;
}

bool extensionally_equal(const SymbolicFn& f, const SymbolicFn& g) {
  return diff_region(f, g, Rational(0)).is_empty();
}

bool region_covers(const Word& cyl, const std::vector<Region>& regions) {
  Region all;
  for (const auto& r : regions) all = all.unite(r);
  return all.contains_cylinder(cyl);
}

DenseSequence DenseSequence::table_with_tail(std::vector<SymbolicFn> table, DenseSequence tail) {
  return {Kind::FiniteTableWithTail, std::move(table), std::make_shared<const DenseSequence>(std::move(tail))};
}

SymbolicFn DenseSequence::term(std::uint64_t n) const {
  switch (kind) {
    case Kind::SplitCantorCanonical: {
      const Word s = h_inv(n / 4);
      const std::uint64_t r = n % 4;
      Point x = Point::eventually(s, r % 2 == 0 ? '0' : '1');
      return r < 2 ? SymbolicFn::plus_step(std::move(x)) : SymbolicFn::minus_step(std::move(x));
    }
    case Kind::NodeIndicatorsByH:
      return SymbolicFn::node_ind(h_inv(n));
    case Kind::FiniteTableWithTail:
      if (n < table.size()) return table[static_cast<std::size_t>(n)];
      return tail->term(n);
  }
  return SymbolicFn::zero();
}

const DenseSequence& DenseSequence::base() const {
  return kind == Kind::FiniteTableWithTail ? tail->base() : *this;
}

std::uint64_t DenseSequence::base_offset() const {
  if (kind != Kind::FiniteTableWithTail) return 0;
  return std::max<std::uint64_t>(table.size(), tail->base_offset());
}

std::string DenseSequence::name() const {
  switch (kind) {
    case Kind::SplitCantorCanonical:
      return "SplitCantorCanonical";
    case Kind::NodeIndicatorsByH:
      return "NodeIndicatorsByH";
    case Kind::FiniteTableWithTail:
      return "FiniteTableWithTail";
  }
  return "?";
}

}  // namespace dset
