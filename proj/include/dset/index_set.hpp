#ifndef DSET_INDEX_SET_HPP
#define DSET_INDEX_SET_HPP

#include "dset/cantor.hpp"
#include "dset/tree.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dset {

// Which siblings of a branch to keep: all of them, or only those hanging off
// positions where the branch has the given bit.
enum class Side { all, zero, one };

std::string side_name(Side s);
Side parse_side(const std::string& text);

// A finitely presented subset of N.
//
//   Finite(values)            the listed naturals
//   All                       N
//   NodeSet(T)                { h(code(t)) : t ∈ T }
//   BranchSiblings(x, side)   { h(x|k ⌢ (1 - x(k))) : k ∈ N, x(k) matches side }
//   BranchPrefixes(x)         { h(x|k) : k ∈ N }
//   Affine(L, a, b)           { a·n + b : n ∈ L }, a >= 1
//   Union(L1, ..., Lk)
//   Drop(L, k)                L without its first k elements
//   AtLeast(L, v)             { n ∈ L : n >= v }
//   Intersect(L, M), Difference(L, M)
//
// Intersect and Difference carry a flag recording that the producer has
// proved the result infinite; otherwise their infiniteness is unknown.
class IndexSet {
 public:
  enum class Kind { Finite, All, NodeSet, BranchSiblings, BranchPrefixes, Affine, Union, Drop, AtLeast, Intersect, Difference };

  static IndexSet finite(std::vector<std::uint64_t> values);
  static IndexSet all();
  static IndexSet node_set(SchemaPtr schema);
  static IndexSet branch_siblings(Point x, Side side = Side::all);
  static IndexSet branch_prefixes(Point x);
  static IndexSet affine(IndexSet inner, std::uint64_t a, std::uint64_t b);
  static IndexSet unite(std::vector<IndexSet> parts);
  static IndexSet drop(IndexSet inner, std::uint64_t k);
  static IndexSet at_least(IndexSet inner, std::uint64_t v);
  static IndexSet intersect(IndexSet a, IndexSet b, bool certified_infinite = false);
  static IndexSet difference(IndexSet a, IndexSet b, bool certified_infinite = false);

  Kind kind() const;
  const std::vector<std::uint64_t>& values() const;  // Finite
  const SchemaPtr& schema() const;                   // NodeSet
  const Point& point() const;                        // BranchSiblings, BranchPrefixes
  Side side() const;                                 // BranchSiblings
  std::uint64_t a() const;                           // Affine
  std::uint64_t b() const;                           // Affine
  std::uint64_t count() const;                       // Drop: k, AtLeast: v
  const std::vector<IndexSet>& operands() const;     // Affine/Drop/AtLeast: 1, Union: k, Intersect/Difference: 2
  bool certified() const;                            // Intersect, Difference

  bool contains(std::uint64_t n) const;
  // true/false when decided by structure, nullopt when unknown.
  std::optional<bool> is_infinite() const;
  // All members < bound, ascending.
  std::vector<std::uint64_t> elements_below(std::uint64_t bound) const;
  // The first k members (fewer only for finite sets).
  std::vector<std::uint64_t> take(std::size_t k) const;

  std::string to_string() const;

 private:
  struct Data;
  explicit IndexSet(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  bool sparse() const;
  std::shared_ptr<const Data> d_;
};

// k-th element (0-based) in increasing order; throws DomainError("exhausted").
std::uint64_t index_kth(const IndexSet& l, std::size_t k);

}  // namespace dset

#endif
