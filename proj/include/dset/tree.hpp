#ifndef DSET_TREE_HPP
#define DSET_TREE_HPP

#include "dset/cantor.hpp"
#include "dset/ordinal.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dset {

using Node = std::vector<std::int64_t>;

std::string node_to_string(const Node& node);
bool is_node_prefix(const Node& prefix, const Node& node);  // non-strict

// A finite downward-closed set of integer sequences.
class FinTree {
 public:
  FinTree() = default;
  // Throws DomainError("not a tree") unless the nodes are downward closed.
  static FinTree from_nodes(const std::vector<Node>& nodes);
  // The downward closure of the given nodes.
  static FinTree closure_of(const std::vector<Node>& nodes);
  static FinTree chain(std::size_t k);  // {∅, (0), ..., (0^{k-1})}

  const std::set<Node>& nodes() const { return nodes_; }
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Node& n) const { return nodes_.count(n) != 0; }
  std::vector<Node> children(const Node& n) const;

  void add_with_prefixes(const Node& n);

  friend bool operator==(const FinTree& a, const FinTree& b) = default;

 private:
  std::set<Node> nodes_;
};

FinTree derivative(const FinTree& t);
// o(T): derivative steps until empty, computed through node heights.
Ordinal rank(const FinTree& t);
std::size_t rank_finite(const FinTree& t);

using MonotoneMap = std::map<Node, Node>;

// Complete search: returns a map iff a monotone map S -> T exists.
std::optional<MonotoneMap> find_monotone_map(const FinTree& s, const FinTree& t);
// Throws DomainError("map domain") / ("map range") when the map is not total on S into T.
bool verify_monotone(const MonotoneMap& m, const FinTree& s, const FinTree& t);

// ---------------------------------------------------------------------------
// Finitely presented trees.

// n ↦ a·n + b, where n is the child index of the innermost enclosing OmegaJoin
// (0 outside every OmegaJoin).
struct AffineLen {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t at(std::int64_t n) const { return a * n + b; }
  friend bool operator==(const AffineLen&, const AffineLen&) = default;
};

struct TreeSchema;
using SchemaPtr = std::shared_ptr<const TreeSchema>;

// Empty; Single; Chain(len) = {0^j : j < len}; Spine(len, below) = a chain of
// len nodes with `below` hung at 0^len; Join(children), child i under letter i;
// OmegaJoin(body), child n under letter n denoting body at n; FullBranch = 0^{<N}.
struct TreeSchema {
  enum class Kind { Empty, Single, Chain, Spine, Join, OmegaJoin, FullBranch };

  Kind kind = Kind::Empty;
  AffineLen length;
  std::vector<SchemaPtr> children;

  static SchemaPtr empty();
  static SchemaPtr single();
  static SchemaPtr chain(AffineLen len);
  static SchemaPtr chain(std::int64_t len) { return chain(AffineLen{0, len}); }
  static SchemaPtr spine(AffineLen len, SchemaPtr below);
  static SchemaPtr join(std::vector<SchemaPtr> children);
  static SchemaPtr omega_join(SchemaPtr body);
  static SchemaPtr full_branch();
};

bool is_wellfounded(const TreeSchema& t);
// Throws DomainError("not well-founded") if t contains FullBranch.
Ordinal schema_rank(const TreeSchema& t);
bool schema_contains(const TreeSchema& t, const Node& node);
bool schema_is_infinite(const TreeSchema& t);
// Nodes of length <= depth, OmegaJoin children restricted to letters < width.
FinTree truncate_schema(const TreeSchema& t, std::size_t depth, std::size_t width);

// A node of the given length on an infinite branch; always follows the first
// ill-founded child, so results for growing depth extend each other.
Node konig_branch(const TreeSchema& t, std::size_t depth);

// Infinite branches, each of the form p ⌢ 0^∞; at most `limit` prefixes are
// listed, `more` is set when further branches exist.
struct BranchList {
  std::vector<Node> prefixes;
  bool more = false;
};
BranchList enumerate_branches(const TreeSchema& t, std::size_t limit);
// For a schema with exactly one infinite branch: are infinitely many nodes off it?
bool off_branch_infinite(const TreeSchema& t);

// Nodes over N are coded as binary words: (n0, ..., nk-1) ↦ 1^{n0}0 ... 1^{nk-1}0.
// The coding preserves and reflects the prefix order.
Word node_code(const Node& node);
std::optional<Node> decode_node(const Word& w);
// The point coding the branch p ⌢ 0^∞.
Point branch_code(const Node& prefix);

// Visits every node whose code has length <= max_code_len.
void visit_coded_nodes(const TreeSchema& t, std::size_t max_code_len,
                       const std::function<void(const Node&)>& visit);

}  // namespace dset

#endif
