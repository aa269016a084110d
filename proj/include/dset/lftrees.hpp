#ifndef DSET_LFTREES_HPP
#define DSET_LFTREES_HPP

#include "dset/catalog.hpp"
#include "dset/convergence.hpp"
#include "dset/index_set.hpp"
#include "dset/tree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dset {

// Balls are cylinders: B_l = [h_inv(l)], of diameter 2^-|h_inv(l)|.
inline Word ball_word(std::uint64_t l) { return h_inv(l); }
inline std::uint64_t ball_index(const Word& w) { return h_enum(w); }

// Nested balls with diam(B_{l_i}) <= 1/(i+1).
bool is_acceptable(const std::vector<std::uint64_t>& w);

// A finite non-empty set of naturals, kept sorted. F < G iff max F < min G.
using FinBlock = std::vector<std::uint64_t>;
bool block_less(const FinBlock& f, const FinBlock& g);

// A node (s, t, w) of T^d_L, or (s, w) of S^d_L with t left empty.
struct LfNode {
  std::vector<std::uint64_t> s;
  std::vector<FinBlock> t;
  std::vector<std::uint64_t> w;

  std::size_t size() const { return s.size(); }
  friend bool operator==(const LfNode&, const LfNode&) = default;
};

enum class TreeKind { T, S };
std::string tree_kind_name(TreeKind k);
TreeKind parse_tree_kind(const std::string& s);

// 1/(d+1)
Rational separation_threshold(std::uint64_t d);

// Structural defects (length mismatch, non-increasing s, empty or unordered
// blocks) throw DomainError("malformed node"); a node that is well formed but
// uses indices outside L or a non-acceptable w is simply not a member.
bool tdl_member(const DenseSequence& seq, const IndexSet& l, std::uint64_t d, const LfNode& node);
bool sdl_member(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f, std::uint64_t d,
                const LfNode& node);
// Node of the glued tree: s = d⌢s', t = {d}⌢t', w = d⌢w'.
bool glued_member(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                  const LfNode& node);

// Finite window onto T^d_L or S^d_L.
struct Caps {
  std::size_t n_l = 16;         // indices from the first n_l members of L
  std::size_t ball_len = 8;     // balls [u] with |u| <= ball_len
  std::size_t depth = 5;        // node length
  std::size_t block_max = 2;    // block universe: subsets of size <= block_max
  std::size_t max_nodes = 200000;
};

// Tree letters. With p the position of n among the first n_l members of L and
// mask the block as a bit set over positions:
//   T: ((p << n_l) | mask) << (ball_len + 1) | l      S: (p << (ball_len + 1)) | l
struct TruncatedTree {
  TreeKind kind = TreeKind::T;
  Caps caps;
  std::vector<std::uint64_t> elements;  // the first n_l members of L
  FinTree tree;

  // Throws DomainError("caps") when the node leaves the window.
  Node encode(const LfNode& node) const;
  LfNode decode(const Node& node) const;
};

// Throws DomainError("caps") when the window holds more than caps.max_nodes
// nodes or the caps exceed the letter coding (n_l <= 24, ball_len <= 20).
TruncatedTree truncate_tree(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                            std::uint64_t d, const Caps& caps);
// Glued window: the root, each (d) for d in ds, and under it the letters of
// the depth-(caps.depth - 1) window onto the d-th tree.
FinTree truncate_glued(TreeKind kind, const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                       const std::vector<std::uint64_t>& ds, const Caps& caps);

// An infinite branch of T^d_L for divergent L: s from the low subsequence,
// singleton blocks from the high one, balls [x|j] shrinking to the witness x.
class BranchWitness {
 public:
  // Throws DomainError("convergent") when L converges and DomainError("gap")
  // when the oscillation at the witness is at most 1/(d+1).
  BranchWitness(const DenseSequence& seq, const IndexSet& l, std::uint64_t d);

  // The length-k node; nodes for growing k extend each other.
  LfNode node(std::size_t k) const;
  const Point& point() const { return x_; }
  std::uint64_t d() const { return d_; }

 private:
  DenseSequence seq_;
  std::uint64_t d_;
  Point x_;
  IndexSet lo_;
  IndexSet hi_;
};

// The monotone map from the window onto S^d_L into the window onto T^d_L:
// M(s, w) = (s, Φ(s, w), w), where Φ extends the parent's blocks by one block
// above all earlier ones that covers the new ball.
struct MonotoneWitness {
  TruncatedTree s_tree;
  TruncatedTree t_tree;
  MonotoneMap map;
};
// Throws DomainError("not continuous") unless f is Zero, Const or NodeInd,
// DomainError("not convergent") unless L converges to f, and
// DomainError("caps") when a block leaves the window.
MonotoneWitness newp3_monotone(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f, std::uint64_t d,
                               const Caps& caps);

std::string lfnode_to_string(const LfNode& n);

}  // namespace dset

#endif
