#ifndef DSET_CONVERGENCE_HPP
#define DSET_CONVERGENCE_HPP

#include "dset/catalog.hpp"
#include "dset/index_set.hpp"
#include "dset/point_set.hpp"
#include "dset/tree.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dset {

// An infinite subset of L along which the subsequence converges to `limit`.
// `exact_at(z)` returns an infinite subset of the strand on which every term
// already takes the value limit(z) at z.
struct Strand {
  IndexSet set;
  SymbolicFn limit;
  std::function<IndexSet(const Point&)> exact_at;
};

// Strands covering L up to finitely many indices when `complete`; otherwise
// only some correct strands of L.
struct StrandCover {
  std::vector<Strand> strands;
  bool complete = true;
};

// Throws DomainError("undecidable presentation") outside the supported grammar.
StrandCover strand_cover(const DenseSequence& seq, const IndexSet& l, const PointSet& domain);

struct Verdict {
  bool converges = false;
  SymbolicFn limit;  // converges
  // Divergence data: at `witness`, every term indexed by sub_lo equals lo_value
  // and every term indexed by sub_hi equals hi_value, with hi - lo = 2 theta.
  std::optional<Point> witness;
  std::optional<IndexSet> sub_lo;
  std::optional<IndexSet> sub_hi;
  Rational lo_value;
  Rational hi_value;
  Rational theta;
  std::size_t strand_count = 0;
};

Verdict decide_convergence(const DenseSequence& seq, const IndexSet& l,
                           const PointSet& domain = PointSet::everything());
bool decide_convergence_to(const DenseSequence& seq, const IndexSet& l, const SymbolicFn& f,
                           const PointSet& domain = PointSet::everything());
// An infinite L ⊆ M along which the sequence converges.
IndexSet refine_to_convergent(const DenseSequence& seq, const IndexSet& m,
                              const PointSet& domain = PointSet::everything());

// Finite sampling check independent of the strand analysis: takes the first
// `depth` members of L and every domain point of description length <=
// point_len, and calls the subsequence convergent when the values on the
// second half of the window are constant at every sampled point.
bool sampling_oracle_converges(const DenseSequence& seq, const IndexSet& l, const PointSet& domain,
                               std::size_t depth = 50, std::size_t point_len = 6);

// Tree on 2 × N (letter s + 2w) unfolding the characteristic functions of the
// given codes paired with w = 0^∞, cut at depth D. A node t of length k is
// labelled n_t = max{n < k : s(n) = 1}, or 0 if there is none.
struct LabeledTree {
  FinTree tree;
  std::map<Node, std::uint64_t> label;
};
LabeledTree tree_representation(const DenseSequence& seq, const std::vector<IndexSet>& codes, std::size_t depth);

}  // namespace dset

#endif
