#ifndef DSET_REDUCTIONS_HPP
#define DSET_REDUCTIONS_HPP

#include "dset/catalog.hpp"
#include "dset/convergence.hpp"
#include "dset/index_set.hpp"
#include "dset/point_set.hpp"
#include "dset/tree.hpp"

#include <cstdint>

namespace dset {

// Φ(x) = { x|k ⌢ (x(k)+1 mod 2) : k ∈ N }, the words hanging off the branch x,
// as a set of h-indices.
IndexSet phi_map(const Point& x);
// H(x) = { 4h(t) : t ∈ Φ(x) }: the PlusStep terms of the split family placed
// just beside x.
IndexSet h_image(const Point& x);
// Recovers x from the first `bits` words of Φ(x).
Word branch_from_siblings(const IndexSet& phi, std::size_t bits);

// A dense family whose convergence is only asked on the points of `domain`.
struct RestrictedFamily {
  DenseSequence seq;
  PointSet domain;
};
// Throws DomainError("not admissible") when the domain contains an eventually
// constant point.
RestrictedFamily restrict_family(const DenseSequence& seq, const PointSet& domain);
Verdict decide_restricted(const RestrictedFamily& fam, const IndexSet& l);

// [x ∉ A] == [H(x) is a convergent subsequence of the split family on A].
// A false return means the reduction failed on this input.
bool verify_p1(const Point& x, const PointSet& a);

// An injective coding of finite sequences: ψ(t) = a·h(code(t)) + b.
struct Psi {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
};
// Ψ(T) = { ψ(t) : t ∈ T ∪ T0 }. Throws DomainError("not injective") when a = 0
// and DomainError("bad base tree") unless T0 is well-founded and infinite.
IndexSet psi_glue(SchemaPtr t, SchemaPtr t0, const Psi& psi = {});

}  // namespace dset

#endif
