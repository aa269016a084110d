#include "dset/reductions.hpp"

#include "dset/error.hpp"

namespace dset {

IndexSet phi_map(const Point& x) { return IndexSet::branch_siblings(x); }

IndexSet h_image(const Point& x) { return IndexSet::affine(phi_map(x), 4, 0); }

Word branch_from_siblings(const IndexSet& phi, std::size_t bits) {
  // The k-th sibling has length k + 1 and agrees with x except at its last bit.
  Word out;
  for (std::uint64_t n : phi.take(bits)) {
    Word t = h_inv(n);
    if (t.size() != out.size() + 1 || !is_prefix(out, t))
      throw DomainError("not a sibling set", "word " + t + " does not continue " + out);
    out.push_back(flip(t.back()));
  }
  return out;
}

RestrictedFamily restrict_family(const DenseSequence& seq, const PointSet& domain) {
  if (domain.admissibility() == Admissibility::refuted)
    throw DomainError("not admissible", domain.to_string() + " contains an eventually constant point");
  return {seq, domain};
}

Verdict decide_restricted(const RestrictedFamily& fam, const IndexSet& l) {
  return decide_convergence(fam.seq, l, fam.domain);
}

bool verify_p1(const Point& x, const PointSet& a) {
  const RestrictedFamily fam = restrict_family(DenseSequence::split_cantor(), a);
  return !a.contains(x) == decide_restricted(fam, h_image(x)).converges;
}

IndexSet psi_glue(SchemaPtr t, SchemaPtr t0, const Psi& psi) {
  if (psi.a == 0) throw DomainError("not injective", "psi must have a >= 1");
  if (!t || !t0) throw DomainError("bad base tree", "missing schema");
  if (!is_wellfounded(*t0) || !schema_is_infinite(*t0))
    throw DomainError("bad base tree", "T0 must be well-founded and infinite");
  IndexSet both = IndexSet::unite({IndexSet::node_set(std::move(t)), IndexSet::node_set(std::move(t0))});
  if (psi.a == 1 && psi.b == 0) return both;
  return IndexSet::affine(both, psi.a, psi.b);
}

}  // namespace dset
