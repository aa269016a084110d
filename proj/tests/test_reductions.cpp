#include "dset/error.hpp"
#include "dset/reductions.hpp"

#include <doctest.h>

#include <random>

using namespace dset;

TEST_CASE("sibling words off a branch") {
  std::vector<Word> want0{"1", "01", "001", "0001"};
  std::vector<Word> got0;
  for (auto n : phi_map(Point()).take(4)) got0.push_back(h_inv(n));
  CHECK(got0 == want0);
  std::vector<Word> want1{"0", "10", "110"};
  std::vector<Word> got1;
  for (auto n : phi_map(Point("", "1")).take(3)) got1.push_back(h_inv(n));
  CHECK(got1 == want1);

  // Antichain and off-branch property.
  for (const auto& x : enumerate_points(5)) {
    const auto ws = phi_map(x).take(10);
    CHECK(h_inv(ws[0]).size() == 1);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const Word a = h_inv(ws[i]);
      CHECK_FALSE(x.has_prefix(a));
      for (std::size_t j = 0; j < ws.size(); ++j)
        if (i != j) CHECK_FALSE(is_prefix(a, h_inv(ws[j])));
    }
  }
}

TEST_CASE("H image") {
  CHECK(h_image(Point()).take(4) == std::vector<std::uint64_t>{8, 16, 32, 64});
  for (const auto& x : enumerate_points(5)) {
    const auto h = h_image(x).take(12);
    for (std::size_t k = 0; k < h.size(); ++k) {
      CHECK(h[k] % 4 == 0);
      if (k > 0) CHECK(h[k - 1] < h[k]);
    }
  }
  // H determines x.
  std::mt19937_64 gen(17);
  const auto pool = enumerate_points(7);
  for (int i = 0; i < 100; ++i) {
    const Point& x = pool[gen() % pool.size()];
    CHECK(branch_from_siblings(phi_map(x), 16) == x.restrict(16));
  }
}

TEST_CASE("restricted families") {
  const auto split = DenseSequence::split_cantor();
  const Point x("", "01");
  CHECK_THROWS_AS(restrict_family(split, PointSet::clopen(ClopenSet({"0"}))), DomainError);
  const auto away = restrict_family(split, PointSet::both(PointSet::clopen(ClopenSet({"1"})),
                                                          PointSet::not_eventually_constant()));
  CHECK_FALSE(decide_convergence(split, h_image(x)).converges);
  CHECK(decide_restricted(away, h_image(x)).converges);
  const auto nec = restrict_family(split, PointSet::not_eventually_constant());
  CHECK_FALSE(decide_restricted(nec, h_image(x)).converges);
}

TEST_CASE("verify the reduction") {
  const auto a = PointSet::both(PointSet::clopen(ClopenSet({"01"})), PointSet::not_eventually_constant());
  CHECK(verify_p1(Point("1", "01"), a));   // x outside A
  CHECK(verify_p1(Point("01", "10"), a));  // x inside A
  CHECK(verify_p1(Point("01", "1"), a));   // eventually constant
  for (const auto& x : enumerate_points(5)) CHECK(verify_p1(x, a));
}

TEST_CASE("gluing") {
  const auto nodes = DenseSequence::node_indicators();
  const auto antichain = TreeSchema::omega_join(TreeSchema::single());
  CHECK_FALSE(decide_convergence(nodes, psi_glue(TreeSchema::full_branch(), antichain)).converges);
  const bool base = decide_convergence(nodes, IndexSet::node_set(antichain)).converges;
  CHECK(decide_convergence(nodes, psi_glue(TreeSchema::chain(2), antichain)).converges == base);
  CHECK(decide_convergence(nodes, psi_glue(antichain, antichain)).converges == base);
  const auto wf = TreeSchema::omega_join(TreeSchema::chain(AffineLen{1, 1}));
  CHECK(decide_convergence(nodes, psi_glue(wf, antichain)).converges ==
        decide_convergence(nodes, IndexSet::unite({IndexSet::node_set(wf), IndexSet::node_set(antichain)})).converges);
  CHECK_THROWS_AS(psi_glue(wf, antichain, Psi{0, 3}), DomainError);
  CHECK_THROWS_AS(psi_glue(wf, TreeSchema::chain(3)), DomainError);
  CHECK_THROWS_AS(psi_glue(wf, TreeSchema::full_branch()), DomainError);
  const auto scaled = psi_glue(TreeSchema::chain(2), antichain, Psi{3, 1});
  for (auto n : scaled.take(10)) CHECK(n % 3 == 1);
}
