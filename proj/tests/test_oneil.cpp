#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rieszlab/generators.hpp"
#include "rieszlab/oneil.hpp"

using namespace rieszlab;

namespace {

GridFunction delta_like(const Domain& dom, std::int64_t cell) {
  ArrayXd v = ArrayXd::Zero(dom.cell_count());
  v[cell] = 1.0 / dom.cell_measure();
  return GridFunction(dom, v);
}

}  // namespace

TEST_CASE("convolution with a unit point mass shifts the other factor") {
  Domain dom = Domain::unit_box(2, 16);
  GridFunction g = oracles::random_nonnegative(dom, 5);
  const std::int64_t j0 = dom.flat_index({3, 4, 0});
  GridFunction h = convolve(delta_like(dom, j0), g);
  // h[j0 + m] = g[m] exactly for the lumped-mass convolution.
  for (std::int64_t m = 0; m < dom.cell_count(); ++m) {
    const auto mi = dom.multi_index(m);
    const auto ji = dom.multi_index(j0);
    const std::int64_t k =
        h.domain().flat_index({mi[0] + ji[0], mi[1] + ji[1], 0});
    CHECK(h.value(k) == doctest::Approx(g.value(m)).epsilon(1e-12));
  }
}

TEST_CASE("convolution mass factorizes for nonnegative inputs") {
  Domain dom = Domain::unit_box(2, 12);
  GridFunction f = oracles::random_nonnegative(dom, 8);
  GridFunction g = oracles::random_nonnegative(dom, 9);
  GridFunction h = convolve(f, g);
  CHECK(h.l1_norm() == doctest::Approx(f.l1_norm() * g.l1_norm()).epsilon(1e-10));
  CHECK(h.l1_norm() == doctest::Approx(oracles::convolution_l1_direct(f, g)).epsilon(1e-10));
}

TEST_CASE("convolution of zero is zero; grids must match") {
  Domain dom = Domain::unit_box(2, 8);
  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  GridFunction g = oracles::random_nonnegative(dom, 4);
  CHECK(convolve(zero, g).max_abs() == 0.0);
  Domain other = Domain::unit_box(2, 9);
  GridFunction go(other, ArrayXd::Zero(other.cell_count()));
  CHECK_THROWS_AS(convolve(g, go), std::invalid_argument);
}

TEST_CASE("product instances satisfy the operator axioms on the unit box") {
  Domain dom = Domain::unit_box(2, 12);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    GridFunction f = oracles::random_function(dom, seed);
    GridFunction g = oracles::random_function(dom, seed + 100);
    for (ProductKind kind : {ProductKind::pointwise, ProductKind::convolution}) {
      const ProductInstance inst = make_product(kind, f, g);
      const double s = 1.0 + 1e-10;
      CHECK(inst.h.max_abs() <= f.max_abs() * g.max_abs() * s);
      CHECK(inst.h.l1_norm() <= f.l1_norm() * g.max_abs() * s);
      CHECK(inst.h.l1_norm() <= f.max_abs() * g.l1_norm() * s);
    }
  }
}

TEST_CASE("lemma 1.5: intersecting indicators, constant factor, zero") {
  Domain dom = Domain::unit_box(2, 24);
  GridFunction chiE = generate(BallIndicator{{0.4, 0.5, 0}, 0.3, 1.0}, dom);
  GridFunction chiF = generate(BallIndicator{{0.6, 0.5, 0}, 0.3, 1.0}, dom);
  const auto inter = verify_lemma15(make_product(ProductKind::pointwise, chiE, chiF));
  CHECK(inter.holds);
  CHECK(inter.worst_ratio <= 1.0 + 1e-9);

  GridFunction ones(dom, ArrayXd::Ones(dom.cell_count()));
  GridFunction f = oracles::random_function(dom, 12);
  CHECK(verify_lemma15(make_product(ProductKind::pointwise, f, ones)).holds);

  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const auto triv = verify_lemma15(make_product(ProductKind::pointwise, zero, f));
  CHECK(triv.holds);
  CHECK(triv.worst_ratio == 0.0);
}

TEST_CASE("lemma 1.5 on random pairs for both product kinds") {
  Domain dom = Domain::unit_box(2, 12);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GridFunction f = oracles::random_function(dom, 1000 + seed);
    GridFunction g = oracles::random_function(dom, 2000 + seed);
    for (ProductKind kind : {ProductKind::pointwise, ProductKind::convolution})
      CHECK(verify_lemma15(make_product(kind, f, g)).holds);
  }
}

TEST_CASE("lemma 1.4: bounded compactly supported factor") {
  Domain dom = Domain::unit_box(2, 16);
  GridFunction g = oracles::random_function(dom, 77);
  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.3, 0.8}, dom);
  CHECK(verify_lemma14(chi, g).holds);

  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const auto triv = verify_lemma14(zero, g);
  CHECK(triv.holds);
  CHECK(triv.worst_ratio == 0.0);
}

TEST_CASE("lorentz holder: constant factor and squared indicators") {
  Domain dom = Domain::unit_box(2, 16);
  GridFunction f = oracles::random_function(dom, 30);
  GridFunction halfc(dom, ArrayXd::Constant(dom.cell_count(), 0.5));
  CHECK(verify_holder(f, halfc, 3.0, 2.0, 3.0, 2.0).holds);

  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.25, 1.0}, dom);
  // chi * chi with p1 = p2 = 2p, q1 = q2 = 2q.
  const auto rep = verify_holder(chi, chi, 4.0, 4.0, 4.0, 4.0);
  CHECK(rep.holds);

  CHECK_THROWS_AS(verify_holder(f, f, 2.0, 2.0, 2.0, 2.0), std::domain_error);
}

TEST_CASE("L1 holder endpoint") {
  Domain dom = Domain::unit_box(2, 16);
  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.25, 1.3}, dom);
  CHECK(verify_holder_L1(chi, chi, 2.0, 2.0, 2.0, 2.0).holds);

  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const auto triv = verify_holder_L1(zero, zero, 2.0, 2.0, 2.0, 2.0);
  CHECK(triv.holds);
  CHECK(triv.worst_ratio == 0.0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GridFunction f = oracles::random_function(dom, 3000 + seed);
    GridFunction g = oracles::random_function(dom, 4000 + seed);
    CHECK(verify_holder_L1(f, g, 2.0, 2.0, 2.0, 2.0).holds);
  }
  CHECK_THROWS_AS(verify_holder_L1(chi, chi, 2.0, 2.0, 3.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(verify_holder_L1(chi, chi, 2.0, 4.0, 2.0, 4.0), std::domain_error);
}
