#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rieszlab/generators.hpp"
#include "rieszlab/potentials.hpp"
#include "rieszlab/special.hpp"

#include <numbers>

using namespace rieszlab;

TEST_CASE("riesz normalization at N = 2, alpha = 1 is 2 pi") {
  const RieszParams rp(2, 1.0);
  CHECK(rp.gamma_alpha == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
  CHECK_THROWS_AS(RieszParams(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RieszParams(2, 2.0), std::invalid_argument);
}

TEST_CASE("potential of the unit-ball indicator at the origin") {
  // I_1 chi_{B(0,1)}(0) = 1 in the plane; grid value within 1% at M = 128.
  Domain dom = Domain::cube(2, -1.0, 1.0, 128);
  GridFunction chi = generate(BallIndicator{{0, 0, 0}, 1.0, 1.0}, dom);
  GridFunction pot = riesz_potential(chi, RieszParams(2, 1.0));
  const std::int64_t near_zero = dom.flat_index({64, 64, 0});
  CHECK(pot.value(near_zero) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("potential linearity, positivity, and zero") {
  Domain dom = Domain::unit_box(2, 24);
  const RieszParams rp(2, 0.8);
  GridFunction f = oracles::random_function(dom, 3);
  GridFunction g = oracles::random_function(dom, 4);
  GridFunction lhs = riesz_potential(GridFunction(dom, 2.0 * f.values() - 3.0 * g.values()), rp);
  GridFunction rhs(dom, 2.0 * riesz_potential(f, rp).values() - 3.0 * riesz_potential(g, rp).values());
  CHECK(((lhs.values() - rhs.values()).abs().maxCoeff()) <=
        1e-12 * rhs.values().abs().maxCoeff());

  GridFunction pos = oracles::random_nonnegative(dom, 5);
  CHECK(riesz_potential(pos, rp).values().minCoeff() >= 0.0);
  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  CHECK(riesz_potential(zero, rp).max_abs() == 0.0);
}

TEST_CASE("potential is deterministic across thread counts") {
  Domain dom = Domain::unit_box(2, 20);
  const RieszParams rp(2, 1.2);
  GridFunction f = oracles::random_function(dom, 6);
  GridFunction a = riesz_potential(f, rp, 1);
  GridFunction b = riesz_potential(f, rp, 2);
  CHECK((a.values() == b.values()).all());
}

TEST_CASE("kernel homogeneity under grid doubling") {
  const double alpha = 1.3;
  Domain dom1 = Domain::cube(2, -1.0, 1.0, 48);
  Domain dom2 = Domain::cube(2, -2.0, 2.0, 48);
  GridFunction f1 = generate(BallIndicator{{0, 0, 0}, 0.6, 1.0}, dom1);
  GridFunction f2 = generate(BallIndicator{{0, 0, 0}, 1.2, 1.0}, dom2);
  GridFunction p1 = riesz_potential(f1, RieszParams(2, alpha));
  GridFunction p2 = riesz_potential(f2, RieszParams(2, alpha));
  const double scale = std::pow(2.0, alpha);
  for (std::int64_t i : {dom1.flat_index({24, 24, 0}), dom1.flat_index({5, 30, 0})})
    CHECK(p2.value(i) == doctest::Approx(scale * p1.value(i)).epsilon(1e-12));
}

TEST_CASE("ball averager agrees with the direct scan") {
  Domain dom = Domain::unit_box(2, 20);
  GridFunction f = oracles::random_function(dom, 7);
  const BallAverager avg(f);
  for (std::int64_t cell : {std::int64_t{0}, dom.flat_index({10, 10, 0}),
                            dom.flat_index({19, 3, 0})})
    for (double r : {0.02, 0.09, 0.31, 0.9})
      CHECK(avg.average(cell, r) ==
            doctest::Approx(oracles::ball_average_direct(f, cell, r)).epsilon(1e-12));
}

TEST_CASE("ball averager in one and three dimensions") {
  for (int dim : {1, 3}) {
    Domain dom = Domain::unit_box(dim, dim == 1 ? 64 : 12);
    GridFunction f = oracles::random_function(dom, 70 + dim);
    const BallAverager avg(f);
    std::int64_t mid = dom.cell_count() / 2;
    for (double r : {0.05, 0.2, 0.55})
      CHECK(avg.average(mid, r) ==
            doctest::Approx(oracles::ball_average_direct(f, mid, r)).epsilon(1e-12));
  }
}

TEST_CASE("fractional maximal of a ball indicator peaks at its radius") {
  // Odd cell count: the origin is a cell center, so the averaging ball at
  // r = R sees exactly the indicator's cells.
  Domain dom = Domain::cube(2, -1.0, 1.0, 65);
  const double R = 0.5;
  GridFunction chi = generate(BallIndicator{{0, 0, 0}, R, 1.0}, dom);
  const double beta = 1.0;
  // Radius set {R} alone: the average is exactly 1 there.
  const std::int64_t center = dom.flat_index({32, 32, 0});
  const std::vector<double> only_R{R};
  GridFunction mR = fractional_maximal(chi, beta, only_R);
  CHECK(mR.value(center) == doctest::Approx(std::pow(R, beta)).epsilon(1e-14));
  // Default radii united with {R}: nothing beats r = R by more than the
  // rasterization wobble.
  auto radii = default_maximal_radii(dom);
  radii.push_back(R);
  GridFunction m = fractional_maximal(chi, beta, radii);
  CHECK(m.value(center) >= std::pow(R, beta) * (1.0 - 1e-14));
  CHECK(m.value(center) <= std::pow(R, beta) * 1.05);
}

TEST_CASE("maximal function at beta = 0 dominates the function") {
  Domain dom = Domain::unit_box(2, 32);
  GridFunction f = oracles::random_nonnegative(dom, 9);
  GridFunction m = fractional_maximal(f, 0.0);
  CHECK((m.values() >= f.values() - 1e-15).all());
}

TEST_CASE("maximal function of a constant on interior balls") {
  Domain dom = Domain::unit_box(2, 16);
  const double c = 0.7, beta = 1.2;
  GridFunction f(dom, ArrayXd::Constant(dom.cell_count(), c));
  const std::vector<double> radii{0.1, 0.2, 0.4};
  GridFunction m = fractional_maximal(f, beta, radii);
  const std::int64_t center = dom.flat_index({8, 8, 0});
  CHECK(m.value(center) == doctest::Approx(c * std::pow(0.4, beta)).epsilon(1e-14));
}

TEST_CASE("maximal monotonicity in the function argument") {
  Domain dom = Domain::unit_box(2, 24);
  GridFunction f = oracles::random_nonnegative(dom, 10);
  GridFunction g(dom, f.values() + oracles::random_nonnegative(dom, 11).values());
  GridFunction mf = fractional_maximal(f, 0.7);
  GridFunction mg = fractional_maximal(g, 0.7);
  CHECK((mf.values() <= mg.values() + 1e-15).all());
}

TEST_CASE("maximal function rejects bad input") {
  Domain dom = Domain::unit_box(2, 8);
  GridFunction f = oracles::random_nonnegative(dom, 12);
  CHECK_THROWS_AS(fractional_maximal(f, 0.5, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(fractional_maximal(f, 2.0), std::invalid_argument);
}

TEST_CASE("truncated kernel norm closed form and scaling") {
  // N = 2, alpha = 1, p = 4/3: delta = 1/2 and the value is pi^{1/4} r^{-1/2}.
  const double v = truncated_kernel_weak_norm(2, 1.0, 4.0 / 3.0, 0.25);
  CHECK(v == doctest::Approx(std::pow(std::numbers::pi, 0.25) * 2.0).epsilon(1e-14));
  const double v2 = truncated_kernel_weak_norm(2, 1.0, 4.0 / 3.0, 0.5);
  CHECK(v2 / v == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(truncated_kernel_weak_norm(2, 1.0, 2.5, 0.25), std::domain_error);
}

TEST_CASE("truncated kernel: exact supremum sits below the closed form") {
  for (double p : {1.2, 4.0 / 3.0, 1.7}) {
    const double closed = truncated_kernel_weak_norm(2, 1.0, p, 0.25);
    const double exact = truncated_kernel_weak_norm_exact(2, 1.0, p, 0.25);
    CHECK(exact < closed);
    CHECK(exact > 0.0);
  }
  // At (2, 1, 4/3) the ratio is exactly 1/sqrt(2).
  const double ratio = truncated_kernel_weak_norm_exact(2, 1.0, 4.0 / 3.0, 0.25) /
                       truncated_kernel_weak_norm(2, 1.0, 4.0 / 3.0, 0.25);
  CHECK(ratio == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
}

TEST_CASE("truncated kernel: grid sample matches the exact supremum") {
  const double emp = truncated_kernel_weak_norm_empirical(2, 1.0, 4.0 / 3.0, 0.25, 1.0, 256);
  const double exact = truncated_kernel_weak_norm_exact(2, 1.0, 4.0 / 3.0, 0.25);
  CHECK(emp == doctest::Approx(exact).epsilon(0.02));
}

TEST_CASE("hedberg parameters and constants") {
  CHECK_THROWS_AS(HedbergParams(2, 1.0, 0.0, 1.6), std::invalid_argument);
  CHECK_THROWS_AS(HedbergParams(2, 1.0, 0.5, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(HedbergParams(2, 1.0, 0.5, 2.0), std::invalid_argument);

  const HedbergParams hp(2, 1.0, 0.5, 1.6);
  CHECK(hp.C3() == doctest::Approx(std::exp(1.0 / std::numbers::e) * std::numbers::pi));
  CHECK(hp.C2() == doctest::Approx(2.0 / (2.0 * std::numbers::pi *
                                          (1.0 - std::pow(2.0, -0.5)))));
  // C4 does not depend on p.
  for (double p : {1.5, 1.8, 1.95})
    CHECK(HedbergParams(2, 1.0, 0.5, p).C4() == hp.C4());
  CHECK(hp.C4_tight() <= hp.C4());
}

TEST_CASE("hedberg bound: zero function and ball indicator") {
  Domain dom = Domain::unit_box(2, 48);
  const RieszParams rp(2, 1.0);
  const HedbergParams hp(2, 1.0, 0.5, 1.6);

  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const HedbergReport zrep = hedberg_bound_check(zero, rp, hp);
  CHECK(zrep.holds);
  CHECK(zrep.worst_ratio == 0.0);

  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.3, 1.0}, dom);
  const HedbergReport rep = hedberg_bound_check(chi, rp, hp);
  CHECK(rep.holds);
  CHECK(rep.worst_ratio > 0.0);
  CHECK_FALSE(rep.degenerate_cell_flagged);
}

TEST_CASE("hedberg bound on random unit-norm functions") {
  Domain dom = Domain::unit_box(2, 48);
  const RieszParams rp(2, 1.0);
  const HedbergParams hp(2, 1.0, 1.0 / 3.0, 1.5);
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    GridFunction f = oracles::random_nonnegative(dom, seed);
    GridFunction unit = normalize_unit_lorentz(f, {hp.p, 1.0});
    const HedbergReport rep = hedberg_bound_check(unit, rp, hp);
    CHECK(rep.holds);
  }
}
