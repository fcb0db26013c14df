#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rieszlab/decay.hpp"
#include "rieszlab/generators.hpp"
#include "rieszlab/potentials.hpp"

#include <random>

using namespace rieszlab;

TEST_CASE("epsilon-r selection satisfies its constraints") {
  // beta = N: epsilon = alpha and the constraint reads 0 = r * 0.
  const EpsR top = choose_eps_r(2, 1.0, 2.0);
  CHECK(top.epsilon == doctest::Approx(1.0));
  CHECK(top.r == doctest::Approx(1.5));

  const EpsR mid = choose_eps_r(2, 1.0, 1.0);
  CHECK(mid.r == doctest::Approx(1.5));
  CHECK(mid.epsilon == doctest::Approx(1.0 / 3.0));
  CHECK(mid.r * (1.0 - mid.epsilon) == doctest::Approx(1.0).epsilon(1e-14));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int dim : {1, 2, 3}) {
    for (int k = 0; k < 1000; ++k) {
      const double alpha = u(rng) * dim;
      if (alpha <= 1e-8 || alpha >= dim - 1e-8) continue;
      const double beta = 1e-6 + u(rng) * (dim - 1e-6);
      const EpsR er = choose_eps_r(dim, alpha, beta);
      CHECK(er.epsilon > 0.0);
      CHECK(er.epsilon <= alpha + 1e-12);
      CHECK(er.r > 1.0);
      CHECK(er.r < dim / alpha);
      CHECK(er.r * (alpha - er.epsilon) == doctest::Approx(dim - beta).epsilon(1e-12));
      CHECK(dim / er.r - alpha > 0.0);
    }
  }
}

TEST_CASE("constant chain at N = 2, alpha = 1, q = 2") {
  const ConstantChain ch = compute_constants(2, 1.0, 2.0, 2.0, 1.0);
  CHECK(ch.p0 == doctest::Approx(1.5));
  CHECK(ch.delta_p0 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(ch.q_conj == doctest::Approx(2.0));
  CHECK(ch.rescale == doctest::Approx(2.0));
  CHECK(ch.c_bar == doctest::Approx(0.5 * ch.c));
  CHECK(ch.C4 == doctest::Approx(2.0 * (ch.C2 + ch.C3)));
  CHECK(ch.C6 == doctest::Approx(ch.C5 * std::pow(ch.C1_prime, ch.r)));
  CHECK(ch.C >= ch.C6);
  // C1 dominates delta_p0^{1/q'} by construction.
  CHECK(ch.C1 >= std::pow(ch.delta_p0, 1.0 / ch.q_conj));
  // C1 delta_p^{-1/q'} >= 1 across the admissible window.
  for (double p = ch.p0; p < 2.0; p += 0.01) {
    const double delta = ch.delta_for(p);
    CHECK(ch.C1 * std::pow(delta, -1.0 / ch.q_conj) >= 1.0 - 1e-12);
  }
  CHECK_THROWS_AS(compute_constants(2, 1.0, 2.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("delta equation: value at t0, homogeneity, and the small-t branch") {
  for (double q : {2.0, 4.0, kInf}) {
    const ConstantChain ch = compute_constants(2, 1.0, 1.0, q, 1.0);
    const double d0 = solve_delta(ch.t0, ch);
    CHECK(d0 == doctest::Approx(ch.delta_p0).epsilon(1e-12));
    // The defining equation holds to 1e-12.
    CHECK(ch.C4 * ch.C1 * std::pow(d0, -1.0 / ch.q_conj) / ch.t0 ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // Doubling t scales delta by 2^{-q'}; delta decreases past t0.
    const double d2 = solve_delta(2.0 * ch.t0, ch);
    CHECK(d2 == doctest::Approx(d0 * std::pow(2.0, -ch.q_conj)).epsilon(1e-12));
    CHECK(d2 < d0);
    CHECK(d2 <= ch.delta_p0);
    CHECK_THROWS_AS(solve_delta(0.5 * ch.t0, ch), std::domain_error);
  }
}

TEST_CASE("weak-type constant inside the chain matches the direct formula") {
  const ConstantChain ch = compute_constants(2, 1.0, 1.0, 2.0, 1.0);
  // gamma = r(alpha - eps) = N - beta = 1, so C5 = 10/pi here.
  CHECK(ch.C5 == doctest::Approx(10.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("near-extremal profile is unit normalized and annular") {
  Domain dom = Domain::unit_box(2, 64);
  for (double q : {2.0, kInf}) {
    GridFunction f = near_extremal(dom, 1.0, 0.05, {2.0, q});
    CHECK(lorentz_norm(f, {2.0, q}) == doctest::Approx(1.0).epsilon(1e-12));
    // Zero in the inner hole and outside the outer radius.
    CHECK(f.value(dom.flat_index({32, 32, 0})) == 0.0);
    CHECK(f.value(dom.flat_index({0, 0, 0})) == 0.0);
  }
  CHECK_THROWS_AS(near_extremal(dom, 1.0, 0.6, {2.0, 2.0}), std::invalid_argument);
}

TEST_CASE("decay fit recovers a planted exponential") {
  std::vector<DecaySample> samples;
  const double c_true = 0.8, C_true = 3.0, s_true = 2.0;
  for (double t = 0.5; t <= 4.0; t += 0.1) {
    DecaySample s;
    s.t = t;
    s.content = C_true * std::exp(-c_true * std::pow(t, s_true));
    samples.push_back(s);
  }
  const DecayFit fit = fit_decay(samples, s_true);
  REQUIRE(fit.valid);
  CHECK(fit.c_emp == doctest::Approx(c_true).epsilon(1e-6));
  CHECK(fit.C_emp == doctest::Approx(C_true).epsilon(1e-4));
  CHECK(fit.exponent_emp == doctest::Approx(s_true).epsilon(1e-3));
}

TEST_CASE("main2: zero function and the unit-norm gate") {
  Domain dom = Domain::unit_box(2, 32);
  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const Main2Report rep = verify_main2(zero, 1.0, 2.0, 2.0);
  CHECK(rep.holds);
  CHECK(rep.potential_max == 0.0);

  GridFunction big(dom, ArrayXd::Constant(dom.cell_count(), 50.0));
  CHECK_THROWS_AS(verify_main2(big, 1.0, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("main2: normalized ball indicator passes with a decaying tail") {
  Domain dom = Domain::unit_box(2, 64);
  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.3, 1.0}, dom);
  GridFunction f = normalize_unit_lorentz(chi, {2.0, 2.0});
  const Main2Report rep = verify_main2(f, 1.0, 2.0, 2.0);
  CHECK(rep.holds);
  CHECK(rep.worst_margin >= 1.0);
  REQUIRE(rep.fit.valid);
  CHECK(rep.fit.exponent_emp >= 0.85 * rep.chain.q_conj);
}

TEST_CASE("main2: near-extremal profiles at several second exponents") {
  Domain dom = Domain::unit_box(2, 64);
  for (double q : {2.0, kInf}) {
    GridFunction f = near_extremal(dom, 1.0, 0.03, {2.0, q});
    const Main2Report rep = verify_main2(f, 1.0, 1.0, q);
    CHECK(rep.holds);
    CHECK(rep.worst_margin >= 1.0);
  }
}

TEST_CASE("main1: exponent identity, lebesgue variant, and norm inflation") {
  Domain dom = Domain::unit_box(2, 64);
  // q' at q = N/alpha equals N/(N-alpha) = 2 here.
  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.25, 1.0}, dom);
  ArrayXd v = chi.values() / chi.lp_norm(2.0);
  GridFunction f(dom, v);
  const Main1Report rep = verify_main1_main(f, 1.0, 2.0);
  CHECK(rep.base.chain.q_conj == doctest::Approx(2.0));
  CHECK(rep.base.holds);
  CHECK(rep.lebesgue_checked);
  CHECK(rep.lebesgue_holds);
  CHECK(rep.inflation_ok);
  CHECK(rep.norm_inflation <= 2.0 * (1.0 + 1e-9));

  const Main1Report rep1 = verify_main1_main(f, 1.0, 1.0);
  CHECK(rep1.base.holds);
  CHECK_FALSE(rep1.lebesgue_checked);
}

TEST_CASE("corollary: zero function, halved rate, and rejection") {
  Domain dom = Domain::unit_box(2, 48);
  GridFunction zero(dom, ArrayXd::Zero(dom.cell_count()));
  const CorollaryReport triv = verify_corollary(zero, 1.0, 2.0, 2.0, 1e-6);
  CHECK(triv.holds);
  CHECK(triv.lhs == doctest::Approx(triv.content_omega).epsilon(1e-12));

  GridFunction chi = generate(BallIndicator{{0.5, 0.5, 0}, 0.3, 1.0}, dom);
  GridFunction f = normalize_unit_lorentz(chi, {2.0, 2.0});
  const ConstantChain ch = compute_constants(2, 1.0, 2.0, 2.0, 1.0);
  const CorollaryReport rep = verify_corollary(f, 1.0, 2.0, 2.0, ch.c / 2.0);
  CHECK(rep.holds);
  CHECK(rep.rhs == doctest::Approx(rep.content_omega + rep.C).epsilon(1e-12));

  CHECK_THROWS_AS(verify_corollary(f, 1.0, 2.0, 2.0, 10.0), std::invalid_argument);
}
