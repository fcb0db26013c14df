#pragma once

#include "rieszlab/content.hpp"
#include "rieszlab/grid.hpp"
#include "rieszlab/rearrangement.hpp"

#include <vector>

namespace rieszlab {

/// Splitting parameters for the content exponent: epsilon in (0, alpha] and
/// r in (1, N/alpha) with N - beta = r (alpha - epsilon) exactly.
struct EpsR {
  double epsilon;
  double r;
};
EpsR choose_eps_r(int dim, double alpha, double beta);

/// Every constant of the decay bound, assembled from its printed formula.
struct ConstantChain {
  // Inputs.
  int dim = 2;
  double alpha = 1.0, beta = 2.0, q = 2.0;
  double domain_measure = 1.0;
  double content_omega = 0.0;  // upper bound for H^beta_inf of the box
  double epsilon = 0.0, r = 0.0, p = 0.0;

  // Derived.
  double q_conj = 0.0, p0 = 0.0, delta_p0 = 0.0;
  double C1 = 0.0, C1_prime = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0, C5 = 0.0, C6 = 0.0;
  double t0 = 0.0, c = 0.0, C = 0.0;
  double rescale = 0.0;  // N/(N-alpha)
  double c_bar = 0.0;    // c (N-alpha)/N

  double delta_for(double pp) const { return dim / pp - alpha; }
  double bound(double t) const;  // C exp(-c t^{q'})
};

/// content_omega_upper < 0 uses the box's own enclosing ball.
ConstantChain compute_constants(int dim, double alpha, double beta, double q,
                                double domain_measure, double content_omega_upper = -1.0);

/// The unique delta with C4 C1 delta^{-1/q'} / t = e^{-1}; requires t >= t0.
double solve_delta(double t, const ConstantChain& chain);

/// Enclosing-ball content bound for a whole box of the given extents.
double box_content_upper(const Domain& dom, double beta);

/// |x - center|^{-alpha} restricted to lam < |x - center| < outer, normalized
/// to unit ||.||_{N/alpha, q}.  The profile that saturates the weak critical
/// norm; outer <= 0 picks the largest ball that fits in the box.
GridFunction near_extremal(const Domain& dom, double alpha, double lam,
                           const LorentzParams& pq, double outer = -1.0);

struct DecaySample {
  double t = 0.0;
  double content = 0.0;
  double bound = 0.0;
};

/// Least squares of log(content) against t^{q'} over the tail (the largest
/// half of the samples with positive content), plus a one-dimensional search
/// for the best-fitting exponent s in log(content) ~ a - b t^s.
struct DecayFit {
  double c_emp = 0.0;
  double C_emp = 0.0;
  double exponent_emp = 0.0;
  std::size_t tail_count = 0;
  bool valid = false;
};
DecayFit fit_decay(const std::vector<DecaySample>& samples, double q_conj);

struct Main2Report {
  ConstantChain chain;
  std::vector<DecaySample> samples;
  bool holds = true;
  double worst_margin = kInf;  // min over samples of bound/content
  double potential_max = 0.0;
  DecayFit fit;
};

/// Content decay of the level sets of the potential of a unit-norm function:
///   content_upper({|I_alpha f| > t}) <= C exp(-c t^{q'})
/// at a log-spaced t grid from min(t0/4, .) up to max |I_alpha f|.
Main2Report verify_main2(const GridFunction& f, double alpha, double beta, double q,
                         int t_count = 64, int n_threads = 0);

struct Main1Report {
  Main2Report base;          // content samples against C exp(-c_bar t^{N/(N-alpha)})
  bool lebesgue_checked = false;
  bool lebesgue_holds = true;
  double norm_inflation = 0.0;  // ||f||_{N/a,N/a} / ||f||_{L^{N/a}} <= N/(N-alpha)
  bool inflation_ok = true;
};

/// The L^{N/alpha} variants: rescales f by (N-alpha)/N into the unit Lorentz
/// ball and checks the bound with c_bar; for beta = N also checks the plain
/// Lebesgue measure of the level sets against the same bound.
Main1Report verify_main1_main(const GridFunction& f, double alpha, double beta,
                              int t_count = 64, int n_threads = 0);

struct CorollaryReport {
  double lhs = 0.0, rhs = 0.0;
  double c = 0.0, c_prime = 0.0, C = 0.0, content_omega = 0.0;
  bool holds = true;
};

/// Exponential Choquet integrability:
///   Integral exp(c' |I_alpha f|^{q'}) dH^beta_inf <= H^beta_inf(Omega) + C/(c/c' - 1)
/// for c' < c, via the exact layer-cake integral.
CorollaryReport verify_corollary(const GridFunction& f, double alpha, double beta, double q,
                                 double c_prime, int n_threads = 0);

}  // namespace rieszlab
