#pragma once

#include "rieszlab/grid.hpp"
#include "rieszlab/rearrangement.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rieszlab {

/// Order and normalization of the fractional integral kernel
/// |x|^{alpha - N} / gamma(N, alpha) in dimension dim.
struct RieszParams {
  int dim;
  double alpha;
  double gamma_alpha;

  RieszParams(int dim_, double alpha_);
};

/// Direct evaluation of the order-alpha potential of f at every cell center:
/// a sum of kernel values over source cells, with the singular self cell
/// replaced by the analytic integral of the kernel over the ball of equal
/// volume.  O(M^{2N}); deterministic for any thread count (each output cell is
/// one fixed-order sum).
GridFunction riesz_potential(const GridFunction& f, const RieszParams& params,
                             int n_threads = 0);

/// Ball averages of |f| with zero extension outside the box: the mean over
/// all lattice cells whose center lies within distance r, cells beyond the
/// grid counting as zeros.  Row prefix sums make one query O(r/h) in 2-D.
class BallAverager {
 public:
  explicit BallAverager(const GridFunction& f);

  /// Mean of |f| over the (virtually extended) discrete ball B(center_i, r).
  double average(std::int64_t cell, double r) const;

  const Domain& domain() const { return dom_; }

 private:
  double row_segment_sum(int i0, int i2, int j_lo, int j_hi) const;

  Domain dom_;
  std::vector<double> prefix_;  // per row along the last axis, size rows*(M+1)
  std::vector<double> absf_;
  int last_cells_;
};

/// Radii h 2^{k/2} for k >= -2 up to the domain diameter.  Starts below the
/// cell spacing so the r -> 0 limit (the function itself) is represented.
std::vector<double> default_maximal_radii(const Domain& dom);

/// M_beta f(x) = max over the radius set of r^beta average_{B(x,r)} |f|.
/// A lower bound for the continuum supremum, exact for the listed radii.
GridFunction fractional_maximal(const GridFunction& f, double beta,
                                std::span<const double> radii, int n_threads = 0);
GridFunction fractional_maximal(const GridFunction& f, double beta, int n_threads = 0);

/// Closed-form value |B(0,1)|^{1/p'} r^{-delta}, delta = N/p - alpha, bounding
/// the weak L^{p'} quasi-norm of the kernel truncated outside B(0,r).
double truncated_kernel_weak_norm(int dim, double alpha, double p, double r);

/// The exact supremum sup_y y |{x in B(0,r)^c : |x|^{alpha-N} > y}|^{1/p'},
/// which keeps the r^N term the closed form above drops.  Strictly smaller.
double truncated_kernel_weak_norm_exact(int dim, double alpha, double p, double r);

/// Weak quasi-norm of the truncated kernel sampled on [-L, L]^dim with M cells
/// per axis.
double truncated_kernel_weak_norm_empirical(int dim, double alpha, double p, double r,
                                            double box_halfwidth, int cells_per_axis);

/// Exponent window and constants for the pointwise bound
///   |I_alpha f(x)| <= C4 M_{alpha-eps}f(x)^{delta/(delta+eps)} ||f||_{p,1}^{eps/(eps+delta)}.
struct HedbergParams {
  int dim;
  double alpha;
  double epsilon;
  double p;

  HedbergParams(int dim_, double alpha_, double epsilon_, double p_);

  static double p_lower(int dim, double alpha) { return 0.5 * (dim / alpha + 1.0); }

  double delta() const { return dim / p - alpha; }
  double C2() const;  // 2^{N-alpha} / (gamma(alpha) (1 - 2^{-eps}))
  double C3() const;  // e^{1/e} max{|B(0,1)|, 1}
  double C4() const { return 2.0 * (C2() + C3()); }
  /// Diagnostic: the sharper constant 2 C2^{d/(d+e)} C3^{e/(d+e)} before the
  /// sum coarsening.
  double C4_tight() const;
};

struct HedbergReport {
  bool holds = true;
  double worst_ratio = 0.0;
  std::int64_t worst_cell = -1;
  double norm_p1 = 0.0;
  double c4 = 0.0, c4_tight = 0.0;
  bool degenerate_cell_flagged = false;  // M = 0 with a nonzero potential
};

/// Checks the Hedberg bound at every cell.  The maximal function is evaluated
/// on the default radii united, per cell, with the dyadic radii r(x) 2^{-n}
/// that drive the near-part estimate, r(x) = ((C3/C2) ||f||_{p,1} / M0(x))^{1/(eps+delta)}.
HedbergReport hedberg_bound_check(const GridFunction& f, const RieszParams& riesz,
                                  const HedbergParams& hed, double slack = 1e-6,
                                  int n_threads = 0);

}  // namespace rieszlab
