#pragma once

#include "rieszlab/grid.hpp"

#include <limits>
#include <vector>

namespace rieszlab {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Nonincreasing right-open step function on (0, infinity): value levels[i] on
/// [edges[i], edges[i+1]) and 0 beyond edges.back().  edges[0] == 0, edges
/// strictly increasing, levels strictly decreasing and positive after
/// compression.  Exact carrier of rearrangements and distribution functions.
struct StepFunction {
  std::vector<double> edges;
  std::vector<double> levels;

  /// Validates, compresses equal adjacent levels, drops zero levels.
  static StepFunction make(std::vector<double> edges, std::vector<double> levels);

  std::size_t pieces() const { return levels.size(); }
  bool zero() const { return levels.empty(); }
  double total_measure() const { return levels.empty() ? 0.0 : edges.back(); }
  double max_level() const { return levels.empty() ? 0.0 : levels.front(); }

  double value(double x) const;
  /// Measure of {value > y}.
  double distribution(double y) const;
  double integral() const;
};

/// Measure of {|f| > y}; y >= 0.
double distribution(const GridFunction& f, double y);

/// The nonincreasing rearrangement of |f|: sorted cell values, each carried on
/// an interval of length cell_measure.  Equimeasurable with |f| exactly.
StepFunction decreasing_rearrangement(const GridFunction& f);

/// The maximal average x -> (1/x) Integral_0^x g, piecewise (c_i + v_i x)/x on
/// the pieces of g and A/x beyond the support.  Exact, no quadrature.
class AveragedRearrangement {
 public:
  explicit AveragedRearrangement(const StepFunction& g);

  double value(double x) const;
  /// Integral_0^x g, piecewise linear.
  double cumulative(double x) const;
  double total() const { return cum_.empty() ? 0.0 : cum_.back(); }
  const std::vector<double>& edges() const { return edges_; }

 private:
  std::vector<double> edges_, levels_, cum_;
};

struct LorentzParams {
  double p = 2.0;
  double q = 2.0;

  double p_conj() const { return p == kInf ? 1.0 : p / (p - 1.0); }
  double q_conj() const {
    if (q == kInf) return 1.0;
    if (q == 1.0) return kInf;
    return q / (q - 1.0);
  }
  bool weak() const { return q == kInf; }
};

/// |||g|||_{p,q} = (Integral (t^{1/p} g(t))^q dt/t)^{1/q} for nonincreasing
/// step g; closed form per piece.  q = inf takes sup t^{1/p} g(t).
/// Requires p in [1, inf) for finite q (p = q = inf returns the sup of g).
double lorentz_quasinorm(const StepFunction& fstar, const LorentzParams& pq);
double lorentz_quasinorm(const GridFunction& f, const LorentzParams& pq);

/// Distribution-function form p^{1/q} (Integral (y m(y)^{1/p})^q dy/y)^{1/q};
/// agrees with lorentz_quasinorm identically on step data (closed form).
double distribution_form_quasinorm(const StepFunction& fstar, const LorentzParams& pq);
double distribution_form_quasinorm(const GridFunction& f, const LorentzParams& pq);

/// ||g||-style norm through the maximal average of an arbitrary nonnegative
/// step function: (Integral (t^{1/p} avg_g(t))^q dt/t)^{1/q}.  First piece and
/// tail in closed form, interior pieces by adaptive quadrature.
double averaged_step_norm(const StepFunction& g, const LorentzParams& pq,
                          double quad_rel_tol = 1e-10);

/// The Lorentz norm ||f||_{p,q} built from f**.  Requires p in (1, inf) when
/// q < inf; p = 1 is admitted only for q = inf, where the value equals the
/// L^1 norm.  p = q = inf gives the sup norm.
double lorentz_norm(const StepFunction& fstar, const LorentzParams& pq,
                    double quad_rel_tol = 1e-10);
double lorentz_norm(const GridFunction& f, const LorentzParams& pq,
                    double quad_rel_tol = 1e-10);

/// f / ||f||_{p,q}; throws std::domain_error on the zero function.
GridFunction normalize_unit_lorentz(const GridFunction& f, const LorentzParams& pq);

struct HardyReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

/// Hardy's inequality for nonincreasing step g:
///   (Int [x^{1/p} avg_g(x)]^q dx/x)^{1/q} <= p/(p-1) (Int [x^{1/p} g]^q dx/x)^{1/q}.
HardyReport hardy_check(const StepFunction& g, double p, double q, double slack = 1e-9);

struct CalderonReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double factor = 1.0;
  bool holds = true;
  bool factor_within_bound = true;
};

/// ||f||_{p,q} <= p' (qt/p)^{1/qt - 1/q} ||f||_{p,qt} for qt <= q, and the
/// exchange factor itself stays below e^{1/e}.
CalderonReport calderon_compare(const GridFunction& f, double p, double q, double q_tilde,
                                double slack = 1e-9);

}  // namespace rieszlab
