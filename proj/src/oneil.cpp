#include "rieszlab/oneil.hpp"

#include "rieszlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rieszlab {

namespace {

std::vector<double> sample_points(const StepFunction& hstar, double domain_measure,
                                  double cell_measure, std::size_t n) {
  std::vector<double> xs = log_spaced(cell_measure, domain_measure, n);
  // Include the breakpoints of h*; the two sides of each inequality are
  // piecewise analytic between them.
  for (std::size_t i = 1; i < hstar.edges.size(); ++i) xs.push_back(hstar.edges[i]);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void track_worst(InequalityReport& rep, double lhs, double rhs, double at, double slack) {
  const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? kInf : 0.0);
  if (ratio > rep.worst_ratio) {
    rep.worst_ratio = ratio;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.worst_at = at;
  }
  if (!(lhs <= rhs * (1.0 + slack))) rep.holds = false;
  ++rep.samples;
}

}  // namespace

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  const Domain& dom = f.domain();
  if (dom != g.domain()) throw std::invalid_argument("convolve: grids must match");
  const int dim = dom.dim();

  Point lo{}, hi{};
  std::array<int, 3> cells{1, 1, 1};
  for (int d = 0; d < dim; ++d) {
    const double h = dom.spacing(d);
    cells[d] = 2 * dom.cells(d) - 1;
    lo[d] = 2.0 * dom.lower(d) + 0.5 * h;
    hi[d] = lo[d] + cells[d] * h;
  }
  Domain out(dim, lo, hi, cells, std::max(Domain::kDefaultMaxCells, std::int64_t{1} << 24));

  const double w = dom.cell_measure();
  ArrayXd hv = ArrayXd::Zero(out.cell_count());
  const ArrayXd& fv = f.values();
  const ArrayXd& gv = g.values();
  // Scatter: every source pair (j, m) deposits f[j] g[m] w at index j + m.
  for (std::int64_t j = 0; j < fv.size(); ++j) {
    if (fv[j] == 0.0) continue;
    const auto ji = dom.multi_index(j);
    const double fw = fv[j] * w;
    for (std::int64_t m = 0; m < gv.size(); ++m) {
      if (gv[m] == 0.0) continue;
      const auto mi = dom.multi_index(m);
      std::array<int, 3> ki{0, 0, 0};
      for (int d = 0; d < dim; ++d) ki[d] = ji[d] + mi[d];
      hv[out.flat_index(ki)] += fw * gv[m];
    }
  }
  return GridFunction(out, std::move(hv));
}

ProductInstance make_product(ProductKind kind, const GridFunction& f, const GridFunction& g,
                             double axiom_slack) {
  if (f.domain() != g.domain())
    throw std::invalid_argument("make_product: grids must match");
  GridFunction h = kind == ProductKind::pointwise
                       ? GridFunction(f.domain(), f.values() * g.values())
                       : convolve(f, g);
  const double fi = f.max_abs(), gi = g.max_abs(), f1 = f.l1_norm(), g1 = g.l1_norm();
  const double hi = h.max_abs(), h1 = h.l1_norm();
  const double s = 1.0 + axiom_slack;
  if (!(hi <= fi * gi * s) || !(h1 <= f1 * gi * s) || !(h1 <= fi * g1 * s))
    throw std::invalid_argument("make_product: product-operator axioms fail numerically");
  return ProductInstance{kind, f, g, std::move(h)};
}

InequalityReport verify_lemma15(const ProductInstance& inst, std::size_t n_samples,
                                double slack) {
  InequalityReport rep{"lemma15"};
  const StepFunction hstar = decreasing_rearrangement(inst.h);
  const StepFunction fstar = decreasing_rearrangement(inst.f);
  const StepFunction gstar = decreasing_rearrangement(inst.g);
  const AveragedRearrangement havg(hstar);

  // Integral_0^x f* g*: product of two nonincreasing steps is a nonincreasing
  // step on the merged breakpoints, so the integral is an exact sum.
  std::vector<double> edges{0.0};
  std::vector<double> levels;
  {
    std::vector<double> merged;
    merged.insert(merged.end(), fstar.edges.begin() + 1, fstar.edges.end());
    merged.insert(merged.end(), gstar.edges.begin() + 1, gstar.edges.end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (double b : merged) {
      const double mid = 0.5 * (edges.back() + b);
      const double lv = fstar.value(mid) * gstar.value(mid);
      levels.push_back(lv);
      edges.push_back(b);
    }
  }
  auto cumulative_product = [&](double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (x <= edges[i]) break;
      acc += levels[i] * (std::min(x, edges[i + 1]) - edges[i]);
    }
    return acc;
  };

  const auto xs = sample_points(hstar, inst.h.domain().measure(),
                                inst.h.domain().cell_measure(), n_samples);
  for (double x : xs)
    track_worst(rep, x * havg.value(x), cumulative_product(x), x, slack);
  return rep;
}

InequalityReport verify_lemma14(const GridFunction& f, const GridFunction& g,
                                std::size_t n_samples, double slack) {
  InequalityReport rep{"lemma14"};
  const double a = f.max_abs();
  const double supp = f.support_measure();
  for (ProductKind kind : {ProductKind::pointwise, ProductKind::convolution}) {
    const ProductInstance inst = make_product(kind, f, g);
    const AveragedRearrangement havg(decreasing_rearrangement(inst.h));
    const AveragedRearrangement gavg(decreasing_rearrangement(inst.g));
    const StepFunction hstar = decreasing_rearrangement(inst.h);
    const auto ts = sample_points(hstar, inst.h.domain().measure(),
                                  inst.h.domain().cell_measure(), n_samples);
    const double g_at_supp = supp > 0.0 ? gavg.value(supp) : 0.0;
    for (double t : ts) {
      track_worst(rep, havg.value(t), a * gavg.value(t), t, slack);
      if (supp > 0.0)
        track_worst(rep, havg.value(t), a * (supp / t) * g_at_supp, t, slack);
      else
        track_worst(rep, havg.value(t), 0.0, t, slack);
    }
  }
  return rep;
}

InequalityReport verify_holder(const GridFunction& f, const GridFunction& g, double p1,
                               double q1, double p2, double q2, double slack) {
  const double inv_p = 1.0 / p1 + 1.0 / p2;
  if (!(inv_p < 1.0))
    throw std::domain_error("verify_holder: requires 1/p1 + 1/p2 < 1");
  const double p = 1.0 / inv_p;
  const double inv_q = (q1 == kInf ? 0.0 : 1.0 / q1) + (q2 == kInf ? 0.0 : 1.0 / q2);
  const double q = inv_q == 0.0 ? kInf : std::max(1.0, 1.0 / inv_q);

  InequalityReport rep{"holder"};
  const GridFunction fg(f.domain(), f.values() * g.values());
  const double lhs = lorentz_norm(fg, {p, q});
  const double rhs = calderon_constant() * (p / (p - 1.0)) *
                     lorentz_quasinorm(f, {p1, q1}) * lorentz_quasinorm(g, {p2, q2});
  track_worst(rep, lhs, rhs, q, slack);
  return rep;
}

InequalityReport verify_holder_L1(const GridFunction& f, const GridFunction& g, double p1,
                                  double q1, double p2, double q2, double slack) {
  if (std::abs(1.0 / p1 + 1.0 / p2 - 1.0) > 1e-12)
    throw std::domain_error("verify_holder_L1: requires 1/p1 + 1/p2 = 1");
  const double inv_q = (q1 == kInf ? 0.0 : 1.0 / q1) + (q2 == kInf ? 0.0 : 1.0 / q2);
  if (!(inv_q >= 1.0 - 1e-12))
    throw std::domain_error("verify_holder_L1: requires 1/q1 + 1/q2 >= 1");

  InequalityReport rep{"holder_L1"};
  const GridFunction fg(f.domain(), f.values() * g.values());
  const double lhs = fg.l1_norm();
  const double rhs = calderon_constant() * lorentz_quasinorm(f, {p1, q1}) *
                     lorentz_quasinorm(g, {p2, q2});
  track_worst(rep, lhs, rhs, 0.0, slack);
  return rep;
}

}  // namespace rieszlab
