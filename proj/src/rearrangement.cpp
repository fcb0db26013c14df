#include "rieszlab/rearrangement.hpp"

#include "rieszlab/quadrature.hpp"
#include "rieszlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rieszlab {

StepFunction StepFunction::make(std::vector<double> edges, std::vector<double> levels) {
  if (edges.size() != levels.size() + 1)
    throw std::invalid_argument("StepFunction: edges must have one more entry than levels");
  if (edges.empty() || edges.front() != 0.0)
    throw std::invalid_argument("StepFunction: edges must start at 0");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    if (!(edges[i] < edges[i + 1]))
      throw std::invalid_argument("StepFunction: edges must be strictly increasing");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] >= 0.0) || !std::isfinite(levels[i]))
      throw std::invalid_argument("StepFunction: levels must be finite and nonnegative");
    if (i > 0 && levels[i] > levels[i - 1])
      throw std::invalid_argument("StepFunction: levels must be nonincreasing");
  }
  StepFunction out;
  out.edges.push_back(0.0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == 0.0) break;  // zero beyond here by convention
    if (!out.levels.empty() && levels[i] == out.levels.back()) {
      out.edges.back() = edges[i + 1];  // merge equal run
    } else {
      out.levels.push_back(levels[i]);
      out.edges.push_back(edges[i + 1]);
    }
  }
  return out;
}

double StepFunction::value(double x) const {
  if (x < 0.0 || levels.empty() || x >= edges.back()) return 0.0;
  const auto it = std::upper_bound(edges.begin(), edges.end(), x);
  const auto i = static_cast<std::size_t>(it - edges.begin()) - 1;
  return levels[i];
}

double StepFunction::distribution(double y) const {
  // levels are strictly decreasing, so {value > y} = [0, edges[i+1]) where i
  // is the last piece with level > y.
  if (levels.empty() || y >= levels.front()) return 0.0;
  const auto it = std::upper_bound(levels.begin(), levels.end(), y, std::greater<double>());
  const auto i = static_cast<std::size_t>(it - levels.begin());
  return edges[i];
}

double StepFunction::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) s += levels[i] * (edges[i + 1] - edges[i]);
  return s;
}

double distribution(const GridFunction& f, double y) {
  if (y < 0.0) throw std::invalid_argument("distribution: y must be nonnegative");
  std::int64_t n = 0;
  const ArrayXd& v = f.values();
  for (std::int64_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > y) ++n;
  return f.domain().cell_measure() * static_cast<double>(n);
}

StepFunction decreasing_rearrangement(const GridFunction& f) {
  std::vector<double> vals(f.values().size());
  for (std::int64_t i = 0; i < f.values().size(); ++i) vals[i] = std::abs(f.values()[i]);
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  const double w = f.domain().cell_measure();
  std::vector<double> edges{0.0}, levels;
  edges.reserve(vals.size() + 1);
  levels.reserve(vals.size());
  // Edges as count * w, not accumulated sums, so they agree bit-exactly with
  // the distribution function's cell-count arithmetic.
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0.0) break;
    if (!levels.empty() && vals[i] == levels.back()) {
      edges.back() = static_cast<double>(i + 1) * w;
    } else {
      levels.push_back(vals[i]);
      edges.push_back(static_cast<double>(i + 1) * w);
    }
  }
  StepFunction out;
  out.edges = std::move(edges);
  out.levels = std::move(levels);
  return out;
}

AveragedRearrangement::AveragedRearrangement(const StepFunction& g)
    : edges_(g.edges), levels_(g.levels) {
  cum_.resize(edges_.size());
  cum_[0] = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i)
    cum_[i + 1] = cum_[i] + levels_[i] * (edges_[i + 1] - edges_[i]);
}

double AveragedRearrangement::cumulative(double x) const {
  if (x <= 0.0 || levels_.empty()) return 0.0;
  if (x >= edges_.back()) return cum_.back();
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), x);
  const auto i = static_cast<std::size_t>(it - edges_.begin()) - 1;
  return cum_[i] + levels_[i] * (x - edges_[i]);
}

double AveragedRearrangement::value(double x) const {
  if (levels_.empty()) return 0.0;
  if (x <= 0.0) return levels_.front();  // continuous limit at 0+
  return cumulative(x) / x;
}

namespace {

void require_quasinorm_params(const LorentzParams& pq) {
  if (pq.p == kInf) {
    if (pq.q != kInf)
      throw std::domain_error("lorentz_quasinorm: p = inf requires q = inf");
    return;
  }
  if (!(pq.p >= 1.0)) throw std::domain_error("lorentz_quasinorm: requires p >= 1");
  if (!(pq.q > 0.0)) throw std::domain_error("lorentz_quasinorm: requires q > 0");
}

}  // namespace

double lorentz_quasinorm(const StepFunction& g, const LorentzParams& pq) {
  require_quasinorm_params(pq);
  if (g.zero()) return 0.0;
  if (pq.p == kInf) return g.max_level();
  if (pq.weak()) {
    // t^{1/p} is increasing, so the sup on each piece sits at its right edge.
    double best = 0.0;
    for (std::size_t i = 0; i < g.pieces(); ++i)
      best = std::max(best, g.levels[i] * std::pow(g.edges[i + 1], 1.0 / pq.p));
    return best;
  }
  const double e = pq.q / pq.p;
  double sum = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    sum += std::pow(g.levels[i], pq.q) *
           (std::pow(g.edges[i + 1], e) - std::pow(g.edges[i], e));
  }
  return std::pow(sum / e, 1.0 / pq.q);
}

double lorentz_quasinorm(const GridFunction& f, const LorentzParams& pq) {
  return lorentz_quasinorm(decreasing_rearrangement(f), pq);
}

double distribution_form_quasinorm(const StepFunction& g, const LorentzParams& pq) {
  require_quasinorm_params(pq);
  if (g.zero()) return 0.0;
  if (pq.p == kInf) return g.max_level();
  if (pq.weak()) {
    // sup_y y m(y)^{1/p}: on [levels[i+1], levels[i]) the measure is
    // edges[i+1], approached at y -> levels[i].
    double best = 0.0;
    for (std::size_t i = 0; i < g.pieces(); ++i)
      best = std::max(best, g.levels[i] * std::pow(g.edges[i + 1], 1.0 / pq.p));
    return best;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < g.pieces(); ++i) {
    const double next = (i + 1 < g.pieces()) ? g.levels[i + 1] : 0.0;
    sum += std::pow(g.edges[i + 1], pq.q / pq.p) *
           (std::pow(g.levels[i], pq.q) - std::pow(next, pq.q));
  }
  return std::pow(pq.p, 1.0 / pq.q) * std::pow(sum / pq.q, 1.0 / pq.q);
}

double distribution_form_quasinorm(const GridFunction& f, const LorentzParams& pq) {
  return distribution_form_quasinorm(decreasing_rearrangement(f), pq);
}

double averaged_step_norm(const StepFunction& g, const LorentzParams& pq,
                          double quad_rel_tol) {
  if (g.zero()) return 0.0;
  const AveragedRearrangement avg(g);
  if (pq.p == kInf) {
    if (pq.q != kInf) throw std::domain_error("averaged_step_norm: p = inf requires q = inf");
    return avg.value(0.0);  // sup of the average equals the sup of g
  }
  const double p = pq.p;
  if (pq.weak()) {
    // On [b_i, b_{i+1}) the map t -> t^{1/p} (c + v t)/t = c t^{1/p-1} + v t^{1/p}
    // has derivative t^{1/p-2} (c (1/p - 1) + (v/p) t), which changes sign at
    // most once, from - to +.  The maximum over the piece is therefore at one
    // of the two ends, and the tail A t^{1/p-1} is monotone; evaluating
    // t^{1/p} avg(t) at the edges is exact.  (p = 1 makes every piece
    // nondecreasing, giving the L^1 identity sup t avg(t) = Integral g.)
    if (!(p >= 1.0)) throw std::domain_error("averaged_step_norm: requires p >= 1");
    double best = 0.0;
    for (std::size_t i = 1; i < avg.edges().size(); ++i) {
      const double b = avg.edges()[i];
      best = std::max(best, std::pow(b, 1.0 / p) * avg.value(b));
    }
    return best;
  }
  const double q = pq.q;
  if (!(p > 1.0))
    throw std::domain_error("averaged_step_norm: the integral diverges unless p > 1");
  if (!(q >= 1.0)) throw std::domain_error("averaged_step_norm: requires q >= 1");

  const std::vector<double>& edges = g.edges;
  double sum = 0.0;
  // First piece: the average is constant, Integral_0^{b_1} (t^{1/p} v_0)^q dt/t.
  sum += std::pow(g.levels[0], q) * (p / q) * std::pow(edges[1], q / p);
  // Interior pieces: integrand t^{q/p - 1 - q} (c + v t)^q, smooth and positive.
  for (std::size_t i = 1; i < g.pieces(); ++i) {
    const double v = g.levels[i];
    const double c = avg.cumulative(edges[i]) - v * edges[i];
    const double expo = q / p - 1.0 - q;
    sum += integrate_adaptive(
        [&](double t) { return std::pow(t, expo) * std::pow(c + v * t, q); }, edges[i],
        edges[i + 1], quad_rel_tol);
  }
  // Tail: avg = A/t, Integral_{b_k}^inf A^q t^{q/p - q - 1} dt in closed form.
  const double A = avg.total();
  sum += std::pow(A, q) * std::pow(edges.back(), q / p - q) / (q - q / p);
  return std::pow(sum, 1.0 / q);
}

double lorentz_norm(const StepFunction& fstar, const LorentzParams& pq,
                    double quad_rel_tol) {
  if (pq.p == 1.0 && !pq.weak())
    throw std::domain_error("lorentz_norm: p = 1 with finite q diverges");
  return averaged_step_norm(fstar, pq, quad_rel_tol);
}

double lorentz_norm(const GridFunction& f, const LorentzParams& pq, double quad_rel_tol) {
  return lorentz_norm(decreasing_rearrangement(f), pq, quad_rel_tol);
}

GridFunction normalize_unit_lorentz(const GridFunction& f, const LorentzParams& pq) {
  const double n = lorentz_norm(f, pq);
  if (n == 0.0)
    throw std::domain_error("normalize_unit_lorentz: the zero function has no direction");
  return (1.0 / n) * f;
}

HardyReport hardy_check(const StepFunction& g, double p, double q, double slack) {
  if (!(p > 1.0) || !(q >= 1.0) || q == kInf)
    throw std::domain_error("hardy_check: requires p in (1,inf), q in [1,inf)");
  HardyReport rep;
  rep.lhs = averaged_step_norm(g, {p, q});
  rep.rhs = (p / (p - 1.0)) * lorentz_quasinorm(g, {p, q});
  rep.holds = rep.lhs <= rep.rhs * (1.0 + slack);
  return rep;
}

CalderonReport calderon_compare(const GridFunction& f, double p, double q, double q_tilde,
                                double slack) {
  if (!(q_tilde >= 1.0) || !(q_tilde <= q))
    throw std::domain_error("calderon_compare: requires 1 <= q_tilde <= q");
  const StepFunction fstar = decreasing_rearrangement(f);
  CalderonReport rep;
  rep.lhs = lorentz_norm(fstar, {p, q});
  const double inv_qt = q_tilde == kInf ? 0.0 : 1.0 / q_tilde;
  const double inv_q = q == kInf ? 0.0 : 1.0 / q;
  rep.factor = q_tilde == kInf ? 1.0 : std::pow(q_tilde / p, inv_qt - inv_q);
  const double pc = p / (p - 1.0);
  rep.rhs = pc * rep.factor * lorentz_norm(fstar, {p, q_tilde});
  rep.holds = rep.lhs <= rep.rhs * (1.0 + slack);
  rep.factor_within_bound = rep.factor <= calderon_constant() * (1.0 + slack);
  return rep;
}

}  // namespace rieszlab
