#include "rieszlab/content.hpp"

#include "rieszlab/potentials.hpp"
#include "rieszlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rieszlab {

namespace {

double dot3(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int d = 0; d < dim; ++d) s += a[d] * b[d];
  return s;
}

}  // namespace

ContentTree::ContentTree(const Domain& dom, double beta) : dom_(dom), beta_(beta) {
  if (!(beta > 0.0) || !(beta <= dom.dim()))
    throw std::invalid_argument("ContentTree: requires beta in (0, N]");
  omega_beta_ = unit_ball_volume(beta);

  // Directions for the support maxima, with the secant of the largest angular
  // gap: any point of the set lies within sec * max_k (h_k - dir_k . z) of z.
  const int dim = dom_.dim();
  if (dim == 1) {
    dirs_ = {Point{1, 0, 0}, Point{-1, 0, 0}};
    sec_ = 1.0;
  } else if (dim == 2) {
    const int K = 32;
    for (int k = 0; k < K; ++k) {
      const double a = 2.0 * std::numbers::pi * k / K;
      dirs_.push_back(Point{std::cos(a), std::sin(a), 0.0});
    }
    sec_ = 1.0 / std::cos(std::numbers::pi / K);
  } else {
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y)
        for (int z = -1; z <= 1; ++z) {
          if (!x && !y && !z) continue;
          const double n = std::sqrt(double(x * x + y * y + z * z));
          dirs_.push_back(Point{x / n, y / n, z / n});
        }
    sec_ = 1.0 / 0.88644;  // worst gap of the 26-direction set
  }
  n_dirs_ = static_cast<int>(dirs_.size());
  cell_reach_.resize(n_dirs_);
  for (int k = 0; k < n_dirs_; ++k) {
    double reach = 0.0;
    for (int d = 0; d < dim; ++d) reach += std::abs(dirs_[k][d]) * 0.5 * dom_.spacing(d);
    cell_reach_[k] = reach;
  }

  const std::int32_t lo[3] = {0, 0, 0};
  std::int32_t hi[3] = {1, 1, 1};
  for (int d = 0; d < dim; ++d) hi[d] = dom_.cells(d);
  make_node(lo, hi);
}

std::int32_t ContentTree::make_node(const std::int32_t lo[3], const std::int32_t hi[3]) {
  Node n;
  std::fill(std::begin(n.child), std::end(n.child), -1);
  for (int d = 0; d < 3; ++d) {
    n.span_lo[d] = lo[d];
    n.span_hi[d] = hi[d];
    n.bb_lo[d] = 0;
    n.bb_hi[d] = -1;
  }
  pool_.push_back(n);
  support_.insert(support_.end(), n_dirs_, -kInf);
  return static_cast<std::int32_t>(pool_.size() - 1);
}

Point ContentTree::bbox_center(const Node& n) const {
  Point z{};
  for (int d = 0; d < dom_.dim(); ++d) {
    const double lo = dom_.lower(d) + n.bb_lo[d] * dom_.spacing(d);
    const double hi = dom_.lower(d) + (n.bb_hi[d] + 1) * dom_.spacing(d);
    z[d] = 0.5 * (lo + hi);
  }
  return z;
}

double ContentTree::ball_radius(std::int32_t idx) const {
  const Node& n = pool_[idx];
  double diag2 = 0.0;
  for (int d = 0; d < dom_.dim(); ++d) {
    const double extent = (n.bb_hi[d] - n.bb_lo[d] + 1) * dom_.spacing(d);
    diag2 += extent * extent;
  }
  const double box_radius = 0.5 * std::sqrt(diag2);
  const Point z = bbox_center(n);
  const double* sup = &support_[static_cast<std::size_t>(idx) * n_dirs_];
  double reach = 0.0;
  for (int k = 0; k < n_dirs_; ++k)
    reach = std::max(reach, sup[k] - dot3(dirs_[k], z, dom_.dim()));
  return std::min(box_radius, sec_ * reach);
}

double ContentTree::ball_cost(std::int32_t idx) const {
  return omega_beta_ * std::pow(ball_radius(idx), beta_);
}

Ball ContentTree::enclosing_ball(std::int32_t idx) const {
  Ball b;
  b.center = bbox_center(pool_[idx]);
  b.radius = ball_radius(idx);
  return b;
}

void ContentTree::clear() {
  pool_.clear();
  support_.clear();
  inserted_ = 0;
  const std::int32_t lo[3] = {0, 0, 0};
  std::int32_t hi[3] = {1, 1, 1};
  for (int d = 0; d < dom_.dim(); ++d) hi[d] = dom_.cells(d);
  make_node(lo, hi);
}

void ContentTree::insert(std::int64_t cell) {
  const auto idx = dom_.multi_index(cell);
  const Point center = dom_.center(idx);
  ++inserted_;

  std::int32_t path[64];
  int depth = 0;
  std::int32_t cur = 0;
  for (;;) {
    path[depth++] = cur;
    Node& n = pool_[cur];
    // Grow the bounding box and the directional support maxima.
    if (n.count == 0) {
      for (int d = 0; d < 3; ++d) n.bb_lo[d] = n.bb_hi[d] = idx[d];
    } else {
      for (int d = 0; d < dom_.dim(); ++d) {
        n.bb_lo[d] = std::min(n.bb_lo[d], idx[d]);
        n.bb_hi[d] = std::max(n.bb_hi[d], idx[d]);
      }
    }
    ++n.count;
    double* sup = &support_[static_cast<std::size_t>(cur) * n_dirs_];
    for (int k = 0; k < n_dirs_; ++k)
      sup[k] = std::max(sup[k], dot3(dirs_[k], center, dom_.dim()) + cell_reach_[k]);

    bool leaf = true;
    for (int d = 0; d < dom_.dim(); ++d)
      if (n.span_hi[d] - n.span_lo[d] > 1) leaf = false;
    if (leaf) break;

    int octant = 0;
    std::int32_t clo[3] = {n.span_lo[0], n.span_lo[1], n.span_lo[2]};
    std::int32_t chi[3] = {n.span_hi[0], n.span_hi[1], n.span_hi[2]};
    for (int d = 0; d < dom_.dim(); ++d) {
      if (n.span_hi[d] - n.span_lo[d] <= 1) continue;
      const std::int32_t mid = n.span_lo[d] + (n.span_hi[d] - n.span_lo[d]) / 2;
      if (idx[d] >= mid) {
        octant |= 1 << d;
        clo[d] = mid;
      } else {
        chi[d] = mid;
      }
    }
    std::int32_t next = pool_[cur].child[octant];
    if (next < 0) {
      next = make_node(clo, chi);  // may invalidate references into pool_
      pool_[cur].child[octant] = next;
    }
    cur = next;
  }

  // Recompute costs along the path, leaf upward.
  for (int k = depth - 1; k >= 0; --k) {
    Node& n = pool_[path[k]];
    if (k == depth - 1) {
      n.cost = ball_cost(path[k]);
      continue;
    }
    double sum = 0.0;
    for (int c = 0; c < 8; ++c)
      if (n.child[c] >= 0) sum += pool_[n.child[c]].cost;
    n.child_sum = sum;
    n.cost = std::min(ball_cost(path[k]), sum);
  }
}

double ContentTree::value() const { return pool_[0].count == 0 ? 0.0 : pool_[0].cost; }

void ContentTree::collect(std::int32_t idx, std::vector<Ball>& out) const {
  const Node& n = pool_[idx];
  if (n.count == 0) return;
  bool leaf = true;
  for (int d = 0; d < dom_.dim(); ++d)
    if (n.span_hi[d] - n.span_lo[d] > 1) leaf = false;
  if (leaf || ball_cost(idx) <= n.child_sum) {
    out.push_back(enclosing_ball(idx));
    return;
  }
  for (int c = 0; c < 8; ++c)
    if (n.child[c] >= 0) collect(n.child[c], out);
}

CoverEstimate ContentTree::cover() const {
  CoverEstimate est;
  est.beta = beta_;
  est.value = value();
  if (inserted_ > 0) collect(0, est.balls);
  return est;
}

CoverEstimate content_upper(const CellSet& set, double beta) {
  ContentTree tree(set.domain, beta);
  for (std::int64_t cell : set.members) tree.insert(cell);
  return tree.cover();
}

bool cover_is_valid(const CoverEstimate& estimate, const CellSet& set, double tol) {
  const Domain& dom = set.domain;
  for (std::int64_t cell : set.members) {
    const Point c = dom.center(cell);
    bool covered = false;
    for (const Ball& b : estimate.balls) {
      // Farthest corner of the cell from the ball center.
      double dist2 = 0.0;
      for (int d = 0; d < dom.dim(); ++d) {
        const double half = 0.5 * dom.spacing(d);
        const double far_corner = std::abs(c[d] - b.center[d]) + half;
        dist2 += far_corner * far_corner;
      }
      if (std::sqrt(dist2) <= b.radius * (1.0 + tol)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

double weak_type_constant(int dim, double gamma) {
  if (!(gamma >= 0.0) || !(gamma < dim))
    throw std::invalid_argument("weak_type_constant: requires gamma in [0, N)");
  return unit_ball_volume(dim - gamma) * std::pow(5.0, dim - gamma) /
         unit_ball_volume(dim);
}

InequalityReport weak_type_check(const GridFunction& f, double gamma,
                                 std::span<const double> ts, double slack, int n_threads) {
  if ((f.values() < 0.0).any())
    throw std::invalid_argument("weak_type_check: requires f >= 0");
  InequalityReport rep{"weak_type_maximal"};
  const int dim = f.domain().dim();
  const double c5 = weak_type_constant(dim, gamma);
  const double l1 = f.l1_norm();
  const GridFunction m = fractional_maximal(f, gamma, n_threads);

  // Level sets grow as t decreases; sweep t downward and extend one tree.
  std::vector<double> sorted_ts(ts.begin(), ts.end());
  std::sort(sorted_ts.begin(), sorted_ts.end(), std::greater<double>());
  std::vector<std::int64_t> order(m.values().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    if (m.value(a) != m.value(b)) return m.value(a) > m.value(b);
    return a < b;
  });

  ContentTree tree(f.domain(), dim - gamma);
  std::size_t next = 0;
  for (double t : sorted_ts) {
    if (!(t > 0.0)) throw std::invalid_argument("weak_type_check: requires t > 0");
    while (next < order.size() && m.value(order[next]) > t) tree.insert(order[next++]);
    const double lhs = tree.value();
    const double rhs = c5 * l1 / t;
    const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? kInf : 0.0);
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.lhs = lhs;
      rep.rhs = rhs;
      rep.worst_at = t;
    }
    if (!(lhs <= rhs * (1.0 + slack))) rep.holds = false;
    ++rep.samples;
  }
  return rep;
}

double choquet_integral(const GridFunction& g, double beta) {
  if ((g.values() < 0.0).any())
    throw std::invalid_argument("choquet_integral: requires g >= 0");
  std::vector<std::int64_t> order(g.values().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    if (g.value(a) != g.value(b)) return g.value(a) > g.value(b);
    return a < b;
  });

  ContentTree tree(g.domain(), beta);
  double integral = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double v = g.value(order[i]);
    if (v <= 0.0) break;
    while (i < order.size() && g.value(order[i]) == v) tree.insert(order[i++]);
    const double next_v = (i < order.size() && g.value(order[i]) > 0.0) ? g.value(order[i]) : 0.0;
    // {g > t} = the inserted set for t in [next_v, v).
    integral += (v - next_v) * tree.value();
  }
  return integral;
}

}  // namespace rieszlab
