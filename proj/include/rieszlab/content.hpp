#pragma once

#include "rieszlab/grid.hpp"
#include "rieszlab/oneil.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rieszlab {

struct Ball {
  Point center{};
  double radius = 0.0;
};

/// A certified upper bound on the Hausdorff content: a finite list of balls
/// covering every cell of the target set, with value = sum omega_beta r_i^beta.
struct CoverEstimate {
  double beta = 0.0;
  double value = 0.0;
  std::vector<Ball> balls;
};

/// Upper bounds H^beta_inf of cell sets by a cover search over the dyadic
/// partition tree of the grid.  Each tree node may either enclose all inserted
/// cells below it in one ball or delegate to its children; the reported value
/// is the tree-optimal choice, so it dominates every fixed-level dyadic cube
/// cover and the single enclosing ball of the whole set.
///
/// The per-node ball is centered at the bounding box of the node's inserted
/// cells and its radius comes from exact directional support maxima, so round
/// sets are enclosed at their true radius rather than the box circumradius.
/// Monotonicity under inclusion and subadditivity under union hold on the
/// shared dyadic family (a cover of the larger set covers the smaller); the
/// usual box-counting caveat applies to sets straddling the coarsest cuts.
///
/// Cells are inserted one at a time (O(depth) per insert), which makes exact
/// layer-cake sweeps over all level sets of a grid function cheap.
class ContentTree {
 public:
  ContentTree(const Domain& dom, double beta);

  void insert(std::int64_t cell);
  /// Current certified upper bound for the inserted set.
  double value() const;
  std::int64_t size() const { return inserted_; }
  void clear();

  /// The chosen antichain of balls (ties prefer the coarser ball).
  CoverEstimate cover() const;

 private:
  struct Node {
    std::int32_t child[8];
    std::int32_t span_lo[3], span_hi[3];  // node cell range, half-open
    std::int32_t bb_lo[3], bb_hi[3];      // bbox of inserted cells, inclusive
    double cost = 0.0, child_sum = 0.0;
    std::int64_t count = 0;
  };

  double ball_radius(std::int32_t idx) const;
  double ball_cost(std::int32_t idx) const;
  Ball enclosing_ball(std::int32_t idx) const;
  Point bbox_center(const Node& n) const;
  std::int32_t make_node(const std::int32_t lo[3], const std::int32_t hi[3]);
  void collect(std::int32_t idx, std::vector<Ball>& out) const;

  Domain dom_;
  double beta_;
  double omega_beta_;
  int n_dirs_ = 0;
  double sec_ = 1.0;                 // support-cone secant bound
  std::vector<Point> dirs_;          // unit directions for support maxima
  std::vector<double> cell_reach_;   // per direction: support radius of one cell
  std::vector<Node> pool_;
  std::vector<double> support_;      // pool-parallel, n_dirs_ entries per node
  std::int64_t inserted_ = 0;
};

/// Minimum over the candidate cover family for one set; beta in (0, N].
CoverEstimate content_upper(const CellSet& set, double beta);

/// Rasterized containment check: every member cell fully inside some ball.
bool cover_is_valid(const CoverEstimate& estimate, const CellSet& set, double tol = 1e-9);

/// Weak-type bound for the fractional maximal function:
///   H^{N-gamma}_inf({M_gamma f > t}) <= C5 ||f||_1 / t,
/// C5 = omega_{N-gamma} 5^{N-gamma} / |B(0,1)|, checked at the given t values.
InequalityReport weak_type_check(const GridFunction& f, double gamma,
                                 std::span<const double> ts, double slack = 1e-9,
                                 int n_threads = 0);

double weak_type_constant(int dim, double gamma);

/// Layer-cake integral Integral_0^inf content_upper({g > t}) dt, evaluated
/// exactly over the distinct values of g (the content is constant between
/// consecutive values).  Requires g >= 0.
double choquet_integral(const GridFunction& g, double beta);

}  // namespace rieszlab
