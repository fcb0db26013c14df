#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <vector>

namespace rieszlab {

using Eigen::ArrayXd;

/// A point in R^N, N <= 3; unused trailing coordinates are zero.
using Point = std::array<double, 3>;

inline double squared_distance(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int d = 0; d < dim; ++d) {
    const double diff = a[d] - b[d];
    s += diff * diff;
  }
  return s;
}

/// A rectangular box in dimension 1..3 with a uniform cell grid.  Cells are
/// indexed row-major with the last axis fastest; values attached to a cell are
/// interpreted as constant on the cell (sampled at its center).
class Domain {
 public:
  static constexpr std::int64_t kDefaultMaxCells = std::int64_t{1} << 20;

  Domain(int dim, const Point& lower, const Point& upper,
         const std::array<int, 3>& cells, std::int64_t max_cells = kDefaultMaxCells);

  /// [0,1]^dim with the same cell count along every axis.
  static Domain unit_box(int dim, int cells_per_axis);
  /// [lo,hi]^dim with the same cell count along every axis.
  static Domain cube(int dim, double lo, double hi, int cells_per_axis);

  int dim() const { return dim_; }
  double lower(int axis) const { return lower_[axis]; }
  double upper(int axis) const { return upper_[axis]; }
  int cells(int axis) const { return cells_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double min_spacing() const;

  std::int64_t cell_count() const { return cell_count_; }
  /// Product of spacings: the Lebesgue measure of one cell.
  double cell_measure() const { return cell_measure_; }
  /// Measure of the whole box.
  double measure() const { return cell_measure_ * static_cast<double>(cell_count_); }
  double diameter() const;

  std::int64_t flat_index(const std::array<int, 3>& idx) const;
  std::array<int, 3> multi_index(std::int64_t flat) const;
  Point center(std::int64_t flat) const;
  Point center(const std::array<int, 3>& idx) const;

  bool contains(const Point& x) const;

  bool operator==(const Domain& other) const;
  bool operator!=(const Domain& other) const { return !(*this == other); }

 private:
  int dim_;
  Point lower_{}, upper_{}, spacing_{};
  std::array<int, 3> cells_{};
  std::int64_t cell_count_;
  double cell_measure_;
};

/// A real-valued function sampled at cell centers and treated as piecewise
/// constant.  Immutable after construction; values are validated to be finite.
/// Its support is contained in the domain box by construction.
class GridFunction {
 public:
  GridFunction(Domain domain, ArrayXd values);

  const Domain& domain() const { return domain_; }
  const ArrayXd& values() const { return values_; }
  double value(std::int64_t cell) const { return values_[cell]; }

  double max_abs() const { return values_.size() ? values_.abs().maxCoeff() : 0.0; }
  /// Integral of |f| over the box.
  double l1_norm() const { return values_.abs().sum() * domain_.cell_measure(); }
  /// (Integral of |f|^p)^{1/p}.
  double lp_norm(double p) const;
  /// Integral of f (signed).
  double integral() const { return values_.sum() * domain_.cell_measure(); }
  /// Measure of {f != 0}.
  double support_measure() const;

 private:
  Domain domain_;
  ArrayXd values_;
};

/// A finite set of cells of a common grid; members are sorted flat indices.
struct CellSet {
  Domain domain;
  std::vector<std::int64_t> members;

  double measure() const {
    return domain.cell_measure() * static_cast<double>(members.size());
  }
  bool empty() const { return members.empty(); }
};

/// Cells where |f| > t.  Requires t >= 0.
CellSet level_set(const GridFunction& f, double t);

GridFunction operator*(double s, const GridFunction& f);
GridFunction operator+(const GridFunction& f, const GridFunction& g);

}  // namespace rieszlab
