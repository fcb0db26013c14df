#include "rieszlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rieszlab {

Domain::Domain(int dim, const Point& lower, const Point& upper,
               const std::array<int, 3>& cells, std::int64_t max_cells)
    : dim_(dim), lower_(lower), upper_(upper), cells_(cells) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("Domain: dim must be 1, 2, or 3");
  cell_count_ = 1;
  cell_measure_ = 1.0;
  for (int d = 0; d < dim_; ++d) {
    if (!(upper_[d] > lower_[d]))
      throw std::invalid_argument("Domain: upper must exceed lower on every axis");
    if (cells_[d] <= 0) throw std::invalid_argument("Domain: cells_per_axis must be positive");
    spacing_[d] = (upper_[d] - lower_[d]) / cells_[d];
    cell_count_ *= cells_[d];
    cell_measure_ *= spacing_[d];
  }
  for (int d = dim_; d < 3; ++d) {
    lower_[d] = upper_[d] = spacing_[d] = 0.0;
    cells_[d] = 1;
  }
  if (cell_count_ > max_cells)
    throw std::invalid_argument("Domain: total cell count " + std::to_string(cell_count_) +
                                " exceeds cap " + std::to_string(max_cells));
}

Domain Domain::unit_box(int dim, int cells_per_axis) {
  return cube(dim, 0.0, 1.0, cells_per_axis);
}

Domain Domain::cube(int dim, double lo, double hi, int cells_per_axis) {
  return Domain(dim, Point{lo, lo, lo}, Point{hi, hi, hi},
                {cells_per_axis, cells_per_axis, cells_per_axis});
}

double Domain::min_spacing() const {
  double h = spacing_[0];
  for (int d = 1; d < dim_; ++d) h = std::min(h, spacing_[d]);
  return h;
}

double Domain::diameter() const {
  double s = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double e = upper_[d] - lower_[d];
    s += e * e;
  }
  return std::sqrt(s);
}

std::int64_t Domain::flat_index(const std::array<int, 3>& idx) const {
  std::int64_t flat = 0;
  for (int d = 0; d < dim_; ++d) flat = flat * cells_[d] + idx[d];
  return flat;
}

std::array<int, 3> Domain::multi_index(std::int64_t flat) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int d = dim_ - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(flat % cells_[d]);
    flat /= cells_[d];
  }
  return idx;
}

Point Domain::center(std::int64_t flat) const { return center(multi_index(flat)); }

Point Domain::center(const std::array<int, 3>& idx) const {
  Point x{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d) x[d] = lower_[d] + (idx[d] + 0.5) * spacing_[d];
  return x;
}

bool Domain::contains(const Point& x) const {
  for (int d = 0; d < dim_; ++d)
    if (x[d] < lower_[d] || x[d] > upper_[d]) return false;
  return true;
}

bool Domain::operator==(const Domain& other) const {
  if (dim_ != other.dim_) return false;
  for (int d = 0; d < dim_; ++d) {
    if (lower_[d] != other.lower_[d] || upper_[d] != other.upper_[d] ||
        cells_[d] != other.cells_[d])
      return false;
  }
  return true;
}

GridFunction::GridFunction(Domain domain, ArrayXd values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.cell_count())
    throw std::invalid_argument("GridFunction: value count does not match the grid");
  if (!values_.allFinite())
    throw std::invalid_argument("GridFunction: values must be finite");
}

double GridFunction::lp_norm(double p) const {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  const double s = values_.abs().pow(p).sum() * domain_.cell_measure();
  return std::pow(s, 1.0 / p);
}

double GridFunction::support_measure() const {
  std::int64_t n = 0;
  for (std::int64_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0.0) ++n;
  return domain_.cell_measure() * static_cast<double>(n);
}

CellSet level_set(const GridFunction& f, double t) {
  if (t < 0.0) throw std::invalid_argument("level_set: threshold must be nonnegative");
  CellSet s{f.domain(), {}};
  const ArrayXd& v = f.values();
  for (std::int64_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > t) s.members.push_back(i);
  return s;
}

GridFunction operator*(double s, const GridFunction& f) {
  return GridFunction(f.domain(), s * f.values());
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  if (f.domain() != g.domain())
    throw std::invalid_argument("GridFunction: domains must match");
  return GridFunction(f.domain(), f.values() + g.values());
}

}  // namespace rieszlab
