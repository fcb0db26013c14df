#include "rieszlab/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rieszlab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  return os;
}

}  // namespace

void save_grid(std::ostream& os, const GridFunction& f) {
  const Domain& d = f.domain();
  os << "rieszlab-grid 1\n";
  os << "dim " << d.dim() << "\n";
  os << "cells";
  for (int a = 0; a < d.dim(); ++a) os << ' ' << d.cells(a);
  os << "\nlower";
  for (int a = 0; a < d.dim(); ++a) os << ' ' << fmt17(d.lower(a));
  os << "\nupper";
  for (int a = 0; a < d.dim(); ++a) os << ' ' << fmt17(d.upper(a));
  os << "\nvalues\n";
  for (std::int64_t i = 0; i < f.values().size(); ++i) os << fmt17(f.values()[i]) << "\n";
}

void save_grid(const std::string& path, const GridFunction& f) {
  auto os = open_out(path);
  save_grid(os, f);
}

GridFunction load_grid(std::istream& is) {
  std::string tag;
  int version = 0;
  is >> tag >> version;
  if (tag != "rieszlab-grid" || version != 1)
    throw std::runtime_error("load_grid: unrecognized header");
  std::string key;
  int dim = 0;
  is >> key >> dim;
  if (key != "dim" || dim < 1 || dim > 3) throw std::runtime_error("load_grid: bad dim");
  std::array<int, 3> cells{1, 1, 1};
  Point lo{}, hi{};
  is >> key;
  if (key != "cells") throw std::runtime_error("load_grid: expected cells");
  for (int a = 0; a < dim; ++a) is >> cells[a];
  is >> key;
  if (key != "lower") throw std::runtime_error("load_grid: expected lower");
  for (int a = 0; a < dim; ++a) is >> lo[a];
  is >> key;
  if (key != "upper") throw std::runtime_error("load_grid: expected upper");
  for (int a = 0; a < dim; ++a) is >> hi[a];
  is >> key;
  if (key != "values") throw std::runtime_error("load_grid: expected values");
  Domain dom(dim, lo, hi, cells);
  ArrayXd v(dom.cell_count());
  for (std::int64_t i = 0; i < dom.cell_count(); ++i) {
    if (!(is >> v[i])) throw std::runtime_error("load_grid: truncated values");
  }
  return GridFunction(dom, std::move(v));
}

GridFunction load_grid(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return load_grid(is);
}

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  const Domain& d = f.domain();
  for (int a = 0; a < d.dim(); ++a) os << 'x' << a << ',';
  os << "value\n";
  for (std::int64_t i = 0; i < f.values().size(); ++i) {
    const Point c = d.center(i);
    for (int a = 0; a < d.dim(); ++a) os << fmt17(c[a]) << ',';
    os << fmt17(f.values()[i]) << "\n";
  }
}

void write_grid_csv(const std::string& path, const GridFunction& f) {
  auto os = open_out(path);
  write_grid_csv(os, f);
}

void write_step_csv(std::ostream& os, const StepFunction& g) {
  os << "left_edge,right_edge,level\n";
  for (std::size_t i = 0; i < g.pieces(); ++i)
    os << fmt17(g.edges[i]) << ',' << fmt17(g.edges[i + 1]) << ',' << fmt17(g.levels[i])
       << "\n";
}

void write_step_csv(const std::string& path, const StepFunction& g) {
  auto os = open_out(path);
  write_step_csv(os, g);
}

}  // namespace rieszlab
