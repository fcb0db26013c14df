#pragma once

#include "rieszlab/content.hpp"
#include "rieszlab/grid.hpp"
#include "rieszlab/rearrangement.hpp"

#include <iosfwd>
#include <string>

namespace rieszlab {

/// Plain-text grid format: a fixed header (format tag, dim, cells, lower,
/// upper) followed by one row-major value per line, printed with 17
/// significant digits so save/load round-trips bit-exactly.
void save_grid(std::ostream& os, const GridFunction& f);
void save_grid(const std::string& path, const GridFunction& f);
GridFunction load_grid(std::istream& is);
GridFunction load_grid(const std::string& path);

/// CSV with one row per cell: center coordinates then the value.
void write_grid_csv(std::ostream& os, const GridFunction& f);
void write_grid_csv(const std::string& path, const GridFunction& f);

/// CSV rows (left_edge, right_edge, level) of a step function.
void write_step_csv(std::ostream& os, const StepFunction& g);
void write_step_csv(const std::string& path, const StepFunction& g);

}  // namespace rieszlab
