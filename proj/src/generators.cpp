#include "rieszlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rieszlab {

namespace {

void require_center_inside(const Point& c, const Domain& dom, const char* what) {
  if (!dom.contains(c))
    throw std::invalid_argument(std::string(what) + ": center lies outside the domain");
}

ArrayXd sample_pointwise(const Domain& dom, const std::function<double(const Point&)>& fn) {
  ArrayXd v(dom.cell_count());
  for (std::int64_t i = 0; i < dom.cell_count(); ++i) v[i] = fn(dom.center(i));
  return v;
}

}  // namespace

GridFunction generate(const TestFunctionSpec& spec, const Domain& dom) {
  struct Visitor {
    const Domain& dom;

    GridFunction operator()(const BallIndicator& s) const {
      require_center_inside(s.center, dom, "BallIndicator");
      if (!(s.radius > 0.0))
        throw std::invalid_argument("BallIndicator: radius must be positive");
      for (int d = 0; d < dom.dim(); ++d) {
        if (s.center[d] - s.radius < dom.lower(d) || s.center[d] + s.radius > dom.upper(d))
          throw std::invalid_argument("BallIndicator: ball extends outside the domain");
      }
      const double r2 = s.radius * s.radius;
      return GridFunction(dom, sample_pointwise(dom, [&](const Point& x) {
                            return squared_distance(x, s.center, dom.dim()) <= r2 ? s.height
                                                                                  : 0.0;
                          }));
    }

    GridFunction operator()(const RadialPower& s) const {
      require_center_inside(s.center, dom, "RadialPower");
      if (!(s.cap > 0.0)) throw std::invalid_argument("RadialPower: cap must be positive");
      return GridFunction(dom, sample_pointwise(dom, [&](const Point& x) {
                            const double r =
                                std::sqrt(squared_distance(x, s.center, dom.dim()));
                            if (s.outer_radius > 0.0 && r >= s.outer_radius) return 0.0;
                            if (r == 0.0) return s.cap;
                            return std::min(s.cap, std::pow(r, -s.exponent));
                          }));
    }

    GridFunction operator()(const LogKernel& s) const {
      require_center_inside(s.center, dom, "LogKernel");
      return GridFunction(dom, sample_pointwise(dom, [&](const Point& x) {
                            const double r =
                                std::sqrt(squared_distance(x, s.center, dom.dim()));
                            if (r == 0.0) return s.cap;
                            return std::clamp(-std::log(r), 0.0, s.cap);
                          }));
    }

    GridFunction operator()(const SmoothBumps& s) const {
      if (s.count <= 0) throw std::invalid_argument("SmoothBumps: count must be positive");
      std::mt19937_64 rng(s.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      struct Bump {
        Point c;
        double inv_two_sigma2, amp;
      };
      std::vector<Bump> bumps(s.count);
      for (auto& b : bumps) {
        for (int d = 0; d < dom.dim(); ++d)
          b.c[d] = dom.lower(d) + unit(rng) * (dom.upper(d) - dom.lower(d));
        const double sigma = (0.05 + 0.20 * unit(rng)) * dom.diameter();
        b.inv_two_sigma2 = 1.0 / (2.0 * sigma * sigma);
        b.amp = 0.3 + 0.7 * unit(rng);
      }
      return GridFunction(dom, sample_pointwise(dom, [&](const Point& x) {
                            double v = 0.0;
                            for (const auto& b : bumps)
                              v += b.amp * std::exp(-squared_distance(x, b.c, dom.dim()) *
                                                    b.inv_two_sigma2);
                            return v;
                          }));
    }

    GridFunction operator()(const UniformNoise& s) const {
      if (!(s.hi >= s.lo)) throw std::invalid_argument("UniformNoise: hi must be >= lo");
      std::mt19937_64 rng(s.seed);
      std::uniform_real_distribution<double> dist(s.lo, s.hi);
      ArrayXd v(dom.cell_count());
      for (std::int64_t i = 0; i < dom.cell_count(); ++i) v[i] = dist(rng);
      return GridFunction(dom, std::move(v));
    }
  };
  return std::visit(Visitor{dom}, spec);
}

}  // namespace rieszlab
