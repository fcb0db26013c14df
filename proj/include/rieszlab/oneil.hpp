#pragma once

#include "rieszlab/grid.hpp"
#include "rieszlab/rearrangement.hpp"

#include <string>
#include <vector>

namespace rieszlab {

/// Discrete convolution h[k] = sum_j f[j] g[k-j] cell_measure with zero
/// padding, carried on the Minkowski-sum grid (2M-1 cells per axis, same
/// spacing).  Exact for piecewise-constant mass lumped at cell centers:
/// ||h||_1 = ||f||_1 ||g||_1 for nonnegative inputs.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

enum class ProductKind { pointwise, convolution };

/// A product-operator instance h = P(f, g).  Construction validates the three
/// operator axioms numerically:
///   ||h||_inf <= ||f||_inf ||g||_inf,
///   ||h||_1   <= ||f||_1   ||g||_inf,
///   ||h||_1   <= ||f||_inf ||g||_1.
/// For convolution these require the common box to have measure at most 1.
struct ProductInstance {
  ProductKind kind;
  GridFunction f, g, h;
};

ProductInstance make_product(ProductKind kind, const GridFunction& f,
                             const GridFunction& g, double axiom_slack = 1e-10);

struct InequalityReport {
  std::string inequality;
  bool holds = true;
  double worst_ratio = 0.0;  // max over samples of lhs/rhs
  double lhs = 0.0, rhs = 0.0;  // values at the worst sample
  double worst_at = 0.0;        // sample location (x, t, ...) of the worst ratio
  std::size_t samples = 0;
};

/// x h**(x) <= Integral_0^x f*(t) g*(t) dt at log-spaced x plus the
/// breakpoints of h*.  Both sides exact on step data.
InequalityReport verify_lemma15(const ProductInstance& inst, std::size_t n_samples = 200,
                                double slack = 1e-9);

/// With a = ||f||_inf and s = |supp f|, checks h**(t) <= a g**(t) and
/// h**(t) <= a (s/t) g**(s) for both product kinds at sampled t.
InequalityReport verify_lemma14(const GridFunction& f, const GridFunction& g,
                                std::size_t n_samples = 200, double slack = 1e-9);

/// ||fg||_{p,q} <= e^{1/e} p' |||f|||_{p1,q1} |||g|||_{p2,q2} for the pointwise
/// product, with 1/p = 1/p1 + 1/p2 > ... and q the smallest admissible second
/// exponent max(1, (1/q1 + 1/q2)^{-1}).
InequalityReport verify_holder(const GridFunction& f, const GridFunction& g, double p1,
                               double q1, double p2, double q2, double slack = 1e-9);

/// ||fg||_1 <= e^{1/e} |||f|||_{p1,q1} |||g|||_{p2,q2} when 1/p1 + 1/p2 = 1 and
/// 1/q1 + 1/q2 >= 1.
InequalityReport verify_holder_L1(const GridFunction& f, const GridFunction& g, double p1,
                                  double q1, double p2, double q2, double slack = 1e-9);

}  // namespace rieszlab
