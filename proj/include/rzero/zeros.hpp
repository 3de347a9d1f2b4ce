#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "rzero/argument.hpp"

namespace rzero {

struct Rectangle {
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;

  double width() const { return sigma_hi - sigma_lo; }
  double height() const { return t_hi - t_lo; }
  double max_side() const { return std::max(width(), height()); }
  ComplexPoint centre() const {
    return {0.5 * (sigma_lo + sigma_hi), 0.5 * (t_lo + t_hi)};
  }
  bool contains(ComplexPoint s, double margin = 0.0) const {
    return s.sigma >= sigma_lo - margin && s.sigma <= sigma_hi + margin &&
           s.t >= t_lo - margin && s.t <= t_hi + margin;
  }
};

struct Zero {
  double beta = 0.0;
  double gamma = 0.0;
  double enclosure_radius = 0.0;
  int winding_certificate = 0;
  double residual_modulus = 0.0;
  /// Magnitude scale of f near the zero (1 for plain functions); the
  /// residual is judged against it.
  double residual_scale = 1.0;
  std::vector<double> newton_steps;  // |step| of each iteration of the final run
};

struct IsolateOptions {
  double min_size = 1e-3;   // clusters below this side length are reported
  double seed_size = 0.5;   // winding-1 boxes are split until this size
  double tol = 1e-3;        // perturbation step for boundary zeros
  int max_retries = 5;
  ArgOptions arg;
};

struct IsolationResult {
  int box_winding = 0;
  Rectangle box;                       // the box actually used (after perturbation)
  std::vector<Rectangle> isolated;     // winding 1 each
  std::vector<Rectangle> clusters;     // winding >= 2 below min_size
  std::vector<int> cluster_windings;
};

/// Quad-tree subdivision driven by winding numbers; shared edges reuse their
/// argument traces.
IsolationResult isolate_zeros(const ComplexFunction& f, const Rectangle& box,
                              const IsolateOptions& options = {});

using DerivativeFunction = std::function<cplx(ComplexPoint)>;

struct RefineOptions {
  double step_tol = 1e-10;
  int max_iterations = 50;
  int max_fallbacks = 30;
  IsolateOptions isolate;
};

/// Newton iteration from the seed centre, with subdivision fallback when an
/// iterate leaves twice the seed, then a winding-1 check on a small circle.
Zero refine_zero(const ComplexFunction& f, const DerivativeFunction& df, const Rectangle& seed,
                 const RefineOptions& options = {});

/// refine_zero for R(s) with the Cauchy-ring derivative.
Zero refine_r_zero(const Rectangle& seed, const RefineOptions& options = {});

struct LocateResult {
  Rectangle box;
  int box_winding = 0;
  std::vector<Zero> zeros;  // ordered by gamma, then beta
  std::vector<Rectangle> clusters;
};

/// isolate_zeros + refine_zero for R(s) on a box.
LocateResult locate_r_zeros(const Rectangle& box, const RefineOptions& options = {});

struct ZeroStatistics {
  int count = 0;
  double fraction_right = 0.0;  // share with beta > 1/2
  double min_beta = 0.0;
  double max_beta = 0.0;
  double mean_gap = 0.0;  // mean spacing of consecutive gammas
};

ZeroStatistics zero_statistics(const std::vector<Zero>& zeros);

/// Sort by gamma, then beta.
void sort_zeros(std::vector<Zero>& zeros);

}  // namespace rzero
