#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rzero/common.hpp"

namespace rzero {

using ComplexFunction = std::function<cplx(ComplexPoint)>;

enum class SegmentKind { straight, left_curve, circle };
enum class Orientation { forward, reverse };

/// An oriented piece of a contour, parametrised by tau in [0, 1] in its
/// forward direction.
///   straight:   start -> end
///   left_curve: sigma(t) = 1 - a_desk t^{2/5} log t, t from t_lo to t_hi
///   circle:     centre + radius e^{2 pi i tau}, counter-clockwise
struct PathSegment {
  SegmentKind kind = SegmentKind::straight;
  ComplexPoint start;
  ComplexPoint end;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double a_desk = 1.0;
  ComplexPoint centre;
  double radius = 0.0;
  Orientation orientation = Orientation::forward;

  static PathSegment straight(ComplexPoint from, ComplexPoint to);
  static PathSegment left_curve(double t_lo, double t_hi, double a_desk = 1.0,
                                Orientation orientation = Orientation::forward);
  static PathSegment circle(ComplexPoint centre, double radius);

  /// Point at forward parameter tau; axis-aligned straight segments keep the
  /// constant coordinate bit-exact.
  ComplexPoint at(double tau) const;
  ComplexPoint first_point() const;  // respecting orientation
  ComplexPoint last_point() const;
  double length_hint() const;
  PathSegment reversed() const;
};

double left_curve_sigma(double t, double a_desk);

struct ContourSpec {
  std::vector<PathSegment> segments;
  bool closed = true;

  /// Counter-clockwise boundary of [sigma_lo, sigma_hi] x [t_lo, t_hi]:
  /// bottom, right, top, left.
  static ContourSpec rectangle(double sigma_lo, double sigma_hi, double t_lo, double t_hi);

  /// Bottom and top straight edges, right edge at sigma = 2, curved left
  /// edge sigma = 1 - a t^{2/5} log t.
  static ContourSpec curved_region(double t_lo, double t_hi, double a_desk = 1.0,
                                   double sigma_right = 2.0);

  void validate() const;
};

struct ArgTrace {
  std::vector<ComplexPoint> nodes;
  std::vector<double> params;  // forward tau of each node
  std::vector<cplx> values;    // f at each node
  std::vector<double> phases;  // unwrapped arguments
  double total_variation = 0.0;
  double max_step_phase = 0.0;
};

struct ArgOptions {
  double tol = 1e-3;            // zero-on-path ratio against the local scale
  double initial_spacing = 0.5; // initial node spacing along the path
  int max_depth = 24;
  double phase_limit = 0.5 * kPi;
};

/// Unwrapped argument change of f along seg. Intervals are bisected until
/// every consecutive phase jump is below phase_limit.
ArgTrace arg_variation(const ComplexFunction& f, const PathSegment& seg,
                       const ArgOptions& options = {});

/// Bisect an existing forward trace between nodes i and i+1 as needed so the
/// contract holds again. Used after inserting nodes.
void enforce_phase_contract(const ComplexFunction& f, const PathSegment& seg, ArgTrace& trace,
                            const ArgOptions& options = {});

/// Split a forward trace of a straight segment at forward parameter tau, with
/// the split point given exactly. Returns the two halves, each re-parametrised
/// on [0, 1] and satisfying the phase contract.
std::pair<ArgTrace, ArgTrace> split_trace(const ComplexFunction& f, const PathSegment& seg,
                                          const ArgTrace& trace, double tau,
                                          ComplexPoint split_point,
                                          const ArgOptions& options = {});

struct Winding {
  int count = 0;
  double raw = 0.0;  // before rounding
  std::vector<double> segment_variations;
};

/// Winding number of f around a closed contour.
Winding winding_number(const ComplexFunction& f, const ContourSpec& contour,
                       const ArgOptions& options = {});

int winding_from_variations(double total_variation, const std::string& where);

// ----------------------------------------------------------------------------
// Backlund bound and modulus bounds.

/// Inputs to the Backlund bound, held as logarithms so that sup |f| on large
/// discs stays representable.
struct BacklundInput {
  double log_big_m = 0.0;        // log sup |f| on the disc
  double log_f_at_center = 0.0;  // log |f(a)|
  double radius = 1.0;           // R
  double reach = 0.5;            // max |z - a| on the segment

  static BacklundInput from_values(double big_m, double f_at_center, double radius,
                                   double reach);
};

/// (1/2) log(M / |f(a)|) / log(R / reach): bounds |Re (1/2 pi i) int f'/f|
/// along a segment on a line through the centre a.
double backlund_bound(const BacklundInput& input);

/// Upper bound for |R(s)| used on discs: sqrt(t / 2 pi) for sigma > 0, else
/// 19 t (2 pi)^{sigma - 1} ((1 - sigma)^2 + t^2)^{1/4 - sigma/2}. Requires
/// t > 16 pi.
double modulus_bound(double sigma, double t);
double log_modulus_bound(double sigma, double t);

/// max of log_modulus_bound over the closed disc |s - centre| <= radius.
double log_max_modulus_bound_on_disc(ComplexPoint centre, double radius);

// ----------------------------------------------------------------------------
// Counting.

struct MainTerm {
  double smooth;     // T/4pi log(T/2pi) - T/4pi
  double sqrt_term;  // (1/2) sqrt(T/2pi)
  double value() const { return smooth - sqrt_term; }
};

MainTerm main_term(double big_t);

struct Certificate {
  std::string segment;  // "L2", "L3", "left-strip", ...
  double bound = 0.0;
  double realized = 0.0;
  bool ok = false;
};

struct CountResult {
  double big_t = 0.0;
  double t_lo = 0.0;
  double box_left = 0.0;
  int count = 0;  // N(T)
  int base_count = 0;  // N(t_lo) included in count
  double smooth_part = 0.0;
  double sqrt_term = 0.0;
  double main_value = 0.0;
  double residual = 0.0;  // count - main_value
  double raw_winding = 0.0;
  std::vector<Certificate> certificates;
};

struct CountOptions {
  double tol = 1e-3;
  double strip_width = 20.0;  // left certification strip
  double sigma_right = 2.0;
  bool certify_left = true;
  /// Move the left edge by strip_width while the adjacent strip holds zeros.
  bool auto_extend_left = true;
  int max_extensions = 8;
  bool backlund_check = true;
  int max_retries = 5;
  ArgOptions arg;
};

/// Number of zeros of f in (sigma_lo, sigma_hi) x (t_lo, t_hi] by winding,
/// perturbing edges that meet a zero. Returns the winding and the edges
/// actually used.
struct BoxCount {
  int count = 0;
  double raw = 0.0;
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double top_variation = 0.0;
  double right_variation = 0.0;
};

BoxCount count_in_box(const ComplexFunction& f, double sigma_lo, double sigma_hi, double t_lo,
                      double t_hi, const CountOptions& options = {});

/// Zeros of R with 0 < gamma <= t0 in [box_left, 2], by enumeration from t = 0.
int base_count(double t0, double box_left, const CountOptions& options = {});

/// N(T) for R(s): winding on [box_left, 2] x [t_lo, t_hi] plus n_base
/// (N(t_lo); pass a negative value to compute it).
CountResult count_zeros(double t_lo, double t_hi, double box_left, double tol = 1e-3,
                        int n_base = -1, const CountOptions& options = {});

struct ResidualRow {
  CountResult result;
  double r_smooth;   // count - smooth_part
  double r_full;     // count - smooth_part + sqrt_term
};

/// CountResult for each T in ts (increasing), built from stacked strips.
std::vector<ResidualRow> residual_table(const std::vector<double>& ts, double t_lo = 10.0,
                                        double box_left = -6.0, int n_base = -1,
                                        const CountOptions& options = {});

/// Least-squares c in count - smooth ~ c sqrt(T / 2 pi).
double fit_sqrt_coefficient(const std::vector<ResidualRow>& rows);

/// Least-squares (c, d) in count - smooth ~ c sqrt(T / 2 pi) + d.
std::pair<double, double> fit_sqrt_with_offset(const std::vector<ResidualRow>& rows);

}  // namespace rzero
