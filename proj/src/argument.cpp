#include "rzero/argument.hpp"

#include <algorithm>
#include <cstdio>

#include "rzero/auxiliary.hpp"

namespace rzero {
namespace {

double interpolate(double a, double b, double tau) {
  if (a == b) return a;
  if (tau == 0.0) return a;
  if (tau == 1.0) return b;
  return a + tau * (b - a);
}

std::string describe(const PathSegment& seg, double tau) {
  return format_point(seg.at(tau));
}

void check_value(cplx v, const PathSegment& seg, double tau) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw Error(ErrorKind::non_convergence, "arg_variation: non-finite value at " + describe(seg, tau));
  }
  if (v == 0.0) {
    throw Error(ErrorKind::zero_on_path, "arg_variation: f vanishes at " + describe(seg, tau));
  }
}

struct Node {
  double tau;
  ComplexPoint z;
  cplx value;
};

/// Appends the nodes strictly after `a` up to and including `b`.
void bisect(const ComplexFunction& f, const PathSegment& seg, const Node& a, const Node& b,
            int depth, const ArgOptions& options, std::vector<Node>& out) {
  const double jump = std::arg(b.value / a.value);
  if (std::abs(jump) < options.phase_limit) {
    out.push_back(b);
    return;
  }
  if (depth >= options.max_depth) {
    throw Error(ErrorKind::zero_on_path,
                "arg_variation: phase contract unmet after refinement near " +
                    describe(seg, 0.5 * (a.tau + b.tau)));
  }
  const double tau = 0.5 * (a.tau + b.tau);
  Node mid{tau, seg.at(tau), {}};
  mid.value = f(mid.z);
  check_value(mid.value, seg, tau);
  const double local = std::sqrt(std::abs(a.value) * std::abs(b.value));
  if (std::abs(mid.value) < options.tol * local) {
    throw Error(ErrorKind::zero_on_path, "arg_variation: near-zero of f at " + format_point(mid.z));
  }
  bisect(f, seg, a, mid, depth + 1, options, out);
  bisect(f, seg, mid, b, depth + 1, options, out);
}

void rebuild_phases(ArgTrace& trace) {
  const std::size_t n = trace.values.size();
  trace.phases.assign(n, 0.0);
  trace.max_step_phase = 0.0;
  if (n == 0) {
    trace.total_variation = 0.0;
    return;
  }
  trace.phases[0] = std::arg(trace.values[0]);
  for (std::size_t k = 1; k < n; ++k) {
    const double jump = std::arg(trace.values[k] / trace.values[k - 1]);
    trace.max_step_phase = std::max(trace.max_step_phase, std::abs(jump));
    trace.phases[k] = trace.phases[k - 1] + jump;
  }
  trace.total_variation = trace.phases.back() - trace.phases.front();
}

ArgTrace from_nodes(const std::vector<Node>& nodes) {
  ArgTrace trace;
  trace.nodes.reserve(nodes.size());
  trace.params.reserve(nodes.size());
  trace.values.reserve(nodes.size());
  for (const Node& n : nodes) {
    trace.nodes.push_back(n.z);
    trace.params.push_back(n.tau);
    trace.values.push_back(n.value);
  }
  rebuild_phases(trace);
  return trace;
}

std::vector<Node> to_nodes(const ArgTrace& trace) {
  std::vector<Node> nodes(trace.nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    nodes[k] = {trace.params[k], trace.nodes[k], trace.values[k]};
  }
  return nodes;
}

ArgTrace forward_trace(const ComplexFunction& f, const PathSegment& seg,
                       const ArgOptions& options) {
  const double length = seg.length_hint();
  int pieces = std::max(2, static_cast<int>(std::ceil(length / options.initial_spacing)));
  if (seg.kind == SegmentKind::circle) pieces = std::max(pieces, 16);
  std::vector<Node> grid;
  grid.reserve(pieces + 1);
  for (int k = 0; k <= pieces; ++k) {
    const double tau = static_cast<double>(k) / pieces;
    Node n{tau, seg.at(tau), {}};
    n.value = f(n.z);
    check_value(n.value, seg, tau);
    grid.push_back(n);
  }
  std::vector<Node> nodes{grid.front()};
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    bisect(f, seg, grid[k], grid[k + 1], 0, options, nodes);
  }
  return from_nodes(nodes);
}

ArgTrace reverse_trace(ArgTrace trace) {
  std::reverse(trace.nodes.begin(), trace.nodes.end());
  std::reverse(trace.params.begin(), trace.params.end());
  std::reverse(trace.values.begin(), trace.values.end());
  std::reverse(trace.phases.begin(), trace.phases.end());
  trace.total_variation = -trace.total_variation;
  return trace;
}

}  // namespace

// ----------------------------------------------------------------------------

double left_curve_sigma(double t, double a_desk) {
  return 1.0 - a_desk * std::pow(t, 0.4) * std::log(t);
}

PathSegment PathSegment::straight(ComplexPoint from, ComplexPoint to) {
  if (from == to) {
    throw Error(ErrorKind::domain, "PathSegment: straight segment endpoints coincide");
  }
  PathSegment seg;
  seg.kind = SegmentKind::straight;
  seg.start = from;
  seg.end = to;
  return seg;
}

PathSegment PathSegment::left_curve(double t_lo, double t_hi, double a_desk,
                                    Orientation orientation) {
  if (!(t_lo < t_hi) || !(t_lo > 0.0)) {
    throw Error(ErrorKind::domain, "PathSegment: left curve needs 0 < t_lo < t_hi");
  }
  PathSegment seg;
  seg.kind = SegmentKind::left_curve;
  seg.t_lo = t_lo;
  seg.t_hi = t_hi;
  seg.a_desk = a_desk;
  seg.orientation = orientation;
  return seg;
}

PathSegment PathSegment::circle(ComplexPoint centre, double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::domain, "PathSegment: circle radius must be positive");
  }
  PathSegment seg;
  seg.kind = SegmentKind::circle;
  seg.centre = centre;
  seg.radius = radius;
  return seg;
}

ComplexPoint PathSegment::at(double tau) const {
  switch (kind) {
    case SegmentKind::straight:
      return {interpolate(start.sigma, end.sigma, tau), interpolate(start.t, end.t, tau)};
    case SegmentKind::left_curve: {
      const double t = interpolate(t_lo, t_hi, tau);
      return {left_curve_sigma(t, a_desk), t};
    }
    case SegmentKind::circle: {
      if (tau == 1.0) tau = 0.0;
      return ComplexPoint(centre.value() + std::polar(radius, kTwoPi * tau));
    }
  }
  return {};
}

ComplexPoint PathSegment::first_point() const {
  return orientation == Orientation::forward ? at(0.0) : at(1.0);
}

ComplexPoint PathSegment::last_point() const {
  return orientation == Orientation::forward ? at(1.0) : at(0.0);
}

double PathSegment::length_hint() const {
  switch (kind) {
    case SegmentKind::straight:
      return std::abs(end.value() - start.value());
    case SegmentKind::circle:
      return kTwoPi * radius;
    case SegmentKind::left_curve: {
      double total = 0.0;
      ComplexPoint prev = at(0.0);
      for (int k = 1; k <= 64; ++k) {
        const ComplexPoint next = at(k / 64.0);
        total += std::abs(next.value() - prev.value());
        prev = next;
      }
      return total;
    }
  }
  return 0.0;
}

PathSegment PathSegment::reversed() const {
  PathSegment seg = *this;
  seg.orientation =
      orientation == Orientation::forward ? Orientation::reverse : Orientation::forward;
  return seg;
}

ContourSpec ContourSpec::rectangle(double sigma_lo, double sigma_hi, double t_lo, double t_hi) {
  if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi)) {
    throw Error(ErrorKind::domain, "ContourSpec: degenerate rectangle");
  }
  const ComplexPoint a(sigma_lo, t_lo), b(sigma_hi, t_lo), c(sigma_hi, t_hi), d(sigma_lo, t_hi);
  ContourSpec contour;
  contour.segments = {PathSegment::straight(a, b), PathSegment::straight(b, c),
                      PathSegment::straight(d, c).reversed(),
                      PathSegment::straight(a, d).reversed()};
  contour.closed = true;
  return contour;
}

ContourSpec ContourSpec::curved_region(double t_lo, double t_hi, double a_desk,
                                       double sigma_right) {
  const PathSegment curve = PathSegment::left_curve(t_lo, t_hi, a_desk, Orientation::reverse);
  const ComplexPoint bottom_left = curve.last_point();
  const ComplexPoint top_left = curve.first_point();
  const ComplexPoint bottom_right(sigma_right, t_lo), top_right(sigma_right, t_hi);
  ContourSpec contour;
  contour.segments = {PathSegment::straight(bottom_left, bottom_right),
                      PathSegment::straight(bottom_right, top_right),
                      PathSegment::straight(top_right, top_left), curve};
  contour.closed = true;
  return contour;
}

void ContourSpec::validate() const {
  if (segments.empty()) {
    throw Error(ErrorKind::domain, "ContourSpec: no segments");
  }
  if (!closed) return;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (segments[k].kind == SegmentKind::circle) continue;
    const ComplexPoint end = segments[k].last_point();
    const ComplexPoint next = segments[(k + 1) % segments.size()].first_point();
    if (std::abs(end.value() - next.value()) > 1e-12) {
      throw Error(ErrorKind::domain, "ContourSpec: segments do not join");
    }
  }
}

ArgTrace arg_variation(const ComplexFunction& f, const PathSegment& seg,
                       const ArgOptions& options) {
  PathSegment forward = seg;
  forward.orientation = Orientation::forward;
  ArgTrace trace = forward_trace(f, forward, options);
  if (seg.orientation == Orientation::reverse) {
    return reverse_trace(std::move(trace));
  }
  return trace;
}

void enforce_phase_contract(const ComplexFunction& f, const PathSegment& seg, ArgTrace& trace,
                            const ArgOptions& options) {
  const std::vector<Node> nodes = to_nodes(trace);
  if (nodes.empty()) return;
  std::vector<Node> refined{nodes.front()};
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    bisect(f, seg, nodes[k], nodes[k + 1], 0, options, refined);
  }
  trace = from_nodes(refined);
}

std::pair<ArgTrace, ArgTrace> split_trace(const ComplexFunction& f, const PathSegment& seg,
                                          const ArgTrace& trace, double tau,
                                          ComplexPoint split_point,
                                          const ArgOptions& options) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorKind::domain, "split_trace: tau must lie in (0, 1)");
  }
  std::vector<Node> nodes = to_nodes(trace);
  auto it = std::lower_bound(nodes.begin(), nodes.end(), tau,
                             [](const Node& n, double v) { return n.tau < v; });
  std::size_t index = static_cast<std::size_t>(it - nodes.begin());
  if (it == nodes.end() || !(it->z == split_point)) {
    Node inserted{tau, split_point, f(split_point)};
    check_value(inserted.value, seg, tau);
    if (index > 0 && index < nodes.size()) {
      const double local = std::sqrt(std::abs(nodes[index - 1].value) * std::abs(nodes[index].value));
      if (std::abs(inserted.value) < options.tol * local) {
        throw Error(ErrorKind::zero_on_path, "split_trace: near-zero of f at " + format_point(split_point));
      }
    }
    nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(index), inserted);
  }
  std::vector<Node> lower(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(index) + 1);
  std::vector<Node> upper(nodes.begin() + static_cast<std::ptrdiff_t>(index), nodes.end());
  for (Node& n : lower) n.tau = n.tau / tau;
  for (Node& n : upper) n.tau = (n.tau - tau) / (1.0 - tau);
  lower.back().tau = 1.0;
  upper.front().tau = 0.0;

  const PathSegment lower_seg = PathSegment::straight(seg.at(0.0), split_point);
  const PathSegment upper_seg = PathSegment::straight(split_point, seg.at(1.0));
  ArgTrace lo = from_nodes(lower);
  ArgTrace hi = from_nodes(upper);
  enforce_phase_contract(f, lower_seg, lo, options);
  enforce_phase_contract(f, upper_seg, hi, options);
  return {std::move(lo), std::move(hi)};
}

int winding_from_variations(double total_variation, const std::string& where) {
  const double raw = total_variation / kTwoPi;
  const double nearest = std::round(raw);
  if (std::abs(raw - nearest) > 0.1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", raw);
    throw Error(ErrorKind::non_integer_winding,
                "winding number " + std::string(buf) + " is not near an integer" + where);
  }
  return static_cast<int>(nearest);
}

Winding winding_number(const ComplexFunction& f, const ContourSpec& contour,
                       const ArgOptions& options) {
  contour.validate();
  if (!contour.closed) {
    throw Error(ErrorKind::domain, "winding_number: contour must be closed");
  }
  Winding w;
  double total = 0.0;
  for (const PathSegment& seg : contour.segments) {
    const ArgTrace trace = arg_variation(f, seg, options);
    w.segment_variations.push_back(trace.total_variation);
    total += trace.total_variation;
  }
  w.raw = total / kTwoPi;
  w.count = winding_from_variations(total, "");
  return w;
}

// ----------------------------------------------------------------------------

BacklundInput BacklundInput::from_values(double big_m, double f_at_center, double radius,
                                         double reach) {
  if (!(f_at_center > 0.0) || !(big_m > 0.0)) {
    throw Error(ErrorKind::domain, "BacklundInput: moduli must be positive");
  }
  return {std::log(big_m), std::log(f_at_center), radius, reach};
}

double backlund_bound(const BacklundInput& input) {
  if (!(input.reach > 0.0) || !(input.reach < input.radius)) {
    throw Error(ErrorKind::domain, "backlund_bound: requires 0 < reach < radius");
  }
  if (!std::isfinite(input.log_f_at_center)) {
    throw Error(ErrorKind::domain, "backlund_bound: |f(a)| must be positive");
  }
  if (input.log_f_at_center > input.log_big_m) {
    throw Error(ErrorKind::domain, "backlund_bound: |f(a)| exceeds M");
  }
  return 0.5 * (input.log_big_m - input.log_f_at_center) / std::log(input.radius / input.reach);
}

double log_modulus_bound(double sigma, double t) {
  if (!(t > 16.0 * kPi)) {
    throw Error(ErrorKind::domain, "modulus_bound: requires t > 16 pi");
  }
  if (sigma > 0.0) {
    return 0.5 * std::log(t / kTwoPi);
  }
  const double one_minus = 1.0 - sigma;
  return std::log(19.0 * t) - one_minus * std::log(kTwoPi) +
         (0.25 - 0.5 * sigma) * std::log(one_minus * one_minus + t * t);
}

double modulus_bound(double sigma, double t) { return std::exp(log_modulus_bound(sigma, t)); }

double log_max_modulus_bound_on_disc(ComplexPoint centre, double radius) {
  // The bound grows as sigma decreases and as t grows, so the maximum sits on
  // the boundary; interior rings are sampled as well.
  double best = -std::numeric_limits<double>::infinity();
  constexpr int kAngles = 3600;
  for (int ring = 1; ring <= 8; ++ring) {
    const double r = radius * ring / 8.0;
    for (int k = 0; k < kAngles; ++k) {
      const cplx z = centre.value() + std::polar(r, kTwoPi * k / kAngles);
      best = std::max(best, log_modulus_bound(z.real(), z.imag()));
    }
  }
  return best;
}

MainTerm main_term(double big_t) {
  if (!(big_t > 0.0)) {
    throw Error(ErrorKind::domain, "main_term: requires T > 0");
  }
  const double quarter = big_t / (4.0 * kPi);
  return {quarter * std::log(big_t / kTwoPi) - quarter, 0.5 * std::sqrt(big_t / kTwoPi)};
}

// ----------------------------------------------------------------------------

namespace {

enum class Edge { bottom, right, top, left };

struct EdgeFailure {
  Edge edge;
};

}  // namespace

BoxCount count_in_box(const ComplexFunction& f, double sigma_lo, double sigma_hi, double t_lo,
                      double t_hi, const CountOptions& options) {
  BoxCount box{0, 0.0, sigma_lo, sigma_hi, t_lo, t_hi, 0.0, 0.0};
  if (t_hi == t_lo) return box;
  if (!(t_lo < t_hi) || !(sigma_lo < sigma_hi)) {
    throw Error(ErrorKind::domain, "count_in_box: degenerate box");
  }
  const double offsets[] = {1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
  int retries[4] = {0, 0, 0, 0};
  for (int attempt = 0;; ++attempt) {
    const ComplexPoint a(box.sigma_lo, box.t_lo), b(box.sigma_hi, box.t_lo),
        c(box.sigma_hi, box.t_hi), d(box.sigma_lo, box.t_hi);
    const std::pair<Edge, PathSegment> edges[] = {
        {Edge::bottom, PathSegment::straight(a, b)},
        {Edge::right, PathSegment::straight(b, c)},
        {Edge::top, PathSegment::straight(d, c)},
        {Edge::left, PathSegment::straight(a, d)}};
    double variations[4] = {0, 0, 0, 0};
    bool failed = false;
    for (const auto& [edge, seg] : edges) {
      try {
        variations[static_cast<int>(edge)] = arg_variation(f, seg, options.arg).total_variation;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::zero_on_path) throw;
        const int id = static_cast<int>(edge);
        if (retries[id] >= options.max_retries) {
          throw Error(ErrorKind::contour_zero_persistent,
                      std::string("count_in_box: zero persists on contour: ") + e.what());
        }
        const double shift = offsets[retries[id]] * options.tol;
        ++retries[id];
        switch (edge) {
          case Edge::bottom: box.t_lo = t_lo + shift; break;
          case Edge::top: box.t_hi = t_hi + shift; break;
          case Edge::left: box.sigma_lo = sigma_lo - std::abs(shift); break;
          case Edge::right: box.sigma_hi = sigma_hi + std::abs(shift); break;
        }
        failed = true;
        break;
      }
    }
    if (failed) continue;
    const double total = variations[0] + variations[1] - variations[2] - variations[3];
    box.raw = total / kTwoPi;
    box.count = winding_from_variations(total, " for box");
    box.top_variation = -variations[2];
    box.right_variation = variations[1];
    return box;
  }
}

int base_count(double t0, double box_left, const CountOptions& options) {
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };
  return count_in_box(f, box_left, options.sigma_right, 0.0, t0, options).count;
}

namespace {

/// Counts zeros of R in [box_left, sigma_right] x [t_lo, t_hi] and certifies
/// the edges. When the left strip is not empty the box grows to the left.
BoxCount certified_box(const ComplexFunction& f, double box_left, double t_lo, double t_hi,
                       const CountOptions& options, CountResult& out) {
  for (int extension = 0;; ++extension) {
    out.certificates.clear();
    const BoxCount box = count_in_box(f, box_left, options.sigma_right, t_lo, t_hi, options);
    // Right edge: |R - 1| < 3/4 there keeps the argument within pi.
    out.certificates.push_back({"L2", kPi, std::abs(box.right_variation),
                                std::abs(box.right_variation) <= kPi});
    bool left_ok = true;
    if (options.certify_left) {
      const BoxCount strip = count_in_box(f, box.sigma_lo - options.strip_width, box.sigma_lo,
                                          box.t_lo, box.t_hi, options);
      left_ok = strip.count == 0 && strip.sigma_hi == box.sigma_lo && strip.t_lo == box.t_lo &&
                strip.t_hi == box.t_hi;
      out.certificates.push_back(
          {"left-strip", 0.0, static_cast<double>(strip.count), left_ok});
    }
    if (!left_ok && options.auto_extend_left && extension < options.max_extensions) {
      box_left -= options.strip_width;
      continue;
    }
    if (options.backlund_check) {
      const double big_t = box.t_hi;
      const double radius = 2.0 + 2.0 * std::pow(big_t, 0.4) * std::log(big_t);
      const double reach = options.sigma_right - box.sigma_lo;
      if (big_t - radius > 16.0 * kPi && reach < radius) {
        const ComplexPoint centre(options.sigma_right, big_t);
        const BacklundInput input{log_max_modulus_bound_on_disc(centre, radius), std::log(0.25),
                                  radius, reach};
        const double bound = kTwoPi * backlund_bound(input);
        out.certificates.push_back(
            {"L3", bound, std::abs(box.top_variation), std::abs(box.top_variation) <= bound});
      }
    }
    out.box_left = box.sigma_lo;
    return box;
  }
}

}  // namespace

CountResult count_zeros(double t_lo, double t_hi, double box_left, double tol, int n_base,
                        const CountOptions& options_in) {
  if (!(t_lo >= 10.0)) {
    throw Error(ErrorKind::domain, "count_zeros: requires t_lo >= 10");
  }
  if (!(box_left <= -2.0)) {
    throw Error(ErrorKind::domain, "count_zeros: requires box_left <= -2");
  }
  if (!(t_hi >= t_lo)) {
    throw Error(ErrorKind::domain, "count_zeros: requires t_hi >= t_lo");
  }
  CountOptions options = options_in;
  options.tol = tol;
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };

  CountResult out;
  out.big_t = t_hi;
  out.t_lo = t_lo;
  out.box_left = box_left;
  out.base_count = n_base >= 0 ? n_base : base_count(t_lo, box_left, options);
  if (t_hi > t_lo) {
    const BoxCount box = certified_box(f, box_left, t_lo, t_hi, options, out);
    out.count = box.count;
    out.raw_winding = box.raw;
  }
  out.count += out.base_count;
  const MainTerm m = main_term(t_hi);
  out.smooth_part = m.smooth;
  out.sqrt_term = m.sqrt_term;
  out.main_value = m.value();
  out.residual = out.count - out.main_value;
  return out;
}

std::vector<ResidualRow> residual_table(const std::vector<double>& ts, double t_lo,
                                        double box_left, int n_base,
                                        const CountOptions& options) {
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (!(ts[k] >= t_lo) || (k > 0 && !(ts[k] > ts[k - 1]))) {
      throw Error(ErrorKind::domain, "residual_table: heights must increase from t_lo");
    }
  }
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };
  const int base = n_base >= 0 ? n_base : base_count(t_lo, box_left, options);
  std::vector<ResidualRow> rows;
  int running = base;
  double lower = t_lo;
  for (double big_t : ts) {
    CountResult result;
    result.big_t = big_t;
    result.t_lo = t_lo;
    result.box_left = box_left;
    result.base_count = base;
    if (big_t > lower) {
      const BoxCount strip = certified_box(f, box_left, lower, big_t, options, result);
      running += strip.count;
      result.raw_winding = strip.raw;
      lower = strip.t_hi;
    }
    result.count = running;
    const MainTerm m = main_term(big_t);
    result.smooth_part = m.smooth;
    result.sqrt_term = m.sqrt_term;
    result.main_value = m.value();
    result.residual = result.count - result.main_value;
    rows.push_back({result, result.count - m.smooth, result.count - m.smooth + m.sqrt_term});
  }
  return rows;
}

double fit_sqrt_coefficient(const std::vector<ResidualRow>& rows) {
  double xy = 0.0;
  double xx = 0.0;
  for (const ResidualRow& row : rows) {
    const double x = std::sqrt(row.result.big_t / kTwoPi);
    xy += x * row.r_smooth;
    xx += x * x;
  }
  if (xx == 0.0) {
    throw Error(ErrorKind::domain, "fit_sqrt_coefficient: empty table");
  }
  return xy / xx;
}

std::pair<double, double> fit_sqrt_with_offset(const std::vector<ResidualRow>& rows) {
  const double n = static_cast<double>(rows.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ResidualRow& row : rows) {
    const double x = std::sqrt(row.result.big_t / kTwoPi);
    sx += x;
    sy += row.r_smooth;
    sxx += x * x;
    sxy += x * row.r_smooth;
  }
  const double det = n * sxx - sx * sx;
  if (rows.size() < 2 || det <= 0.0) {
    throw Error(ErrorKind::domain, "fit_sqrt_with_offset: need two distinct heights");
  }
  const double c = (n * sxy - sx * sy) / det;
  return {c, (sy - c * sx) / n};
}

}  // namespace rzero
