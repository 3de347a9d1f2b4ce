#include "rzero/zeros.hpp"

#include <limits>
#include <optional>

#include "rzero/auxiliary.hpp"

namespace rzero {
namespace {

/// Forward traces of the four edges of a rectangle: bottom and top run in
/// increasing sigma, left and right in increasing t.
struct BoxTraces {
  Rectangle r;
  ArgTrace bottom;
  ArgTrace right;
  ArgTrace top;
  ArgTrace left;

  double raw_winding() const {
    return (bottom.total_variation + right.total_variation - top.total_variation -
            left.total_variation) /
           kTwoPi;
  }
};

PathSegment bottom_edge(const Rectangle& r) {
  return PathSegment::straight({r.sigma_lo, r.t_lo}, {r.sigma_hi, r.t_lo});
}
PathSegment top_edge(const Rectangle& r) {
  return PathSegment::straight({r.sigma_lo, r.t_hi}, {r.sigma_hi, r.t_hi});
}
PathSegment left_edge(const Rectangle& r) {
  return PathSegment::straight({r.sigma_lo, r.t_lo}, {r.sigma_lo, r.t_hi});
}
PathSegment right_edge(const Rectangle& r) {
  return PathSegment::straight({r.sigma_hi, r.t_lo}, {r.sigma_hi, r.t_hi});
}

int checked_winding(const BoxTraces& box) {
  return winding_from_variations(box.raw_winding() * kTwoPi, " in subdivision");
}

BoxTraces trace_box(const ComplexFunction& f, Rectangle r, const IsolateOptions& options) {
  const double offsets[] = {1.0, -1.0, 2.0, -2.0, 3.0, -3.0};
  const Rectangle nominal = r;
  for (int attempt = 0;; ++attempt) {
    try {
      BoxTraces box;
      box.r = r;
      box.bottom = arg_variation(f, bottom_edge(r), options.arg);
      box.right = arg_variation(f, right_edge(r), options.arg);
      box.top = arg_variation(f, top_edge(r), options.arg);
      box.left = arg_variation(f, left_edge(r), options.arg);
      return box;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::zero_on_path) throw;
      if (attempt >= options.max_retries) {
        throw Error(ErrorKind::contour_zero_persistent,
                    std::string("isolate_zeros: zero persists on boundary: ") + e.what());
      }
      const double shift = offsets[attempt] * options.tol;
      r = nominal;
      r.t_lo += shift;
      r.t_hi += shift;
      r.sigma_lo -= std::abs(shift);
      r.sigma_hi += std::abs(shift);
    }
  }
}

constexpr double kNudges[] = {0.0, 0.0137, -0.0213, 0.0371, -0.0419, 0.0611, -0.0733};
constexpr int kNudgeCount = sizeof(kNudges) / sizeof(kNudges[0]);

/// Splits across the longer side (ties: a vertical cut), trying nudged cut
/// positions from index `first` on when the cut meets a zero. `used` receives
/// the index that worked.
std::pair<BoxTraces, BoxTraces> split_box(const ComplexFunction& f, const BoxTraces& box,
                                          const IsolateOptions& options, int first, int& used) {
  const Rectangle& r = box.r;
  const bool horizontal_cut = r.height() > r.width();
  for (used = first; used < kNudgeCount; ++used) {
    const double nudge = kNudges[used];
    try {
      if (horizontal_cut) {
        const double m = r.t_lo + (0.5 + nudge) * r.height();
        const double tau = (m - r.t_lo) / r.height();
        const ComplexPoint left_point(r.sigma_lo, m), right_point(r.sigma_hi, m);
        ArgTrace cut = arg_variation(f, PathSegment::straight(left_point, right_point), options.arg);
        auto [left_lo, left_hi] = split_trace(f, left_edge(r), box.left, tau, left_point, options.arg);
        auto [right_lo, right_hi] =
            split_trace(f, right_edge(r), box.right, tau, right_point, options.arg);
        BoxTraces lower{{r.sigma_lo, r.sigma_hi, r.t_lo, m}, box.bottom, right_lo, cut, left_lo};
        BoxTraces upper{{r.sigma_lo, r.sigma_hi, m, r.t_hi}, cut, right_hi, box.top, left_hi};
        return {std::move(lower), std::move(upper)};
      }
      const double m = r.sigma_lo + (0.5 + nudge) * r.width();
      const double tau = (m - r.sigma_lo) / r.width();
      const ComplexPoint bottom_point(m, r.t_lo), top_point(m, r.t_hi);
      ArgTrace cut = arg_variation(f, PathSegment::straight(bottom_point, top_point), options.arg);
      auto [bottom_lo, bottom_hi] =
          split_trace(f, bottom_edge(r), box.bottom, tau, bottom_point, options.arg);
      auto [top_lo, top_hi] = split_trace(f, top_edge(r), box.top, tau, top_point, options.arg);
      BoxTraces west{{r.sigma_lo, m, r.t_lo, r.t_hi}, bottom_lo, cut, top_lo, box.left};
      BoxTraces east{{m, r.sigma_hi, r.t_lo, r.t_hi}, bottom_hi, box.right, top_hi, cut};
      return {std::move(west), std::move(east)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::zero_on_path) throw;
    }
  }
  throw Error(ErrorKind::contour_zero_persistent,
              "isolate_zeros: no admissible cut near " + format_point(r.centre()));
}

bool zero_less(const Zero& a, const Zero& b) {
  if (a.gamma != b.gamma) return a.gamma < b.gamma;
  return a.beta < b.beta;
}

bool rect_less(const Rectangle& a, const Rectangle& b) {
  const ComplexPoint ca = a.centre(), cb = b.centre();
  if (ca.t != cb.t) return ca.t < cb.t;
  return ca.sigma < cb.sigma;
}

}  // namespace

IsolationResult isolate_zeros(const ComplexFunction& f, const Rectangle& box,
                              const IsolateOptions& options) {
  if (!(box.width() > 0.0) || !(box.height() > 0.0)) {
    throw Error(ErrorKind::domain, "isolate_zeros: degenerate box");
  }
  IsolationResult out;
  BoxTraces root = trace_box(f, box, options);
  out.box = root.r;
  out.box_winding = checked_winding(root);

  std::vector<std::pair<BoxTraces, int>> stack;
  stack.emplace_back(std::move(root), out.box_winding);
  while (!stack.empty()) {
    auto [current, winding] = std::move(stack.back());
    stack.pop_back();
    if (winding == 0) continue;
    if (winding < 0) {
      throw Error(ErrorKind::non_integer_winding, "isolate_zeros: negative winding");
    }
    if (winding == 1 && current.r.max_side() <= options.seed_size) {
      out.isolated.push_back(current.r);
      continue;
    }
    if (winding >= 2 && current.r.max_side() < options.min_size) {
      out.clusters.push_back(current.r);
      out.cluster_windings.push_back(winding);
      continue;
    }
    // A multiple zero close to the cut can alias a full turn between nodes;
    // the children then disagree with the parent and the cut is moved.
    bool split = false;
    for (int first = 0; first < kNudgeCount && !split;) {
      int used = first;
      auto [a, b] = split_box(f, current, options, first, used);
      const int wa = checked_winding(a);
      const int wb = checked_winding(b);
      if (wa >= 0 && wb >= 0 && wa + wb == winding) {
        stack.emplace_back(std::move(b), wb);
        stack.emplace_back(std::move(a), wa);
        split = true;
      }
      first = used + 1;
    }
    if (!split) {
      throw Error(ErrorKind::non_integer_winding,
                  "isolate_zeros: child windings do not add up near " +
                      format_point(current.r.centre()));
    }
  }
  std::sort(out.isolated.begin(), out.isolated.end(), rect_less);
  // keep clusters and their windings aligned
  std::vector<std::size_t> order(out.clusters.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return rect_less(out.clusters[i], out.clusters[j]); });
  std::vector<Rectangle> clusters;
  std::vector<int> windings;
  for (std::size_t k : order) {
    clusters.push_back(out.clusters[k]);
    windings.push_back(out.cluster_windings[k]);
  }
  out.clusters = std::move(clusters);
  out.cluster_windings = std::move(windings);
  return out;
}

namespace {

struct NewtonOutcome {
  ComplexPoint point;
  double last_step = 0.0;
  std::vector<double> steps;
};

std::optional<NewtonOutcome> newton(const ComplexFunction& f, const DerivativeFunction& df,
                                    const Rectangle& seed, const RefineOptions& options) {
  const ComplexPoint c = seed.centre();
  Rectangle escape = seed;
  escape.sigma_lo -= 0.5 * seed.width();
  escape.sigma_hi += 0.5 * seed.width();
  escape.t_lo -= 0.5 * seed.height();
  escape.t_hi += 0.5 * seed.height();
  cplx z = c.value();
  std::vector<double> steps;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const ComplexPoint p(z);
    const cplx value = f(p);
    if (value == 0.0) return NewtonOutcome{p, 0.0, steps};
    const cplx slope = df(p);
    if (slope == 0.0 || !std::isfinite(std::abs(slope))) return std::nullopt;
    const cplx step = value / slope;
    z -= step;
    steps.push_back(std::abs(step));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (!escape.contains(ComplexPoint(z))) return std::nullopt;
    if (std::abs(step) < options.step_tol) {
      const ComplexPoint final_point(z);
      if (!seed.contains(final_point, 1e-9)) return std::nullopt;
      return NewtonOutcome{final_point, std::abs(step), steps};
    }
  }
  return std::nullopt;
}

}  // namespace

Zero refine_zero(const ComplexFunction& f, const DerivativeFunction& df, const Rectangle& seed,
                 const RefineOptions& options) {
  Rectangle current = seed;
  std::optional<NewtonOutcome> outcome;
  for (int fallback = 0; fallback <= options.max_fallbacks; ++fallback) {
    outcome = newton(f, df, current, options);
    if (outcome) break;
    // Shrink the seed to the winding-1 child and try again.
    IsolateOptions sub = options.isolate;
    sub.seed_size = 0.5 * current.max_side();
    const IsolationResult parts = isolate_zeros(f, current, sub);
    if (parts.isolated.size() != 1 || parts.box_winding != 1) {
      throw Error(ErrorKind::non_convergence,
                  "refine_zero: seed does not isolate a single zero near " +
                      format_point(current.centre()));
    }
    current = parts.isolated.front();
  }
  if (!outcome) {
    throw Error(ErrorKind::non_convergence,
                "refine_zero: Newton failed near " + format_point(seed.centre()));
  }

  Zero zero;
  zero.beta = outcome->point.sigma;
  zero.gamma = outcome->point.t;
  zero.residual_modulus = std::abs(f(outcome->point));
  zero.newton_steps = outcome->steps;
  const double limit = 0.5 * std::hypot(seed.width(), seed.height());
  double radius = 10.0 * (outcome->last_step + 1e-12);
  ArgOptions circle_options = options.isolate.arg;
  circle_options.tol = 0.0;
  while (true) {
    try {
      const Winding w = winding_number(
          f, ContourSpec{{PathSegment::circle(outcome->point, radius)}, true}, circle_options);
      if (w.count == 1) {
        zero.enclosure_radius = radius;
        zero.winding_certificate = 1;
        return zero;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::zero_on_path && e.kind() != ErrorKind::non_integer_winding) {
        throw;
      }
    }
    radius *= 10.0;
    if (radius > limit) {
      throw Error(ErrorKind::non_convergence,
                  "refine_zero: no winding-1 certificate at " + format_point(outcome->point));
    }
  }
}

Zero refine_r_zero(const Rectangle& seed, const RefineOptions& options) {
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };
  const DerivativeFunction df = [](ComplexPoint s) { return r_derivative(s).value; };
  Zero zero = refine_zero(f, df, seed, options);
  zero.residual_scale = std::max(1.0, r_eval(ComplexPoint(zero.beta, zero.gamma)).scale);
  return zero;
}

LocateResult locate_r_zeros(const Rectangle& box, const RefineOptions& options) {
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };
  const IsolationResult iso = isolate_zeros(f, box, options.isolate);
  LocateResult out;
  out.box = iso.box;
  out.box_winding = iso.box_winding;
  out.clusters = iso.clusters;
  out.zeros.reserve(iso.isolated.size());
  for (const Rectangle& seed : iso.isolated) {
    out.zeros.push_back(refine_r_zero(seed, options));
  }
  sort_zeros(out.zeros);
  return out;
}

void sort_zeros(std::vector<Zero>& zeros) { std::sort(zeros.begin(), zeros.end(), zero_less); }

ZeroStatistics zero_statistics(const std::vector<Zero>& zeros) {
  if (zeros.empty()) {
    throw Error(ErrorKind::domain, "zero_statistics: empty list");
  }
  std::vector<Zero> sorted = zeros;
  sort_zeros(sorted);
  ZeroStatistics stats;
  stats.count = static_cast<int>(sorted.size());
  stats.min_beta = std::numeric_limits<double>::infinity();
  stats.max_beta = -std::numeric_limits<double>::infinity();
  int right = 0;
  for (const Zero& z : sorted) {
    if (z.beta > 0.5) ++right;
    stats.min_beta = std::min(stats.min_beta, z.beta);
    stats.max_beta = std::max(stats.max_beta, z.beta);
  }
  stats.fraction_right = static_cast<double>(right) / stats.count;
  if (sorted.size() > 1) {
    stats.mean_gap = (sorted.back().gamma - sorted.front().gamma) / (stats.count - 1);
  }
  return stats;
}

}  // namespace rzero
