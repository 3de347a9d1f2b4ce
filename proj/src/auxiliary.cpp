#include "rzero/auxiliary.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "rzero/special_functions.hpp"

namespace rzero {
namespace {

const cplx kOmega = std::polar(1.0, 0.25 * kPi);  // line direction e^{i pi/4}
constexpr cplx kI(0.0, 1.0);

// Stop extending the line once the integrand is e^-46 ~ 1e-20 below its peak.
constexpr double kTailLogDrop = 46.0;
constexpr double kRoundoff = 2.3e-16;
constexpr int kMaxHalvings = 7;
constexpr double kNonConvergence = 1e-6;

/// log of x^{-s} e^{pi i x^2} / (e^{pi i x} - e^{-pi i x}) at x = center + u omega.
class LineKernel {
 public:
  LineKernel(cplx s, double center) : s_(s), center_(center) {}

  cplx log_integrand(double u) const {
    const cplx x = center_ + u * kOmega;
    const cplx i_pi_x = kI * kPi * x;
    cplx exponent = -s_ * std::log(x) + i_pi_x * x;
    cplx denominator;
    if (x.imag() >= 0.0) {
      // e^{pi i x} - e^{-pi i x} = -e^{-pi i x} (1 - e^{2 pi i x})
      exponent += i_pi_x + cplx(0.0, kPi);
      denominator = 1.0 - std::exp(2.0 * i_pi_x);
    } else {
      exponent -= i_pi_x;
      denominator = 1.0 - std::exp(-2.0 * i_pi_x);
    }
    return exponent - std::log(denominator);
  }

 private:
  cplx s_;
  double center_;
};

double scan_half_length(const LineKernel& kernel, double minimum) {
  double peak = kernel.log_integrand(0.0).real();
  double reach = 0.0;
  for (double direction : {1.0, -1.0}) {
    double u = 0.0;
    for (int k = 1; k <= 800; ++k) {
      u = 0.5 * k;
      const double level = kernel.log_integrand(direction * u).real();
      peak = std::max(peak, level);
      if (level < peak - kTailLogDrop && u >= minimum) {
        break;
      }
    }
    reach = std::max(reach, u);
  }
  return std::max(minimum, reach);
}

class PlainSum {
 public:
  void add(cplx x) { value_ += x; }
  cplx value() const { return value_; }

 private:
  cplx value_ = 0.0;
};

/// Trapezoid nodes on the line, held on a common exponential scale so that
/// magnitudes beyond the double range stay representable.
class LineQuadrature {
 public:
  LineQuadrature(ComplexPoint s, int crossing, double half_length, PrecisionMode precision)
      : s_(s.value()),
        kernel_(s_, crossing + 0.5),
        crossing_(crossing),
        half_length_(half_length),
        precision_(precision) {}

  struct Snapshot {
    cplx mantissa;       // on exp(log_scale)
    double abs_sum = 0;  // sum of |terms| on the same scale
    double tail = 0;     // |integrand| at the ends times step
  };

  void initialise(double step) {
    step_ = step;
    count_ = static_cast<int>(std::floor(half_length_ / step));
    std::vector<cplx> logs;
    logs.reserve(2 * count_ + 1);
    for (int k = -count_; k <= count_; ++k) {
      logs.push_back(kernel_.log_integrand(k * step));
    }
    dirichlet_logs_.clear();
    for (int n = 2; n <= crossing_; ++n) {
      dirichlet_logs_.push_back(-s_ * std::log(static_cast<double>(n)));
    }
    log_scale_ = logs[count_].real();
    for (const cplx& l : logs) log_scale_ = std::max(log_scale_, l.real());
    if (crossing_ >= 1) log_scale_ = std::max(log_scale_, 0.0);  // n = 1
    for (const cplx& l : dirichlet_logs_) log_scale_ = std::max(log_scale_, l.real());
    values_.clear();
    values_.reserve(logs.size());
    for (const cplx& l : logs) values_.push_back(std::exp(l - log_scale_));
  }

  /// Adds the midpoints of the current grid and halves the step.
  void refine() {
    std::vector<cplx> merged;
    merged.reserve(4 * count_ + 1);
    for (int k = -count_; k <= count_; ++k) {
      if (k > -count_) {
        merged.push_back(std::exp(kernel_.log_integrand((k - 0.5) * step_) - log_scale_));
      }
      merged.push_back(values_[k + count_]);
    }
    values_ = std::move(merged);
    step_ *= 0.5;
    count_ *= 2;
  }

  Snapshot snapshot(double step_multiple) const {
    // Sum every `stride`-th node of the current grid around the centre.
    const int stride = static_cast<int>(step_multiple);
    const int centre = static_cast<int>(values_.size() / 2);
    const double h = step_ * stride;
    Snapshot snap;
    if (precision_ == PrecisionMode::compensated) {
      CompensatedSum line;
      collect(line, centre, stride, snap.abs_sum);
      snap.mantissa = finish(line.value(), h, snap);
    } else {
      PlainSum line;
      collect(line, centre, stride, snap.abs_sum);
      snap.mantissa = finish(line.value(), h, snap);
    }
    const int first = centre % stride;
    const int last = static_cast<int>(values_.size()) - 1 - ((values_.size() - 1 - centre) % stride);
    snap.tail = (std::abs(values_[first]) + std::abs(values_[last]));
    return snap;
  }

  double step() const { return step_; }
  double log_scale() const { return log_scale_; }
  std::size_t nodes() const { return values_.size(); }

 private:
  template <class Sum>
  void collect(Sum& sum, int centre, int stride, double& abs_sum) const {
    for (int k = centre % stride; k < static_cast<int>(values_.size()); k += stride) {
      sum.add(values_[k]);
      abs_sum += std::abs(values_[k]);
    }
  }

  cplx finish(cplx line_sum, double h, Snapshot& snap) const {
    // R = sum_{n<=q} n^{-s} - omega * integral over the real parameter u.
    const cplx weight = -kOmega * h;
    snap.abs_sum *= h;
    cplx total;
    if (precision_ == PrecisionMode::compensated) {
      CompensatedSum acc;
      acc.add(weight * line_sum);
      if (crossing_ >= 1) acc.add(std::exp(-log_scale_));
      for (const cplx& l : dirichlet_logs_) acc.add(std::exp(l - log_scale_));
      total = acc.value();
    } else {
      total = weight * line_sum;
      if (crossing_ >= 1) total += std::exp(-log_scale_);
      for (const cplx& l : dirichlet_logs_) total += std::exp(l - log_scale_);
    }
    if (crossing_ >= 1) snap.abs_sum += std::exp(-log_scale_);
    for (const cplx& l : dirichlet_logs_) snap.abs_sum += std::exp(l.real() - log_scale_);
    return total;
  }

  cplx s_;
  LineKernel kernel_;
  int crossing_;
  double half_length_;
  PrecisionMode precision_;
  double step_ = 0.0;
  int count_ = 0;
  double log_scale_ = 0.0;
  std::vector<cplx> values_;
  std::vector<cplx> dirichlet_logs_;
};

/// Error of the finest of three trapezoid sums with steps h, 2h, 4h, given
/// d_fine = |I_h - I_2h| and d_coarse = |I_2h - I_4h|. With err(h) ~ exp(-c/h)
/// the error is about d_fine (d_fine / d_coarse)^2; one factor is dropped as
/// margin. Falls back to d_fine while the differences do not shrink.
double rate_estimate(double d_fine, double d_coarse) {
  if (d_coarse > 0.0 && d_fine < d_coarse) return d_fine * (d_fine / d_coarse);
  return d_fine;
}

/// Accumulation over the nodes plus the conditioning of the phases
/// -t log|x| and pi x^2, which reach a few hundred radians.
double roundoff(ComplexPoint s, const QuadratureSpec& spec, double scale, std::size_t nodes) {
  const double reach = spec.crossing + 1.0 + spec.half_length;
  const double phase = std::abs(s.value()) * std::log(reach + 1.0) + kPi * reach * reach;
  return kRoundoff * (std::sqrt(static_cast<double>(nodes) + 1.0) + phase) * scale;
}

EvaluationResult package(cplx mantissa, double log_scale, double error_scaled,
                         double scale_scaled) {
  EvaluationResult out;
  out.method = Method::quadrature;
  // Fold the scale back into the mantissa when it fits comfortably.
  if (std::abs(log_scale) < 600.0) {
    const double factor = std::exp(log_scale);
    out.mantissa = mantissa * factor;
    out.log_scale = 0.0;
    out.error_estimate = error_scaled * factor;
    out.scale = scale_scaled * factor;
  } else {
    out.mantissa = mantissa;
    out.log_scale = log_scale;
    out.error_estimate = error_scaled;
    out.scale = scale_scaled;
  }
  out.value = out.mantissa * std::exp(out.log_scale);
  return out;
}

void check_crossing(int crossing) {
  if (crossing < 0) {
    throw Error(ErrorKind::domain, "quadrature crossing must be >= 0");
  }
  const double centre = crossing + 0.5;
  if (std::abs(centre - std::round(centre)) < 1e-6) {
    throw Error(ErrorKind::path_through_pole, "quadrature line passes through a pole");
  }
}

}  // namespace

const char* to_string(Method m) {
  return m == Method::quadrature ? "quadrature" : "asymptotic";
}

int saddle_crossing(ComplexPoint s) {
  // x0^2 = s / (2 pi i) = (t - i sigma) / (2 pi)
  const cplx x0 = std::sqrt(cplx(s.t, -s.sigma) / kTwoPi);
  const double along = x0.real() - x0.imag();
  if (!(along < 1e6)) {
    throw Error(ErrorKind::domain, "saddle_crossing: |s| too large at " + format_point(s));
  }
  return std::max(0, static_cast<int>(std::floor(along)));
}

double default_half_length(double t, double eps_target) {
  return std::sqrt(std::log(1.0 / eps_target) / kPi) + 0.25 * std::sqrt(std::abs(t));
}

void QuadratureSpec::validate(double eps_target) const {
  check_crossing(crossing);
  if (!(step > 0.0) || !(half_length > 0.0) || !std::isfinite(step) ||
      !std::isfinite(half_length)) {
    throw Error(ErrorKind::domain, "QuadratureSpec: step and half_length must be positive");
  }
  if (step > half_length) {
    throw Error(ErrorKind::domain, "QuadratureSpec: step exceeds half_length");
  }
  if (half_length < std::sqrt(std::log(1.0 / eps_target) / kPi)) {
    throw Error(ErrorKind::domain, "QuadratureSpec: half_length too short for target");
  }
}

QuadratureSpec QuadratureSpec::automatic(ComplexPoint s, PrecisionMode precision) {
  QuadratureSpec spec;
  spec.crossing = saddle_crossing(s);
  const LineKernel kernel(s.value(), spec.crossing + 0.5);
  spec.half_length = scan_half_length(kernel, default_half_length(s.t));
  spec.step = 0.125;
  spec.precision = precision;
  return spec;
}

EvaluationResult r_integral(ComplexPoint s, const QuadratureSpec& spec) {
  spec.validate();
  LineQuadrature quad(s, spec.crossing, spec.half_length, spec.precision);
  quad.initialise(spec.step);
  const auto fine = quad.snapshot(1);
  const auto coarse = quad.snapshot(2);
  const auto coarser = quad.snapshot(4);
  const double diff = std::abs(fine.mantissa - coarse.mantissa);
  const double scale = fine.abs_sum;
  const double error = rate_estimate(diff, std::abs(coarse.mantissa - coarser.mantissa)) +
                       roundoff(s, spec, scale, quad.nodes()) + fine.tail * spec.step;
  if (!(error <= kNonConvergence * scale)) {
    throw Error(ErrorKind::non_convergence,
                "r_integral: error estimate too large at " + format_point(s));
  }
  return package(fine.mantissa, quad.log_scale(), error, scale);
}

EvaluationResult r_eval(ComplexPoint s, const EvalOptions& options) {
  QuadratureSpec spec = QuadratureSpec::automatic(s, options.precision);
  if (options.crossing >= 0) {
    spec.crossing = options.crossing;
    const LineKernel kernel(s.value(), spec.crossing + 0.5);
    spec.half_length = scan_half_length(kernel, default_half_length(s.t, options.eps_target));
  }
  check_crossing(spec.crossing);

  LineQuadrature quad(s, spec.crossing, spec.half_length, spec.precision);
  quad.initialise(spec.step);
  for (int level = 0; level < kMaxHalvings; ++level) {
    quad.refine();
    const auto current = quad.snapshot(1);
    const auto previous = quad.snapshot(2);
    const double diff = std::abs(current.mantissa - previous.mantissa);
    const double scale = current.abs_sum;
    if (diff <= options.eps_target * scale) {
      const double d_coarse = std::abs(previous.mantissa - quad.snapshot(4).mantissa);
      const double error = rate_estimate(diff, d_coarse) + roundoff(s, spec, scale, quad.nodes()) +
                           current.tail * quad.step();
      return package(current.mantissa, quad.log_scale(), error, scale);
    }
  }
  throw Error(ErrorKind::non_convergence, "r_eval: no convergence at " + format_point(s));
}

cplx r_value(ComplexPoint s) { return r_eval(s).value; }

SurrogateFactors surrogate_factors(ComplexPoint s) {
  const cplx z = s.value();
  const cplx e = eta(s).value;
  SurrogateFactors f;
  f.log_chi = log_chi(s);
  f.log_eta_power = (z - 1.0) * std::log(e);
  f.log_gauss = -kI * kPi * e * e;
  f.log_constant = std::log(-std::sqrt(2.0) * std::polar(1.0, 3.0 * kPi / 8.0));
  // sin(pi eta) = e^{-i pi eta} (1 - e^{2 pi i eta}) i/2
  // 2 cos(2 pi eta) = e^{-2 pi i eta} (1 + e^{4 pi i eta})
  const cplx i_pi_eta = kI * kPi * e;
  const cplx denominator = 1.0 + std::exp(4.0 * i_pi_eta);
  const double log_cos_modulus =
      std::log(0.5) + (-2.0 * i_pi_eta).real() + std::log(std::abs(denominator));
  if (log_cos_modulus < std::log(1e-8)) {
    throw Error(ErrorKind::near_zero_denominator,
                "r_asymptotic: cos(2 pi eta) vanishes at " + format_point(s));
  }
  f.log_ratio = i_pi_eta + std::log(1.0 - std::exp(2.0 * i_pi_eta)) - std::log(denominator) +
                std::log(cplx(0.0, 0.5));
  return f;
}

EvaluationResult r_asymptotic(ComplexPoint s, const AsymptoticOptions& options) {
  if (!(s.t >= options.t_desk) ||
      !(s.sigma <= 1.0 - options.a_desk * std::pow(s.t, 0.4) * std::log(s.t))) {
    throw Error(ErrorKind::region, "r_asymptotic: outside the left region at " + format_point(s));
  }
  const cplx log_surrogate = surrogate_factors(s).total();
  EvaluationResult out;
  out.method = Method::asymptotic;
  out.log_scale = log_surrogate.real();
  out.mantissa = std::polar(1.0, log_surrogate.imag());
  if (std::abs(out.log_scale) < 600.0) {
    out.mantissa *= std::exp(out.log_scale);
    out.log_scale = 0.0;
  }
  out.value = out.mantissa * std::exp(out.log_scale);
  out.u_proxy = 0.0;
  out.error_estimate = std::abs(out.mantissa);
  if (options.with_reference) {
    const EvaluationResult reference = r_eval(s);
    const cplx ratio = std::exp(reference.log_value() - log_surrogate);
    out.u_proxy = std::abs(ratio - 1.0);
    out.error_estimate = std::abs(out.mantissa) * out.u_proxy;
  }
  return out;
}

DerivativeResult r_derivative(ComplexPoint s, double radius) {
  return cauchy_derivative([](ComplexPoint z) { return r_value(z); }, s, radius);
}

DerivativeResult cauchy_derivative(const std::function<cplx(ComplexPoint)>& f, ComplexPoint s,
                                   double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::domain, "cauchy_derivative: radius must be positive");
  }
  constexpr int kRing = 16;
  auto ring = [&](double r) {
    cplx acc = 0.0;
    for (int k = 0; k < kRing; ++k) {
      const cplx dir = std::polar(1.0, kTwoPi * k / kRing);
      acc += f(ComplexPoint(s.value() + r * dir)) / dir;
    }
    return acc / (kRing * r);
  };
  const cplx outer = ring(radius);
  const cplx inner = ring(0.5 * radius);
  return {outer, std::abs(outer - inner)};
}

cplx zeta_reference(ComplexPoint s) {
  const cplx z = s.value();
  if (std::abs(z - 1.0) < 1e-14) {
    throw Error(ErrorKind::pole, "zeta_reference: pole at s = 1");
  }
  // B_{2k} / (2k)! for k = 1..8
  static constexpr std::array<double, 8> kCoefficients = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0};
  const int n_shift = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(z))) + 10);
  CompensatedSum sum;
  for (int n = 1; n < n_shift; ++n) {
    sum.add(std::exp(-z * std::log(static_cast<double>(n))));
  }
  const double big_n = n_shift;
  const cplx n_pow = std::exp(-z * std::log(big_n));  // N^{-s}
  sum.add(n_pow * big_n / (z - 1.0));
  sum.add(0.5 * n_pow);
  // s (s+1) ... (s + 2k - 2) N^{-s-2k+1}
  cplx rising = z;
  cplx power = n_pow / big_n;
  for (std::size_t k = 0; k < kCoefficients.size(); ++k) {
    sum.add(kCoefficients[k] * rising * power);
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (z + j) * (z + j + 1.0);
    power /= big_n * big_n;
  }
  return sum.value();
}

cplx zeta_from_r(ComplexPoint s) {
  const cplx z = s.value();
  if (std::abs(z - 1.0) < 1e-14) {
    throw Error(ErrorKind::pole, "zeta_from_r: pole at s = 1");
  }
  const ComplexPoint mirrored(1.0 - s.sigma, s.t);  // 1 - conj(s)
  return r_value(s) + chi(s) * std::conj(r_value(mirrored));
}

}  // namespace rzero
