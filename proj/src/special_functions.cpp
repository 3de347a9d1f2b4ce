#include "rzero/special_functions.hpp"

#include <array>

namespace rzero {
namespace {

// B_{2k} for k = 1..10.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,   1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0, 7.0 / 6.0,     -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0};

constexpr double kPoleTolerance = 1e-14;
const double kLogTwoPi = std::log(kTwoPi);
const double kHalfLogTwoPi = 0.5 * std::log(kTwoPi);

cplx stirling(cplx z) {
  cplx result = (z - 0.5) * std::log(z) - z + kHalfLogTwoPi;
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx power = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const double denom = static_cast<double>(2 * k) * static_cast<double>(2 * k - 1);
    result += kBernoulli[k - 1] / denom * power;
    power *= inv2;
  }
  return result;
}

bool is_nonpositive_integer(ComplexPoint s) {
  return std::abs(s.t) <= kPoleTolerance && s.sigma <= kPoleTolerance &&
         std::abs(s.sigma - std::round(s.sigma)) <= kPoleTolerance;
}

cplx log_chi_upper(ComplexPoint s) {
  const cplx z = s.value();
  const cplx i_pi_s = cplx(0.0, kPi) * z;
  // 2 cos(pi s / 2) = e^{-i pi s / 2} (1 + e^{i pi s}); |e^{i pi s}| <= 1 here.
  const cplx one_plus = 1.0 + std::exp(i_pi_s);
  if (std::abs(one_plus) < 1e-14) {
    throw Error(ErrorKind::singular_point,
                "chi: cos(pi s/2) vanishes at " + format_point(s));
  }
  return z * kLogTwoPi - log_gamma(s) + 0.5 * i_pi_s - std::log(one_plus);
}

}  // namespace

cplx log_gamma(ComplexPoint s) {
  if (is_nonpositive_integer(s)) {
    throw Error(ErrorKind::pole, "log_gamma: pole at " + format_point(s));
  }
  cplx z = s.value();
  cplx shift_sum = 0.0;
  while (z.real() < 10.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift_sum;
}

cplx log_chi(ComplexPoint s) {
  if (s.t < 0.0) {
    return std::conj(log_chi_upper(ComplexPoint(s.sigma, -s.t)));
  }
  return log_chi_upper(s);
}

cplx chi(ComplexPoint s) {
  const cplx z = s.value();
  if (std::abs(s.t) > 5.0) {
    return std::exp(log_chi(s));
  }
  if (s.sigma > 0.5) {
    const cplx two_cos = 2.0 * std::cos(0.5 * kPi * z);
    if (std::abs(two_cos) < 1e-14) {
      throw Error(ErrorKind::singular_point,
                  "chi: cos(pi s/2) vanishes at " + format_point(s));
    }
    return std::exp(z * kLogTwoPi - log_gamma(s)) / two_cos;
  }
  // Reflected form 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) stays finite where
  // the poles of Gamma(s) and the zeros of cos(pi s/2) cancel.
  const ComplexPoint reflected(1.0 - s.sigma, -s.t);
  const cplx log_mag = z * std::log(2.0) + (z - 1.0) * std::log(kPi) + log_gamma(reflected);
  return std::exp(log_mag) * std::sin(0.5 * kPi * z);
}

EtaValue eta(ComplexPoint s) {
  if (s.sigma == 1.0 && s.t == 0.0) {
    throw Error(ErrorKind::degenerate_point, "eta: branch undefined at s = 1");
  }
  // (s - 1) / (2 pi i) = (t + i (1 - sigma)) / (2 pi)
  const cplx square(s.t / kTwoPi, (1.0 - s.sigma) / kTwoPi);
  cplx root = std::sqrt(square);
  const double side = root.real() + root.imag();
  if (side < 0.0 || (side == 0.0 && root.real() < 0.0)) {
    root = -root;
  }
  return {root, square};
}

EtaSeries eta_series(double sigma, double t, int order) {
  if (order < 1) {
    throw Error(ErrorKind::domain, "eta_series: order must be >= 1");
  }
  if (!(t > 0.0)) {
    throw Error(ErrorKind::domain, "eta_series: requires t > 0");
  }
  const double x = (1.0 - sigma) / t;
  if (!(std::abs(x) < 0.5)) {
    throw Error(ErrorKind::divergence, "eta_series: |(1 - sigma)/t| must be < 1/2");
  }
  const cplx w(0.0, x);  // i x
  const double scale = std::sqrt(t / kTwoPi);

  // (1 + w)^{1/2} = sum binom(1/2, k) w^k
  cplx sqrt_sum = 1.0;
  double binom = 1.0;
  cplx power = 1.0;
  // log(1 + w) / 2 = sum (-1)^{k+1} w^k / (2k)
  cplx log_sum = 0.0;
  for (int k = 1; k <= order; ++k) {
    binom *= (0.5 - (k - 1)) / k;
    power *= w;
    sqrt_sum += binom * power;
    log_sum += ((k % 2 == 1) ? 1.0 : -1.0) * power / (2.0 * k);
  }
  const int next = order + 1;
  const double next_binom = binom * (0.5 - order) / next;
  const double next_power = std::pow(std::abs(x), next);

  EtaSeries out;
  out.eta = {order, scale * sqrt_sum, scale * std::abs(next_binom) * next_power};
  out.log_eta = {order, 0.5 * std::log(t / kTwoPi) + log_sum, next_power / (2.0 * next)};
  return out;
}

SeriesEvaluation log_s_series(double sigma, double t, int order) {
  if (order < 1) {
    throw Error(ErrorKind::domain, "log_s_series: order must be >= 1");
  }
  if (!(t > std::abs(sigma))) {
    throw Error(ErrorKind::domain, "log_s_series: requires t > |sigma|");
  }
  const double y = sigma / t;
  const cplx w(0.0, y);
  // log(1 - w) = -sum w^k / k
  cplx sum = 0.0;
  cplx power = 1.0;
  for (int k = 1; k <= order; ++k) {
    power *= w;
    sum -= power / static_cast<double>(k);
  }
  const int next = order + 1;
  return {order, cplx(std::log(t), 0.5 * kPi) + sum,
          std::pow(std::abs(y), next) / next};
}

ArgChiAsymptotic arg_chi_asymptotic(double sigma, double t) {
  if (!(t >= 10.0)) {
    throw Error(ErrorKind::domain, "arg_chi_asymptotic: requires t >= 10");
  }
  const double leading = -t * std::log(t / kTwoPi) + t;
  const double correction = 0.25 * kPi - sigma / (2.0 * t) + sigma * sigma / (2.0 * t);
  return {leading, correction};
}

double unwrap_chi_phase(double sigma, double t_from, double t_to, double start_phase,
                        double initial_step) {
  if (!(initial_step > 0.0)) {
    throw Error(ErrorKind::domain, "unwrap_chi_phase: step must be positive");
  }
  const double direction = t_to >= t_from ? 1.0 : -1.0;
  double phase = start_phase;
  double t = t_from;
  cplx prev = chi(ComplexPoint(sigma, t));
  double step = initial_step;
  while (direction * (t_to - t) > 0.0) {
    const double next_t = direction > 0 ? std::min(t + step, t_to) : std::max(t - step, t_to);
    const cplx next = chi(ComplexPoint(sigma, next_t));
    const double jump = std::arg(next / prev);
    if (std::abs(jump) >= 0.5 * kPi) {
      step *= 0.5;
      if (step < 1e-12) {
        throw Error(ErrorKind::non_convergence, "unwrap_chi_phase: step underflow");
      }
      continue;
    }
    phase += jump;
    prev = next;
    t = next_t;
    step = std::min(initial_step, 2.0 * step);
  }
  return phase;
}

}  // namespace rzero
