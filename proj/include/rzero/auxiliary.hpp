#pragma once

#include <functional>

#include "rzero/common.hpp"

namespace rzero {

enum class PrecisionMode { standard, compensated };

/// Discretisation of the line integral defining R(s). The line crosses the
/// real axis at crossing + 1/2 with direction e^{i pi/4}; the line
/// parameter u runs over [-half_length, half_length] with trapezoid spacing
/// step.
struct QuadratureSpec {
  int crossing = 0;
  double half_length = 4.0;
  double step = 0.125;
  PrecisionMode precision = PrecisionMode::standard;

  /// Throws Error(domain) when the invariants fail for the given target.
  void validate(double eps_target = 1e-9) const;

  /// Saddle-aligned crossing with default length and step.
  static QuadratureSpec automatic(ComplexPoint s,
                                  PrecisionMode precision = PrecisionMode::standard);
};

/// Index of the integer interval (q, q+1) closest to the saddle point
/// x0 = sqrt(s / 2 pi i) measured along the quadrature direction.
int saddle_crossing(ComplexPoint s);

/// Default half length sqrt(log(1/eps)/pi) + sqrt(|t|)/4.
double default_half_length(double t, double eps_target = 1e-9);

enum class Method { quadrature, asymptotic };

const char* to_string(Method m);

struct EvaluationResult {
  cplx value;
  Method method = Method::quadrature;
  double error_estimate = 0.0;
  double u_proxy = 0.0;
  /// Sum of |terms| behind the value (same units as error_estimate); sets
  /// the floor for absolute accuracy near zeros.
  double scale = 0.0;
  /// log |value|, kept separately because it can exceed the double range
  /// far left in the plane. value == mantissa * exp(log_scale).
  cplx mantissa;
  double log_scale = 0.0;

  cplx log_value() const { return std::log(mantissa) + log_scale; }
};

/// R(s) by trapezoidal quadrature with the given (fixed) spec. The error
/// estimate compares against the rule with doubled step and adds the
/// truncation tail and a rounding floor.
EvaluationResult r_integral(ComplexPoint s, const QuadratureSpec& spec);

struct EvalOptions {
  PrecisionMode precision = PrecisionMode::standard;
  double eps_target = 1e-9;
  /// -1 selects the saddle-aligned crossing.
  int crossing = -1;
};

/// R(s) with automatic crossing and step/length refinement.
EvaluationResult r_eval(ComplexPoint s, const EvalOptions& options = {});

/// Convenience: value only.
cplx r_value(ComplexPoint s);

struct AsymptoticOptions {
  double t_desk = 50.0;
  double a_desk = 1.0;
  /// Compare against quadrature to fill u_proxy.
  bool with_reference = true;
};

/// Left-region factorisation
///   -chi(s) eta^{s-1} e^{-pi i eta^2} sqrt(2) e^{3 pi i/8} sin(pi eta) / (2 cos 2 pi eta)
/// evaluated in the log domain.
EvaluationResult r_asymptotic(ComplexPoint s, const AsymptoticOptions& options = {});

/// log of each factor of the left-region surrogate; they sum to the log of
/// the surrogate.
struct SurrogateFactors {
  cplx log_chi;
  cplx log_eta_power;  // (s - 1) log eta
  cplx log_gauss;      // -pi i eta^2
  cplx log_constant;   // log(-sqrt(2) e^{3 pi i/8})
  cplx log_ratio;      // log(sin(pi eta) / (2 cos 2 pi eta))
  cplx total() const {
    return log_chi + log_eta_power + log_gauss + log_constant + log_ratio;
  }
};

SurrogateFactors surrogate_factors(ComplexPoint s);

struct DerivativeResult {
  cplx value;
  double error_estimate = 0.0;
};

/// R'(s) by Cauchy's formula on a ring of 16 points of the given radius.
/// The error estimate compares against a ring of half the radius.
DerivativeResult r_derivative(ComplexPoint s, double radius = 1e-2);

/// The same ring rule for any f analytic near s.
DerivativeResult cauchy_derivative(const std::function<cplx(ComplexPoint)>& f, ComplexPoint s,
                                   double radius = 1e-2);

/// zeta(s) by Euler-Maclaurin summation with 8 Bernoulli terms.
cplx zeta_reference(ComplexPoint s);

/// zeta(s) = R(s) + chi(s) conj(R(1 - conj(s))).
cplx zeta_from_r(ComplexPoint s);

}  // namespace rzero
