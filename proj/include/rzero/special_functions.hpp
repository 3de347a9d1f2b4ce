#pragma once

#include "rzero/common.hpp"

namespace rzero {

/// log Gamma(s), continued analytically from the positive real axis.
/// Stirling series with 10 Bernoulli terms after an upward shift to Re >= 10.
cplx log_gamma(ComplexPoint s);

/// log chi(s) with chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s / 2)).
/// The imaginary part is the analytic branch in the upper half plane: it is
/// continuous along vertical lines and vanishes on (0, 1).
cplx log_chi(ComplexPoint s);

/// chi(s); direct product for |t| <= 5, exp(log_chi) otherwise.
cplx chi(ComplexPoint s);

struct EtaValue {
  cplx value;   // eta
  cplx square;  // (s - 1) / (2 pi i)
};

/// eta = sqrt((s - 1) / (2 pi i)) on the branch Re(eta) + Im(eta) > 0.
EtaValue eta(ComplexPoint s);

struct SeriesEvaluation {
  int order = 1;  // highest retained power of the expansion variable
  cplx value;
  double truncation_estimate = 0.0;  // modulus of the first dropped term
};

struct EtaSeries {
  SeriesEvaluation eta;
  SeriesEvaluation log_eta;
};

/// Expansions of eta and log eta in powers of x = (1 - sigma) / t:
///   eta     = sqrt(t / 2 pi) (1 + i x)^(1/2)
///   log eta = log(t / 2 pi) / 2 + log(1 + i x) / 2
/// Requires t > 0 and |x| < 1/2.
EtaSeries eta_series(double sigma, double t, int order);

/// log s = log t + i pi / 2 + log(1 - i sigma / t), expanded in sigma / t.
/// Requires t > |sigma|.
SeriesEvaluation log_s_series(double sigma, double t, int order);

struct ArgChiAsymptotic {
  double leading;     // -t log(t / 2 pi) + t
  double correction;  // pi / 4 - sigma / 2t + sigma^2 / 2t
  double total() const { return leading + correction; }
};

/// Asymptotic arg chi(sigma + i t); requires t >= 10.
ArgChiAsymptotic arg_chi_asymptotic(double sigma, double t);

/// Tracks arg chi along the vertical line Re s = sigma from t_from to t_to,
/// starting at start_phase. Steps are halved whenever a phase jump reaches
/// pi / 2.
double unwrap_chi_phase(double sigma, double t_from, double t_to,
                        double start_phase, double initial_step = 0.25);

}  // namespace rzero
