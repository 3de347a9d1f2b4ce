#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rzero {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class ErrorKind {
  pole,                  // pole of Gamma / zeta
  singular_point,        // chi at an odd positive integer
  degenerate_point,      // eta at s = 1
  divergence,            // series outside its convergence domain
  domain,                // generic precondition violation
  path_through_pole,     // quadrature line meets a pole of the kernel
  non_convergence,       // quadrature or Newton failed to converge
  region,                // asymptotic surrogate outside its region
  near_zero_denominator, // cos(2 pi eta) vanishes
  zero_on_path,          // argument tracking met a zero of f
  non_integer_winding,   // winding far from an integer
  contour_zero_persistent,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A point s = sigma + i t. Construction rejects non-finite components.
struct ComplexPoint {
  double sigma = 0.0;
  double t = 0.0;

  ComplexPoint() = default;
  ComplexPoint(double sigma_, double t_) : sigma(sigma_), t(t_) {
    if (!std::isfinite(sigma) || !std::isfinite(t)) {
      throw Error(ErrorKind::domain, "ComplexPoint: non-finite component");
    }
  }
  explicit ComplexPoint(cplx z) : ComplexPoint(z.real(), z.imag()) {}

  cplx value() const { return {sigma, t}; }

  friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

std::string format_point(const ComplexPoint& s);

/// Neumaier-compensated accumulator for complex sums.
class CompensatedSum {
 public:
  void add(cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  struct Real {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
      const double s = sum + x;
      if (std::abs(sum) >= std::abs(x)) {
        carry += (sum - s) + x;
      } else {
        carry += (x - s) + sum;
      }
      sum = s;
    }
    double value() const { return sum + carry; }
  };
  Real re_;
  Real im_;
};

}  // namespace rzero
