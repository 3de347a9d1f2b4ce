#include "rzero/common.hpp"

#include <cstdio>

namespace rzero {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::singular_point: return "singular-point";
    case ErrorKind::degenerate_point: return "degenerate-point";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::domain: return "domain";
    case ErrorKind::path_through_pole: return "path-through-pole";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::region: return "region";
    case ErrorKind::near_zero_denominator: return "near-zero-denominator";
    case ErrorKind::zero_on_path: return "zero-on-path";
    case ErrorKind::non_integer_winding: return "non-integer-winding";
    case ErrorKind::contour_zero_persistent: return "contour-zero-persistent";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

std::string format_point(const ComplexPoint& s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", s.sigma, s.t);
  return buf;
}

}  // namespace rzero
