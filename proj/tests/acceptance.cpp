// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rzero/argument.hpp"
#include "rzero/auxiliary.hpp"
#include "rzero/special_functions.hpp"
#include "rzero/zeros.hpp"

using namespace rzero;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& detail, double seconds) {
  std::printf("criterion %d: %s  %s  (%.1f s)\n", id, ok ? "PASS" : "FAIL", detail.c_str(),
              seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), pattern, a, b, c);
  return buffer;
}

void run(int id, const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  verdict(id, ok, detail, seconds);
}

const ComplexFunction kR = [](ComplexPoint s) { return r_value(s); };

cplx poly(const std::vector<cplx>& roots, cplx z) {
  cplx v = 1.0;
  for (const cplx& r : roots) v *= z - r;
  return v;
}

double segment_distance(cplx a, cplx b, cplx z) {
  const cplx d = b - a;
  const double tau = std::clamp(std::real((z - a) * std::conj(d)) / std::norm(d), 0.0, 1.0);
  return std::abs(z - (a + tau * d));
}

bool identity(std::string& detail) {
  double worst = 0.0;
  for (double sigma : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    for (int k = 1; k <= 20; ++k) {
      const ComplexPoint s(sigma, 5.0 * k);
      const cplx ref = zeta_reference(s);
      worst = std::max(worst, std::abs(zeta_from_r(s) - ref) / std::abs(ref));
    }
  }
  detail = fmt("worst relative deviation %.3g (limit 1e-8)", worst);
  return worst <= 1e-8;
}

bool counting(std::string& detail) {
  bool ok = true;
  for (double big_t : {50.0, 100.0, 200.0, 400.0}) {
    const CountResult count = count_zeros(10.0, big_t, -6.0);
    const LocateResult located = locate_r_zeros({count.box_left, 2.0, 10.0, big_t});
    const int listed = static_cast<int>(located.zeros.size()) + count.base_count;
    ok = ok && listed == count.count && located.clusters.empty();
    detail += fmt("T=%g N=%g listed=%g; ", big_t, count.count, listed);
  }
  return ok;
}

bool sqrt_term(std::string& detail) {
  std::vector<double> ts;
  for (int k = 1; k <= 20; ++k) ts.push_back(100.0 * k);
  const std::vector<ResidualRow> rows = residual_table(ts);
  bool bounded = true;
  double worst_ratio = 0.0;
  std::printf("  %6s %5s %10s %10s %8s\n", "T", "N", "residual", "log^2 T", "ratio");
  for (const ResidualRow& row : rows) {
    const CountResult& r = row.result;
    bounded = bounded && std::abs(r.residual) <= 5.0 * std::pow(r.big_t, 0.4);
    const double log2 = std::pow(std::log(r.big_t), 2);
    worst_ratio = std::max(worst_ratio, std::abs(r.residual) / log2);
    std::printf("  %6.0f %5d %10.4f %10.4f %8.4f\n", r.big_t, r.count, r.residual, log2,
                std::abs(r.residual) / log2);
  }
  const double c = fit_sqrt_coefficient(rows);
  const auto [c_offset, offset] = fit_sqrt_with_offset(rows);
  std::printf("  fit with constant term: c = %.4f, offset = %.4f\n", c_offset, offset);
  detail = fmt("c = %.4f (band [-0.55, -0.45]); max |res|/log^2 T = %.3f", c, worst_ratio) +
           (bounded ? "; residuals within 5 T^0.4" : "; residual exceeds 5 T^0.4");
  return bounded && c >= -0.55 && c <= -0.45;
}

bool backlund(std::string& detail) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 12);
  int violations = 0;
  double worst = 0.0;
  const int trials = 1000;
  for (int k = 0; k < trials; ++k) {
    const cplx a(4.0 * unit(rng) - 2.0, 4.0 * unit(rng) - 2.0);
    const double radius = 1.0 + 2.0 * unit(rng);
    const double reach = radius * (0.1 + 0.8 * unit(rng));
    const cplx b = a + std::polar(reach, kTwoPi * unit(rng));
    std::vector<cplx> roots;
    const int d = degree(rng);
    while (static_cast<int>(roots.size()) < d) {
      const cplx z = a + std::polar(2.0 * radius * std::sqrt(unit(rng)), kTwoPi * unit(rng));
      if (segment_distance(a, b, z) >= 1e-2) roots.push_back(z);
    }
    // The product of distances bounds sup |f| on the disc from above.
    double log_m = 0.0;
    for (const cplx& r : roots) log_m += std::log(std::abs(a - r) + radius);
    const BacklundInput input{log_m, std::log(std::abs(poly(roots, a))), radius, reach};
    const ComplexFunction f = [&roots](ComplexPoint z) { return poly(roots, z.value()); };
    const double realised =
        std::abs(arg_variation(f, PathSegment::straight(ComplexPoint(a), ComplexPoint(b)))
                     .total_variation) /
        kTwoPi;
    const double bound = backlund_bound(input);
    if (realised > bound) ++violations;
    if (bound > 0.0) worst = std::max(worst, realised / bound);
  }
  detail = fmt("%g of %g polynomials within the bound, worst realised/bound %.3f",
               trials - violations, trials, worst);
  return violations == 0;
}

bool surrogate(std::string& detail) {
  double worst = 0.0;
  double worst_late = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double t = 50.0 + (2000.0 - 50.0) * k / 49.0;
    const double u = r_asymptotic({left_curve_sigma(t, 1.0), t}).u_proxy;
    worst = std::max(worst, u);
    if (t >= 500.0) worst_late = std::max(worst_late, u);
  }
  detail = fmt("max u_proxy %.4f (limit 1); for t >= 500: %.4f (expected <= 0.5)", worst,
               worst_late);
  return worst < 1.0;
}

bool identities(std::string& detail) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> sigma(-3.0, 4.0);
  std::uniform_real_distribution<double> t(1.0, 100.0);
  std::uniform_real_distribution<double> eta_sigma(-10.0, 10.0);
  std::uniform_real_distribution<double> log_t(std::log(0.1), std::log(1e5));
  const int samples = 1000000;
  double worst_chi = 0.0;
  double worst_branch = 0.0;
  double worst_gauss = 0.0;
  for (int k = 0; k < samples; ++k) {
    const ComplexPoint p(sigma(rng), t(rng));
    worst_chi = std::max(worst_chi, std::abs(chi(p) * chi({1.0 - p.sigma, -p.t}) - 1.0));
    const ComplexPoint s(eta_sigma(rng), std::exp(log_t(rng)));
    const EtaValue e = eta(s);
    double dev = std::abs(e.value * e.value - e.square) / std::max(1.0, std::abs(e.square));
    if (!(e.value.real() + e.value.imag() > 0.0)) dev = INFINITY;
    worst_branch = std::max(worst_branch, dev);
    const double gauss = std::imag(cplx(0.0, -kPi) * e.value * e.value);
    worst_gauss = std::max(worst_gauss, std::abs(gauss + 0.5 * s.t) / (0.5 * s.t));
  }
  detail = fmt("chi*chi %.3g (1e-10), branch %.3g (1e-12), Gauss %.3g (1e-12)", worst_chi,
               worst_branch, worst_gauss);
  return worst_chi <= 1e-10 && worst_branch <= 1e-12 && worst_gauss <= 1e-12;
}

bool band(std::string& detail) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sigma(2.0, 8.0);
  std::uniform_real_distribution<double> t(10.0, 1000.0);
  int nonzero = 0;
  for (int k = 0; k < 20; ++k) {
    double s0 = sigma(rng), s1 = sigma(rng), t0 = t(rng), t1 = t(rng);
    if (s0 > s1) std::swap(s0, s1);
    if (t0 > t1) std::swap(t0, t1);
    s1 = std::max(s1, s0 + 0.05);
    t1 = std::max(t1, t0 + 0.5);
    s1 = std::min(s1, 8.0);
    s0 = std::min(s0, s1 - 0.05);
    t1 = std::min(t1, 1000.0);
    t0 = std::min(t0, t1 - 0.5);
    if (winding_number(kR, ContourSpec::rectangle(s0, s1, t0, t1)).count != 0) ++nonzero;
  }
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    worst = std::max(worst, std::abs(r_value({sigma(rng), t(rng)}) - 1.0));
  }
  detail = fmt("%g of 20 rectangles with nonzero winding; max |R - 1| = %.4f (limit 0.75)",
               nonzero, worst);
  return nonzero == 0 && worst <= 0.75;
}

bool fraction(std::string& detail) {
  const CountResult count = count_zeros(10.0, 500.0, -6.0);
  const LocateResult located = locate_r_zeros({count.box_left, 2.0, 10.0, 500.0});
  const ZeroStatistics st = zero_statistics(located.zeros);
  detail = fmt("%g zeros with 10 < gamma <= 500, share with beta > 1/2: %.4f (band [0.20, 0.45])",
               st.count, st.fraction_right);
  return st.fraction_right >= 0.20 && st.fraction_right <= 0.45;
}

}  // namespace

int main() {
  run(1, identity);
  run(2, counting);
  run(3, sqrt_term);
  run(4, backlund);
  run(5, surrogate);
  run(6, identities);
  run(7, band);
  run(8, fraction);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
