#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rzero/argument.hpp"
#include "rzero/auxiliary.hpp"
#include "rzero/zeros.hpp"

using namespace rzero;

namespace {

const ComplexFunction kR = [](ComplexPoint s) { return r_value(s); };

cplx poly(const std::vector<cplx>& roots, cplx z) {
  cplx v = 1.0;
  for (const cplx& r : roots) v *= z - r;
  return v;
}

}  // namespace

TEST(BacklundBound, ClosedForms) {
  EXPECT_EQ(backlund_bound(BacklundInput::from_values(3.0, 3.0, 2.0, 1.0)), 0.0);
  const double e = std::exp(1.0);
  EXPECT_NEAR(backlund_bound(BacklundInput::from_values(e * e, 1.0, e, 1.0)), 1.0, 1e-15);
  const double expected =
      static_cast<double>(log(oracle::real(400)) / 2 / log(oracle::real(2)));
  EXPECT_NEAR(backlund_bound(BacklundInput::from_values(100.0, 0.25, 2.0, 1.0)), expected,
              1e-14);
  EXPECT_NEAR(expected, 4.3219, 1e-4);
}

TEST(BacklundBound, RejectsBadGeometry) {
  EXPECT_THROW(backlund_bound(BacklundInput::from_values(1.0, 2.0, 2.0, 1.0)), Error);
  EXPECT_THROW(backlund_bound(BacklundInput::from_values(2.0, 1.0, 1.0, 1.0)), Error);
}

TEST(ArgVariation, IdentityQuarterTurn) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value(); };
  const ArgTrace trace = arg_variation(f, PathSegment::straight({1.0, 0.0}, {0.0, 1.0}));
  EXPECT_NEAR(trace.total_variation, 0.5 * kPi, 1e-14);
  for (std::size_t k = 1; k < trace.phases.size(); ++k) {
    EXPECT_LT(std::abs(trace.phases[k] - trace.phases[k - 1]), 0.5 * kPi);
  }
  EXPECT_EQ(trace.total_variation, trace.phases.back() - trace.phases.front());
}

TEST(ArgVariation, ExponentialVertical) {
  const ComplexFunction f = [](ComplexPoint z) { return std::exp(z.value()); };
  for (double h : {0.3, 7.0, 40.0}) {
    const ArgTrace trace = arg_variation(f, PathSegment::straight({0.2, 1.0}, {0.2, 1.0 + h}));
    EXPECT_NEAR(trace.total_variation, h, 1e-12 * h);
  }
}

TEST(ArgVariation, RightEdgeOfR) {
  const ArgTrace trace = arg_variation(kR, PathSegment::straight({2.0, 10.0}, {2.0, 1000.0}));
  EXPECT_LE(std::abs(trace.total_variation), kPi);
}

TEST(ArgVariation, ZeroOnPath) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value() - cplx(0.5, 0.0); };
  try {
    arg_variation(f, PathSegment::straight({0.0, 0.0}, {1.0, 0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_on_path);
  }
}

TEST(Winding, SimpleZero) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value() - cplx(1.0, 10.0); };
  const Winding w = winding_number(f, ContourSpec::rectangle(0.0, 2.0, 9.0, 11.0));
  EXPECT_EQ(w.count, 1);
  EXPECT_LT(std::abs(w.raw - 1.0), 0.02);
}

TEST(Winding, Multiplicity) {
  const ComplexFunction f = [](ComplexPoint z) {
    const cplx a = z.value() - cplx(1.0, 10.0);
    return a * a * (z.value() - cplx(1.2, 10.5));
  };
  const Winding w = winding_number(f, ContourSpec::rectangle(0.0, 2.0, 9.0, 11.0));
  EXPECT_EQ(w.count, 3);
  EXPECT_LT(std::abs(w.raw - 3.0), 0.02);
}

TEST(Winding, CircleAndCurvedRegion) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value() - cplx(-3.0, 60.0); };
  EXPECT_EQ(winding_number(f, {{PathSegment::circle({-3.2, 60.1}, 0.5)}, true}).count, 1);
  EXPECT_EQ(winding_number(f, {{PathSegment::circle({-4.0, 60.0}, 0.5)}, true}).count, 0);
  // The curved region [1 - t^{2/5} log t, 2] x [50, 70] holds -3 + 60i.
  EXPECT_EQ(winding_number(f, ContourSpec::curved_region(50.0, 70.0)).count, 1);
}

TEST(Winding, RMatchesLocatorOnBox) {
  const Winding w = winding_number(kR, ContourSpec::rectangle(-2.0, 2.0, 10.0, 60.0));
  const LocateResult located = locate_r_zeros({-2.0, 2.0, 10.0, 60.0});
  EXPECT_EQ(w.count, static_cast<int>(located.zeros.size()));
  EXPECT_LT(std::abs(w.raw - w.count), 0.02);
}

TEST(Winding, AdditivityUnderHorizontalBisection) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < 6; ++k) {
    const double lo = 10.0 + 300.0 * unit(rng);
    const double hi = lo + 5.0 + 40.0 * unit(rng);
    const double mid = lo + (hi - lo) * (0.3 + 0.4 * unit(rng));
    const int whole = count_in_box(kR, -8.0, 2.0, lo, hi).count;
    const BoxCount lower = count_in_box(kR, -8.0, 2.0, lo, mid);
    const BoxCount upper = count_in_box(kR, -8.0, 2.0, lower.t_hi, hi);
    EXPECT_EQ(whole, lower.count + upper.count) << lo << " " << mid << " " << hi;
  }
}

TEST(ModulusBound, Values) {
  using oracle::real;
  const real t = 100;
  const double right = static_cast<double>(sqrt(t / (2 * oracle::pi())));
  EXPECT_NEAR(modulus_bound(1.0, 100.0), right, 1e-13);
  EXPECT_NEAR(right, 3.98942, 1e-5);
  const double left =
      static_cast<double>(19 * t / (2 * oracle::pi()) * pow(1 + t * t, real(0.25)));
  EXPECT_NEAR(modulus_bound(0.0, 100.0), left, 1e-11 * left);
  EXPECT_NEAR(left, 3024.0, 0.1);
  EXPECT_THROW(modulus_bound(0.5, 16.0 * kPi), Error);
  EXPECT_NEAR(log_modulus_bound(-30.0, 500.0), std::log(modulus_bound(-30.0, 500.0)), 1e-12);
}

TEST(MainTerm, ClosedForms) {
  const MainTerm a = main_term(kTwoPi);
  EXPECT_NEAR(a.smooth, -0.5, 1e-15);
  EXPECT_NEAR(a.sqrt_term, 0.5, 1e-15);
  EXPECT_NEAR(a.value(), -1.0, 1e-15);
  const double e = std::exp(1.0);
  const MainTerm b = main_term(kTwoPi * e * e);
  EXPECT_NEAR(b.smooth, 0.5 * e * e, 1e-13);
  EXPECT_NEAR(b.sqrt_term, 0.5 * e, 1e-14);
  EXPECT_NEAR(b.value(), 2.33539, 1e-5);
}

TEST(MainTerm, AtThousand) {
  using oracle::real;
  const real t = 1000;
  const real two_pi = 2 * oracle::pi();
  const real v = t / (2 * two_pi) * log(t / two_pi) - t / (2 * two_pi) - sqrt(t / two_pi) / 2;
  EXPECT_NEAR(main_term(1000.0).value(), static_cast<double>(v), 1e-12);
  EXPECT_NEAR(main_term(1000.0).value(), 317.560, 5e-3);
}

TEST(CountZeros, EmptyStrip) {
  const CountResult r = count_zeros(10.0, 10.0, -6.0);
  EXPECT_EQ(r.count, r.base_count);
  EXPECT_DOUBLE_EQ(r.residual, r.count - r.main_value);
}

TEST(CountZeros, MatchesLocator) {
  const CountResult r = count_zeros(10.0, 100.0, -6.0);
  const LocateResult strip = locate_r_zeros({r.box_left, 2.0, 10.0, 100.0});
  const LocateResult base = locate_r_zeros({r.box_left, 2.0, 0.5, 10.0});
  EXPECT_EQ(r.count - r.base_count, static_cast<int>(strip.zeros.size()));
  EXPECT_EQ(r.base_count, static_cast<int>(base.zeros.size()));
  for (const Certificate& c : r.certificates) EXPECT_TRUE(c.ok) << c.segment;
}

TEST(CountZeros, Additivity) {
  const CountResult whole = count_zeros(10.0, 200.0, -6.0);
  const CountResult low = count_zeros(10.0, 100.0, -6.0, 1e-3, whole.base_count);
  const CountResult high = count_zeros(100.0, 200.0, -6.0, 1e-3, 0);
  EXPECT_EQ(whole.count, low.count + high.count);
}

TEST(CountZeros, LeftEdgeExtendsWhenStripHoldsZeros) {
  // Zeros with beta < -6 appear between T = 200 and 300.
  const CountResult r = count_zeros(200.0, 300.0, -6.0, 1e-3, 0);
  EXPECT_LT(r.box_left, -6.0);
  for (const Certificate& c : r.certificates) EXPECT_TRUE(c.ok) << c.segment;
}

TEST(CountZeros, TopEdgeWithinBacklundBound) {
  const CountResult r = count_zeros(10.0, 400.0, -6.0);
  bool seen = false;
  for (const Certificate& c : r.certificates) {
    if (c.segment == "L3") {
      seen = true;
      EXPECT_LE(c.realized, c.bound);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(CountZeros, Preconditions) {
  EXPECT_THROW(count_zeros(5.0, 100.0, -6.0), Error);
  EXPECT_THROW(count_zeros(10.0, 100.0, 0.0), Error);
  EXPECT_THROW(count_zeros(100.0, 10.0, -6.0), Error);
}

TEST(ResidualTable, ConsistencyAndMonotonicity) {
  std::vector<double> ts;
  for (int k = 1; k <= 10; ++k) ts.push_back(100.0 * k);
  const std::vector<ResidualRow> rows = residual_table(ts);
  ASSERT_EQ(rows.size(), ts.size());
  int previous = 0;
  for (const ResidualRow& row : rows) {
    const CountResult& r = row.result;
    EXPECT_NEAR(r.residual, r.count - r.main_value, 1e-12);
    EXPECT_GE(r.count, previous);
    EXPECT_LE(std::abs(r.residual), 5.0 * std::pow(r.big_t, 0.4));
    previous = r.count;
  }
  const double c = fit_sqrt_coefficient(rows);
  RecordProperty("sqrt_coefficient", std::to_string(c));
  std::printf("least-squares sqrt coefficient over T = 100..1000: %.4f\n", c);
  EXPECT_LE(std::abs(c + 0.5), 0.05);
}

TEST(ResidualTable, SqrtTermAtSquares) {
  for (int k = 1; k <= 6; ++k) {
    const double t = kTwoPi * k * k;
    EXPECT_EQ(main_term(t).sqrt_term, 0.5 * k) << k;
  }
}

TEST(Backlund, RandomPolynomials) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> degree(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const cplx a(unit(rng), unit(rng));
    const double radius = 1.0 + 2.0 * unit(rng);
    const double reach = radius * (0.1 + 0.8 * unit(rng));
    const cplx b = a + std::polar(reach, kTwoPi * unit(rng));
    std::vector<cplx> roots;
    const int d = degree(rng);
    while (static_cast<int>(roots.size()) < d) {
      const cplx z = a + std::polar(2.0 * radius * unit(rng), kTwoPi * unit(rng));
      // distance to the segment
      const cplx dir = (b - a) / reach;
      const double along = std::clamp(std::real((z - a) * std::conj(dir)), 0.0, reach);
      if (std::abs(z - (a + along * dir)) >= 1e-2) roots.push_back(z);
    }
    double big_m = 0.0;
    for (int j = 0; j < 4096; ++j) {
      big_m = std::max(big_m, std::abs(poly(roots, a + std::polar(radius, kTwoPi * j / 4096.0))));
    }
    const ComplexFunction f = [&roots](ComplexPoint z) { return poly(roots, z.value()); };
    const double realised =
        std::abs(arg_variation(f, PathSegment::straight(ComplexPoint(a), ComplexPoint(b)))
                     .total_variation) /
        kTwoPi;
    const double bound =
        backlund_bound(BacklundInput::from_values(1.01 * big_m, std::abs(poly(roots, a)), radius,
                                                  reach));
    ASSERT_LE(realised, bound) << "trial " << trial << " degree " << d;
  }
}

TEST(Contour, Validation) {
  EXPECT_NO_THROW(ContourSpec::rectangle(-1.0, 2.0, 10.0, 20.0).validate());
  ContourSpec broken = ContourSpec::rectangle(-1.0, 2.0, 10.0, 20.0);
  broken.segments.pop_back();
  EXPECT_THROW(broken.validate(), Error);
  EXPECT_THROW(PathSegment::straight({1.0, 1.0}, {1.0, 1.0}), Error);
  EXPECT_THROW(PathSegment::left_curve(20.0, 10.0), Error);
}
