#include <gtest/gtest.h>

#include "rzero/auxiliary.hpp"
#include "rzero/zeros.hpp"

using namespace rzero;

namespace {

// Lowest zero of R above t = 10, from a 50-digit secant iteration on the
// line integral (tests/oracles.hpp).
constexpr double kFirstBeta = -1.5728670009776071154;
constexpr double kFirstGamma = 22.422892389329772762;

cplx poly(const std::vector<cplx>& roots, cplx z) {
  cplx v = 1.0;
  for (const cplx& r : roots) v *= z - r;
  return v;
}

const LocateResult& low_box() {
  static const LocateResult result = locate_r_zeros({-4.0, 2.0, 10.0, 60.0});
  return result;
}

}  // namespace

TEST(Isolate, EmptyBox) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value() - cplx(5.0, 5.0); };
  const IsolationResult r = isolate_zeros(f, {0.0, 1.0, 0.0, 1.0});
  EXPECT_EQ(r.box_winding, 0);
  EXPECT_TRUE(r.isolated.empty());
  EXPECT_TRUE(r.clusters.empty());
}

TEST(Isolate, TwoSimpleZeros) {
  const std::vector<cplx> roots = {{0.3, 0.4}, {1.6, 1.2}};
  const ComplexFunction f = [&roots](ComplexPoint z) { return poly(roots, z.value()); };
  const IsolationResult r = isolate_zeros(f, {0.0, 2.0, 0.0, 2.0});
  ASSERT_EQ(r.isolated.size(), 2u);
  for (const cplx& root : roots) {
    int hits = 0;
    for (const Rectangle& box : r.isolated) hits += box.contains(ComplexPoint(root));
    EXPECT_EQ(hits, 1) << root;
  }
}

TEST(Isolate, ClusterReported) {
  const std::vector<cplx> roots = {{0.5, 0.5}, {0.5 + 1e-5, 0.5}};
  const ComplexFunction f = [&roots](ComplexPoint z) { return poly(roots, z.value()); };
  const IsolationResult r = isolate_zeros(f, {0.1, 1.1, 0.1, 1.1});
  EXPECT_EQ(r.box_winding, 2);
  ASSERT_EQ(r.clusters.size(), 1u);
  EXPECT_EQ(r.cluster_windings.front(), 2);
  EXPECT_LE(r.clusters.front().max_side(), 1e-3);
}

TEST(Isolate, PartitionOfWinding) {
  const std::vector<cplx> roots = {{0.2, 0.3}, {0.25, 0.31}, {1.9, 1.1}, {1.0, 1.0}, {1.0, 1.0}};
  const ComplexFunction f = [&roots](ComplexPoint z) { return poly(roots, z.value()); };
  const IsolationResult r = isolate_zeros(f, {0.0, 2.05, 0.0, 2.05});
  int total = static_cast<int>(r.isolated.size());
  for (int w : r.cluster_windings) total += w;
  EXPECT_EQ(total, r.box_winding);
  EXPECT_EQ(r.box_winding, 5);
}

TEST(Isolate, RBoxMatchesCount) {
  const LocateResult& r = low_box();
  const BoxCount count = count_in_box([](ComplexPoint s) { return r_value(s); }, -4.0, 2.0, 10.0,
                                     60.0);
  EXPECT_EQ(static_cast<int>(r.zeros.size()), count.count);
  EXPECT_EQ(r.box_winding, count.count);
}

TEST(Refine, QuadraticRoot) {
  const ComplexFunction f = [](ComplexPoint z) { return z.value() * z.value() - cplx(2.0, 2.0); };
  const DerivativeFunction df = [](ComplexPoint z) { return 2.0 * z.value(); };
  const Zero z = refine_zero(f, df, {1.0, 2.0, 0.2, 1.0});
  const cplx root = std::polar(std::sqrt(2.0 * std::sqrt(2.0)), kPi / 8.0);
  EXPECT_LT(std::abs(cplx(z.beta, z.gamma) - root), 1e-10);
  EXPECT_EQ(z.winding_certificate, 1);
}

TEST(Refine, QuadraticConvergence) {
  const ComplexFunction f = [](ComplexPoint z) {
    return std::exp(z.value()) - cplx(2.0, 1.0);
  };
  const DerivativeFunction df = [](ComplexPoint z) { return std::exp(z.value()); };
  RefineOptions options;
  options.step_tol = 1e-14;
  const Zero z = refine_zero(f, df, {0.0, 1.5, 0.0, 1.0}, options);
  const std::vector<double>& e = z.newton_steps;
  ASSERT_GE(e.size(), 4u);
  // Steps approximate errors; the ratio e_{k+1} / e_k^2 stays bounded.
  for (std::size_t k = e.size() - 4; k + 1 < e.size() - 1; ++k) {
    EXPECT_LT(e[k + 1] / (e[k] * e[k]), 10.0) << k;
  }
}

TEST(Refine, FirstZeroFixture) {
  const LocateResult& r = low_box();
  ASSERT_FALSE(r.zeros.empty());
  const Zero& z = r.zeros.front();
  EXPECT_NEAR(z.beta, kFirstBeta, 1e-10);
  EXPECT_NEAR(z.gamma, kFirstGamma, 1e-10);
}

TEST(Refine, ZeroInvariants) {
  for (const Zero& z : low_box().zeros) {
    EXPECT_EQ(z.winding_certificate, 1);
    EXPECT_GT(z.gamma, 0.0);
    EXPECT_LE(z.residual_modulus, 1e-8 * z.residual_scale);
    EXPECT_GT(z.enclosure_radius, 0.0);
  }
}

TEST(Refine, IndependentCircleCertificate) {
  const ComplexFunction f = [](ComplexPoint s) { return r_value(s); };
  for (const Zero& z : low_box().zeros) {
    const double radius = 7.0 * z.enclosure_radius;
    const Winding w =
        winding_number(f, {{PathSegment::circle({z.beta, z.gamma}, radius)}, true});
    EXPECT_EQ(w.count, 1) << z.beta << " " << z.gamma;
  }
}

TEST(Locate, Deterministic) {
  const LocateResult a = locate_r_zeros({-6.0, 2.0, 60.0, 120.0});
  const LocateResult b = locate_r_zeros({-6.0, 2.0, 60.0, 120.0});
  ASSERT_EQ(a.zeros.size(), b.zeros.size());
  for (std::size_t k = 0; k < a.zeros.size(); ++k) {
    EXPECT_EQ(a.zeros[k].beta, b.zeros[k].beta);
    EXPECT_EQ(a.zeros[k].gamma, b.zeros[k].gamma);
    EXPECT_EQ(a.zeros[k].enclosure_radius, b.zeros[k].enclosure_radius);
    EXPECT_EQ(a.zeros[k].residual_modulus, b.zeros[k].residual_modulus);
  }
  for (std::size_t k = 1; k < a.zeros.size(); ++k) {
    EXPECT_LE(a.zeros[k - 1].gamma, a.zeros[k].gamma);
  }
}

TEST(Statistics, Arithmetic) {
  std::vector<Zero> one(1);
  one[0].beta = 0.0;
  one[0].gamma = 20.0;
  EXPECT_EQ(zero_statistics(one).fraction_right, 0.0);

  std::vector<Zero> six(6);
  const double betas[] = {0.9, -1.0, 0.2, 0.7, 0.5, -3.0};
  for (int k = 0; k < 6; ++k) {
    six[k].beta = betas[k];
    six[k].gamma = 10.0 + k;
  }
  const ZeroStatistics st = zero_statistics(six);
  EXPECT_DOUBLE_EQ(st.fraction_right, 1.0 / 3.0);
  EXPECT_EQ(st.count, 6);
  EXPECT_EQ(st.min_beta, -3.0);
  EXPECT_EQ(st.max_beta, 0.9);
  EXPECT_DOUBLE_EQ(st.mean_gap, 1.0);
  EXPECT_THROW(zero_statistics({}), Error);
}

TEST(Statistics, RightOfCriticalLine) {
  const CountResult count = count_zeros(10.0, 500.0, -6.0);
  const LocateResult r = locate_r_zeros({count.box_left, 2.0, 10.0, 500.0});
  EXPECT_EQ(static_cast<int>(r.zeros.size()), count.count - count.base_count);
  const ZeroStatistics st = zero_statistics(r.zeros);
  std::printf("zeros with 10 < gamma <= 500: %d, share with beta > 1/2: %.4f\n", st.count,
              st.fraction_right);
  EXPECT_GE(st.fraction_right, 0.20);
  EXPECT_LE(st.fraction_right, 0.45);
}
