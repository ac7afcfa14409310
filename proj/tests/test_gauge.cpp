#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "permgauge/catops.hpp"
#include "permgauge/errors.hpp"
#include "permgauge/gauge.hpp"
#include "permgauge/ringtools.hpp"

using namespace permgauge;
using GL = GaugedLabel;

namespace {

ModularData sl2(int k) { return kac_peterson({Series::A, 1, k}); }
ModularData adj5() { return tensor_subcategory(sl2(5), std::vector<std::string>{"(2)"}); }

// Fib base labels: 0 = 1, 1 = tau.
constexpr std::size_t kOne = 0, kTau = 1;

std::vector<ModularData> test_categories() {
  return {oracle::fib(), oracle::ising(), adj5(), kac_peterson({Series::G2, 2, 3})};
}

}  // namespace

TEST(GaugedLabels, CountsAndOrder) {
  EXPECT_EQ(gauged_labels(1).size(), 4u);
  EXPECT_EQ(gauged_labels(2).size(), 9u);
  EXPECT_EQ(gauged_labels(6).size(), 39u);
  const auto l = gauged_labels(3);
  ASSERT_EQ(l.size(), 15u);
  EXPECT_EQ(l[0], GL::pair(0, 1));
  EXPECT_EQ(l[1], GL::pair(0, 2));
  EXPECT_EQ(l[2], GL::pair(1, 2));
  EXPECT_EQ(l[3], GL::diag(0, +1));
  EXPECT_EQ(l[4], GL::diag(0, -1));
  EXPECT_EQ(l[9], GL::hat(0, +1));
  EXPECT_EQ(l[14], GL::hat(2, -1));
  for (std::size_t x = 0; x < 3; ++x) {
    int diag = 0, hat = 0;
    for (const auto& g : l) {
      diag += g.kind == GL::Kind::Diag && g.x == x;
      hat += g.kind == GL::Kind::Hat && g.x == x;
    }
    EXPECT_EQ(diag, 2);
    EXPECT_EQ(hat, 2);
  }
}

TEST(GaugedLabels, IndexOfInvertsEnumeration) {
  const Gauging g(adj5());
  for (std::size_t i = 0; i < g.labels().size(); ++i) EXPECT_EQ(g.index_of(g.labels()[i]), i);
}

TEST(GaugedLabels, Display) {
  const std::vector<std::string> base = {"1", "t"};
  EXPECT_EQ(display(GL::pair(1, 0), base), "[1,t]");
  EXPECT_EQ(display(GL::diag(1, +1), base), "[t,t]+");
  EXPECT_EQ(display(GL::hat(0, -1), base), "^1-");
}

TEST(SqrtTwists, PrincipalConvention) {
  ModularData md = oracle::ising();
  md.theta = {1.0, -1.0, std::polar(1.0, 4.0 * oracle::kPi / 5.0)};
  const auto r = sqrt_twists(md);
  EXPECT_LT(std::abs(r[0] - 1.0), 1e-15);
  EXPECT_LT(std::abs(r[1] - cd(0, 1)), 1e-15);
  EXPECT_LT(std::abs(r[2] - std::polar(1.0, 2.0 * oracle::kPi / 5.0)), 1e-15);
}

TEST(SqrtTwists, SquaresToTheta) {
  for (const auto& md : test_categories()) {
    const auto r = sqrt_twists(md);
    for (std::size_t x = 0; x < md.rank(); ++x) EXPECT_LT(std::abs(r[x] * r[x] - md.theta[x]), 1e-10);
    EXPECT_EQ(r[md.unit], cd(1.0));
  }
}

TEST(Gauging, RejectsBadSqrtChoice) {
  auto bad = sqrt_twists(oracle::fib());
  bad[0] = -1.0;
  EXPECT_THROW(Gauging(oracle::fib(), bad), Error);
  bad = sqrt_twists(oracle::fib());
  bad[1] *= cd(0, 1);
  try {
    Gauging g(oracle::fib(), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
}

TEST(ExtensionDims, FibPrimitives) {
  const Gauging g(oracle::fib());
  const ExtObject one_hat{true, kOne, 0}, tau_hat{true, kTau, 0};
  // (1 x 1) acting on M^ is M^
  for (std::size_t m : {kOne, kTau})
    for (std::size_t k : {kOne, kTau})
      EXPECT_EQ(g.extension_dim({false, kOne, kOne}, {true, m, 0}, {true, k, 0}), m == k ? 1 : 0);
  // 1^ 1^ = sum_Z Z x Z*
  for (std::size_t z : {kOne, kTau})
    for (std::size_t w : {kOne, kTau})
      EXPECT_EQ(g.extension_dim(one_hat, one_hat, {false, z, w}), z == w ? 1 : 0);
  // tau^ tau^ contains tau x tau with dim C(tau tau, tau tau) = 2
  EXPECT_EQ(g.extension_dim(tau_hat, tau_hat, {false, kTau, kTau}), 2);
  // grading
  EXPECT_EQ(g.extension_dim(one_hat, one_hat, one_hat), 0);
  EXPECT_EQ(g.extension_dim({false, kOne, kOne}, {false, kOne, kOne}, one_hat), 0);
}

TEST(Case1, UnitAndFibValues) {
  const Gauging g(oracle::fib());
  const GL unit = GL::diag(kOne, +1);
  EXPECT_EQ(g.mult_case1(kOne, kTau, unit, GL::pair(kOne, kTau)), 1);
  const Gauging g3(adj5());
  EXPECT_EQ(g3.mult_case1(0, 1, GL::diag(0, +1), GL::pair(1, 2)), 0);
  EXPECT_EQ(g3.mult_case1(0, 1, GL::diag(0, +1), GL::pair(0, 1)), 1);
  // Hom_D(1 x tau, 1^ tau^) = dim C(tau, tau) = 1. Dimension count agrees:
  // d(1^) d(tau^) = D phi = 2 phi + phi^2 = d[1,tau] + d[tau,tau]+-.
  EXPECT_EQ(g.mult_case1(kOne, kTau, GL::hat(kOne, +1), GL::hat(kTau, +1)), 1);
}

TEST(Case2, Values) {
  const Gauging g(oracle::fib());
  EXPECT_EQ(g.mult_case2(kTau, +1, kTau, +1, kTau, +1), 1);
  EXPECT_EQ(g.mult_case2(kTau, -1, kTau, +1, kTau, +1), 0);
  // find an N = 2 coefficient and check 1/2 N (N -+ 1)
  const Gauging h(kac_peterson({Series::A, 2, 3}));
  const auto& r = h.base_ring();
  bool found = false;
  for (std::size_t x = 0; x < r.rank() && !found; ++x)
    for (std::size_t y = 0; y < r.rank() && !found; ++y)
      for (std::size_t z = 0; z < r.rank() && !found; ++z)
        if (r(y, z, x) == 2) {
          found = true;
          EXPECT_EQ(h.mult_case2(x, -1, y, +1, z, +1), 1);
          EXPECT_EQ(h.mult_case2(x, +1, y, +1, z, +1), 3);
        }
  EXPECT_TRUE(found);
}

TEST(Case2, Symmetries) {
  const Gauging g(kac_peterson({Series::A, 2, 2}));
  const auto& dual = g.modular().dual;
  const std::size_t n = g.modular().rank();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (int ex : {1, -1})
          for (int ey : {1, -1})
            for (int ez : {1, -1}) {
              const int v = g.mult_case2(x, ex, y, ey, z, ez);
              EXPECT_EQ(v, g.mult_case2(x, ex, z, ez, y, ey));
              EXPECT_EQ(v, g.mult_case2(dual[x], ex, dual[y], ey, dual[z], ez));
            }
}

TEST(Case3, UnitReduction) {
  for (const auto& md : test_categories()) {
    const Gauging g(md);
    const std::size_t n = md.rank(), u = md.unit;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t z = 0; z < n; ++z)
        for (int ex : {1, -1})
          for (int ez : {1, -1}) {
            const int delta = x == z ? 1 : 0;
            EXPECT_EQ(g.mult_case3(x, ex, u, +1, z, ez), delta * (ex * ez + 1) / 2);
            EXPECT_EQ(g.mult_case3(x, ex, u, -1, z, ez), delta * (1 - ex * ez) / 2);
          }
  }
}

TEST(Case3, AgreesWithPMatrixRoute) {
  for (const auto& md : test_categories()) {
    const Gauging g(md);
    const std::size_t n = md.rank();
    EXPECT_LT(g.p_identity_residual(), 1e-8);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          EXPECT_LT(std::abs(g.case3_p_first_summand(x, y, z) - double(g.n_y2z(x, y, z))), 1e-8);
          for (int ex : {1, -1})
            for (int ey : {1, -1})
              for (int ez : {1, -1}) {
                const cd a = g.case3_value(x, ex, y, ey, z, ez);
                EXPECT_LT(std::abs(a - std::round(a.real())), 1e-6);
                EXPECT_EQ(g.mult_case3(x, ex, y, ey, z, ez), g.mult_case3_p(x, ex, y, ey, z, ez));
              }
        }
  }
}

TEST(Case3, FibTauTauHat) {
  const Gauging g(oracle::fib());
  const int v = g.mult_case3(kTau, +1, kTau, +1, kTau, +1);
  EXPECT_GE(v, 0);
  EXPECT_LE(v, 2);
  EXPECT_EQ(v, g.mult_case3_p(kTau, +1, kTau, +1, kTau, +1));
}

TEST(Case3, PrincipalHalfTwistIsAHatRelabeling) {
  for (const auto& md : test_categories()) {
    const Gauging g(md);
    GaugeOptions opt;
    opt.principal_half_twist = true;
    const Gauging p(md, {}, opt);
    EXPECT_LT(p.p_identity_residual(), 1e-8);
    const std::size_t n = md.rank();
    std::vector<int> ratio(n);
    for (std::size_t x = 0; x < n; ++x) {
      const cd r = p.half_twist()[x] / g.half_twist()[x];
      ASSERT_LT(std::abs(std::abs(r.real()) - 1.0), 1e-12);
      ratio[x] = r.real() > 0 ? 1 : -1;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          for (int ex : {1, -1})
            for (int ey : {1, -1})
              for (int ez : {1, -1})
                EXPECT_EQ(p.mult_case3_p(x, ex, y, ey, z, ez),
                          g.mult_case3(x, ex * ratio[x], y, ey, z, ez * ratio[z]));
  }
}

TEST(GaugedFusion, FibRing) {
  const Gauging g(oracle::fib());
  const FusionRing fr = g.fusion();
  ASSERT_EQ(fr.rank(), 9u);
  const std::size_t u = g.index_of(GL::diag(kOne, +1));
  EXPECT_EQ(fr.unit, u);
  for (std::size_t y = 0; y < 9; ++y)
    for (std::size_t z = 0; z < 9; ++z) EXPECT_EQ(fr(u, y, z), y == z ? 1 : 0);
  const std::size_t m = g.index_of(GL::diag(kOne, -1));
  for (std::size_t z = 0; z < 9; ++z) EXPECT_EQ(fr(m, m, z), z == u ? 1 : 0);

  const auto dims = fp_dims(fr);
  const auto expect = g.expected_dims();
  const double d = derived_scalars(oracle::fib()).global_dim;
  double sum = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_NEAR(dims[i], expect[i], 1e-9);
    sum += dims[i] * dims[i];
  }
  EXPECT_NEAR(sum, 4 * d * d, 1e-9);
}

TEST(GaugedFusion, EveryGaugedRingPassesTheSuite) {
  std::vector<ModularData> cats = test_categories();
  for (int k : {1, 3, 4}) cats.push_back(sl2(k));
  cats.push_back(kac_peterson({Series::A, 2, 2}));
  cats.push_back(deligne_product(reverse(oracle::fib()), reverse(oracle::fib())));
  for (const auto& md : cats) {
    const Gauging g(md);
    const FusionRing fr = g.fusion();
    const auto report = validate_gauging(g, fr);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << md.rank() << " " << c.name << " " << c.detail;
  }
}

TEST(GaugedFusion, SqrtFlipIsAHatRelabeling) {
  for (const auto& md : {oracle::fib(), oracle::ising(), kac_peterson({Series::A, 2, 2})}) {
    const Gauging base(md);
    const FusionRing ref = base.fusion();
    for (std::size_t x = 0; x < md.rank(); ++x) {
      if (x == md.unit) continue;
      auto sq = sqrt_twists(md);
      sq[x] = -sq[x];
      const Gauging flipped(md, sq);
      const FusionRing fr = flipped.fusion();
      std::vector<std::size_t> perm(fr.rank());
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[base.index_of(GL::hat(x, +1))], perm[base.index_of(GL::hat(x, -1))]);
      FusionRing moved = relabel(ref, perm);
      EXPECT_EQ(moved.n, fr.n) << "flip at " << md.labels[x];
      EXPECT_EQ(moved.dual, fr.dual);
      EXPECT_EQ(moved.unit, fr.unit);
    }
  }
}

TEST(FusionGraph, UnitAndHatGraphs) {
  const Gauging g(oracle::fib());
  const FusionRing fr = g.fusion();
  const std::string unit_dot = fusion_graph(fr, GL::diag(kOne, +1), g.labels());
  for (const auto& l : fr.labels) {
    const std::string edge = "\"" + l + "\" -> \"" + l + "\" [label=1];";
    EXPECT_NE(unit_dot.find(edge), std::string::npos) << l;
  }
  EXPECT_EQ(std::count(unit_dot.begin(), unit_dot.end(), '>'), 9);

  const std::size_t hat = g.index_of(GL::hat(kOne, +1));
  std::vector<bool> touched(fr.rank(), false);
  for (std::size_t y = 0; y < fr.rank(); ++y)
    for (std::size_t z = 0; z < fr.rank(); ++z)
      if (fr(hat, y, z) > 0) touched[y] = touched[z] = true;
  for (std::size_t i = 0; i < fr.rank(); ++i) EXPECT_TRUE(touched[i]) << fr.labels[i];
  EXPECT_TRUE(fusion_graph_connected(fr, hat));
}

TEST(FusionGraph, HatUnitConnectedWithoutInvertibles) {
  for (const auto& md : {adj5(), kac_peterson({Series::G2, 2, 3}),
                         deligne_product(reverse(oracle::fib()), reverse(oracle::fib()))}) {
    const Gauging g(md);
    EXPECT_TRUE(fusion_graph_connected(g.fusion(), g.index_of(GL::hat(md.unit, +1))));
  }
}

TEST(FusionGraph, InvertiblesSplitTheHatUnitGraph) {
  // In Ising, psi x psi^ gives a grading the ^1+ graph cannot cross.
  const Gauging g(oracle::ising());
  EXPECT_FALSE(fusion_graph_connected(g.fusion(), g.index_of(GL::hat(0, +1))));
}
