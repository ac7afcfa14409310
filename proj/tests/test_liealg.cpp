#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "permgauge/errors.hpp"
#include "permgauge/liealg.hpp"

using namespace permgauge;

namespace {

// Standard Cartan matrices, a_ij = <alpha_i, alpha_j^vee>, Bourbaki numbering.
std::vector<std::vector<int>> cartan(Series s, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  if (s == Series::G2) return {{2, -1}, {-3, 2}};
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  if (s == Series::B) c[n - 2][n - 1] = -2;
  if (s == Series::C) c[n - 1][n - 2] = -2;
  if (s == Series::D) {
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
  }
  return c;
}

std::vector<LieSpec> all_specs(int max_rank) {
  std::vector<LieSpec> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n, 1});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::B, n, 1});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::C, n, 1});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Series::D, n, 1});
  out.push_back({Series::G2, 2, 1});
  return out;
}

}  // namespace

TEST(LieAlg, A1Basics) {
  const RootData rd = build_root_data({Series::A, 1, 1});
  EXPECT_EQ(rd.cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(rd.dual_coxeter, 2);
  EXPECT_EQ(rd.dynkin_labels(rd.rho), (DynkinLabel{1}));
  EXPECT_EQ(weyl_group(rd).size(), 2u);
}

TEST(LieAlg, G2AndB2DualCoxeter) {
  EXPECT_EQ(build_root_data({Series::G2, 2, 1}).dual_coxeter, 4);
  const RootData b2 = build_root_data({Series::B, 2, 1});
  EXPECT_EQ(b2.dual_coxeter, 3);
  EXPECT_EQ(weyl_group(b2).size(), 8u);
}

TEST(LieAlg, CartanMatricesMatchTables) {
  for (const auto& spec : all_specs(6)) {
    const RootData rd = build_root_data(spec);
    EXPECT_EQ(rd.cartan_matrix(), cartan(spec.series, spec.rank)) << to_string(spec.series) << spec.rank;
  }
}

TEST(LieAlg, RootDataInvariants) {
  for (const auto& spec : all_specs(6)) {
    const RootData rd = build_root_data(spec);
    int sum = 1;
    for (int a : rd.comarks) sum += a;
    EXPECT_EQ(rd.dual_coxeter, sum);
    double longest = 0.0;
    for (const auto& a : rd.simple_roots) longest = std::max(longest, rd.inner(a, a));
    EXPECT_NEAR(longest, 2.0, 1e-12);
    EXPECT_NEAR(rd.inner(rd.highest_root, rd.highest_root), 2.0, 1e-12);
    for (std::size_t i = 0; i < rd.fundamental_weights.size(); ++i)
      for (std::size_t j = 0; j < rd.simple_roots.size(); ++j)
        EXPECT_NEAR(rd.inner(rd.fundamental_weights[i], rd.coroot(j)), i == j ? 1.0 : 0.0, 1e-12);
  }
}

TEST(LieAlg, WeylGroupOrdersMatchClosedForms) {
  const std::map<std::pair<Series, int>, std::size_t> known = {
      {{Series::A, 1}, 2},   {{Series::A, 3}, 24},   {{Series::B, 2}, 8},
      {{Series::C, 3}, 48},  {{Series::D, 4}, 192},  {{Series::G2, 2}, 12}};
  for (const auto& [key, order] : known) EXPECT_EQ(weyl_group_order(key.first, key.second), order);
  for (const auto& spec : all_specs(5)) {
    const auto w = weyl_group(build_root_data(spec));
    EXPECT_EQ(w.size(), weyl_group_order(spec.series, spec.rank))
        << to_string(spec.series) << spec.rank;
  }
}

TEST(LieAlg, WeylGroupOrdersRankSix) {
  for (const auto& spec : all_specs(6)) {
    if (spec.rank != 6) continue;
    EXPECT_EQ(weyl_group(build_root_data(spec)).size(), weyl_group_order(spec.series, spec.rank));
  }
}

TEST(LieAlg, G2SignsSumToZero) {
  const auto w = weyl_group(build_root_data({Series::G2, 2, 1}));
  int sum = 0;
  for (const auto& e : w) sum += e.sign;
  EXPECT_EQ(sum, 0);
}

TEST(LieAlg, WeylElementsPermuteRootsAndPreserveForm) {
  for (const auto& spec : all_specs(4)) {
    const RootData rd = build_root_data(spec);
    const auto group = weyl_group(rd);
    const auto roots = root_system(rd, group);
    auto key = [](const Vec& v) {
      std::vector<long long> k;
      for (double x : v) k.push_back(std::llround(x * 1e9));
      return k;
    };
    std::set<std::vector<long long>> root_keys;
    for (const auto& r : roots) root_keys.insert(key(r));
    for (const auto& w : group) {
      for (const auto& r : roots) EXPECT_TRUE(root_keys.count(key(w.apply(r))));
      for (const auto& a : rd.simple_roots)
        for (const auto& b : rd.simple_roots)
          EXPECT_NEAR(rd.inner(w.apply(a), w.apply(b)), rd.inner(a, b), 1e-9);
    }
  }
}

TEST(LieAlg, ClosureOverflow) {
  const RootData rd = build_root_data({Series::A, 3, 1});
  try {
    weyl_group(rd, 10);
    FAIL() << "expected ClosureOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClosureOverflow);
  }
}

TEST(LieAlg, LevelLabelCounts) {
  for (int k = 1; k <= 10; ++k) {
    const auto labels = level_labels(build_root_data({Series::A, 1, k}), k);
    ASSERT_EQ(labels.size(), static_cast<std::size_t>(k + 1));
    for (int j = 0; j <= k; ++j) EXPECT_EQ(labels[j], DynkinLabel{j});
  }
  EXPECT_EQ(level_labels(build_root_data({Series::G2, 2, 3}), 3).size(), 6u);
  EXPECT_EQ(level_labels(build_root_data({Series::B, 2, 4}), 4).size(), 15u);
}

TEST(LieAlg, LevelLabelsMatchBruteForce) {
  for (const auto& base : all_specs(3)) {
    for (int k = 1; k <= 3; ++k) {
      const RootData rd = build_root_data(base);
      std::vector<DynkinLabel> brute;
      // every label vector in [0,k]^rank with sum comark_i * a_i <= k
      DynkinLabel a(rd.rank, 0);
      while (true) {
        int level = 0;
        for (int i = 0; i < rd.rank; ++i) level += rd.comarks[i] * a[i];
        if (level <= k) brute.push_back(a);
        int i = rd.rank - 1;
        while (i >= 0 && a[i] == k) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
      }
      const auto got = level_labels(rd, k);
      EXPECT_EQ(got, brute) << to_string(base.series) << base.rank << " level " << k;
      ASSERT_FALSE(got.empty());
      EXPECT_EQ(got.front(), DynkinLabel(rd.rank, 0));
    }
  }
}

TEST(LieAlg, LevelLabelsClosedUnderDuality) {
  // lambda* = -w0(lambda); apply the longest element (the one with the
  // largest length, i.e. sending rho to -rho) and read off the labels.
  for (const auto& spec : all_specs(4)) {
    const RootData rd = build_root_data(spec);
    const auto group = weyl_group(rd);
    const WeylElement* w0 = nullptr;
    for (const auto& w : group) {
      const Vec r = w.apply(rd.rho);
      bool neg = true;
      for (std::size_t c = 0; c < r.size(); ++c) neg &= std::abs(r[c] + rd.rho[c]) < 1e-9;
      if (neg) w0 = &w;
    }
    ASSERT_NE(w0, nullptr);
    for (int k = 1; k <= 2; ++k) {
      const auto labels = level_labels(rd, k);
      std::set<DynkinLabel> set(labels.begin(), labels.end());
      for (const auto& l : labels) {
        Vec img = w0->apply(rd.weight(l));
        for (double& x : img) x = -x;
        EXPECT_TRUE(set.count(rd.dynkin_labels(img)));
      }
    }
  }
}

TEST(LieAlg, InvalidSpecs) {
  auto code = [](LieSpec s) {
    try {
      validate(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::CheckFailed;
  };
  EXPECT_EQ(code({Series::D, 2, 1}), ErrorCode::UnsupportedSeries);
  EXPECT_EQ(code({Series::G2, 3, 1}), ErrorCode::UnsupportedSeries);
  EXPECT_EQ(code({Series::A, 0, 1}), ErrorCode::UnsupportedSeries);
  EXPECT_EQ(code({Series::A, 1, 0}), ErrorCode::InvalidSpec);
  EXPECT_EQ(code({Series::A, 1, 1}), ErrorCode::CheckFailed);
}

TEST(LieAlg, FormatDynkin) {
  EXPECT_EQ(format_dynkin({0}), "(0)");
  EXPECT_EQ(format_dynkin({1, 0, 2}), "(1,0,2)");
}
