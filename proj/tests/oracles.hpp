#pragma once
// Independent reference data for the tests. Nothing here calls into the
// library's numerics: closed forms are written out directly and contractions
// use plain loops over std::complex.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "permgauge/modular.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;
inline constexpr double kPi = std::numbers::pi;
inline const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

// s_{jl} = sqrt(2/(k+2)) sin(pi (j+1)(l+1)/(k+2))
inline Mat sl2_s(int k) {
  Mat s(k + 1, std::vector<cd>(k + 1));
  for (int j = 0; j <= k; ++j)
    for (int l = 0; l <= k; ++l)
      s[j][l] = std::sqrt(2.0 / (k + 2)) * std::sin(kPi * (j + 1) * (l + 1) / (k + 2));
  return s;
}

// theta_j = exp(2 pi i j(j+2) / (4(k+2)))
inline std::vector<cd> sl2_theta(int k) {
  std::vector<cd> t;
  for (int j = 0; j <= k; ++j) t.push_back(std::polar(1.0, 2.0 * kPi * j * (j + 2) / (4.0 * (k + 2))));
  return t;
}

inline permgauge::ModularData from_closed_form(const Mat& s, const std::vector<cd>& theta,
                                               std::vector<std::string> labels,
                                               std::vector<std::size_t> dual) {
  permgauge::ModularData md;
  md.labels = std::move(labels);
  md.unit = 0;
  md.s = permgauge::ComplexMatrix(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) md.s(i, j) = s[i][j];
  md.theta = theta;
  md.dual = std::move(dual);
  return md;
}

// Fibonacci: S = (1/sqrt(2+phi)) [[1, phi], [phi, -1]], theta_tau = e^{4 pi i/5}.
inline permgauge::ModularData fib() {
  const double n = 1.0 / std::sqrt(2.0 + kPhi);
  return from_closed_form({{n, n * kPhi}, {n * kPhi, -n}},
                          {1.0, std::polar(1.0, 4.0 * kPi / 5.0)}, {"(0)", "(2)"}, {0, 1});
}

// Ising = (A1,2).
inline permgauge::ModularData ising() {
  const double r = std::sqrt(2.0);
  return from_closed_form({{0.5, r / 2, 0.5}, {r / 2, 0.0, -r / 2}, {0.5, -r / 2, 0.5}},
                          {1.0, std::polar(1.0, 2.0 * kPi * 3.0 / 16.0), -1.0},
                          {"(0)", "(1)", "(2)"}, {0, 1, 2});
}

// N[x][y][z] = N^z_{xy} by the Verlinde sum, naive loops, rounded.
inline std::vector<std::vector<std::vector<int>>> verlinde(const Mat& s,
                                                          const std::vector<std::size_t>& dual) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::vector<int>>> out(n, std::vector<std::vector<int>>(n, std::vector<int>(n)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        cd acc = 0.0;
        for (std::size_t r = 0; r < n; ++r) acc += s[x][r] * s[y][r] * s[dual[z]][r] / s[0][r];
        out[x][y][z] = static_cast<int>(std::lround(acc.real()));
      }
  return out;
}

// (A1,k) fusion by the truncated Clebsch-Gordan rule.
inline int sl2_fusion(int k, int a, int b, int c) {
  if (c < std::abs(a - b) || c > std::min(a + b, 2 * k - a - b)) return 0;
  return (a + b + c) % 2 == 0 ? 1 : 0;
}

}  // namespace oracle
