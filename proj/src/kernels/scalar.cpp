#include <cassert>

#include "permgauge/kernels.hpp"

namespace permgauge::kernels::scalar {

cd dotu(std::span<const cd> a, std::span<const cd> b) {
  assert(a.size() == b.size());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = {a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
              a[i].real() * b[i].imag() + a[i].imag() * b[i].real()};
  }
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cd{};
  for (std::size_t i = 0; i < m; ++i) {
    cd* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const cd* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += cd{ar * brow[j].real() - ai * brow[j].imag(),
                      ar * brow[j].imag() + ai * brow[j].real()};
      }
    }
  }
}

}  // namespace permgauge::kernels::scalar
