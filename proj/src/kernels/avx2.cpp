// Compiled with -mavx2 -mfma. Only reached through kernels::active() after a
// CPUID check, or directly from the equivalence tests when available().
#include <immintrin.h>

#include <cassert>

#include "permgauge/kernels.hpp"

namespace permgauge::kernels::avx2 {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const cd* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cd* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// Lane-wise complex product of two packed pairs.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);           // [br0, br0, br1, br1]
  const __m256d b_im = _mm256_permute_pd(b, 0xF);      // [bi0, bi0, bi1, bi1]
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);    // [ai0, ar0, ai1, ar1]
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

}  // namespace

cd dotu(std::span<const cd> a, std::span<const cd> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  const std::size_t paired = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < paired; i += 2) {
    acc = _mm256_add_pd(acc, cmul(load2(&a[i]), load2(&b[i])));
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  alignas(16) double sum[2];
  _mm_store_pd(sum, _mm_add_pd(lo, hi));
  double re = sum[0];
  double im = sum[1];
  for (std::size_t i = paired; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::size_t n = a.size();
  const std::size_t paired = n & ~std::size_t{1};
  for (std::size_t i = 0; i < paired; i += 2) {
    store2(&out[i], cmul(load2(&a[i]), load2(&b[i])));
  }
  for (std::size_t i = paired; i < n; ++i) {
    out[i] = {a[i].real() * b[i].real() - a[i].imag() * b[i].imag(),
              a[i].real() * b[i].imag() + a[i].imag() * b[i].real()};
  }
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c) {
  const std::size_t paired = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    cd* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = cd{};
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const __m256d ar_v = _mm256_set1_pd(ar);
      const __m256d ai_v = _mm256_set1_pd(ai);
      const cd* brow = b + p * n;
      for (std::size_t j = 0; j < paired; j += 2) {
        const __m256d bv = load2(brow + j);
        const __m256d t = _mm256_mul_pd(ai_v, _mm256_permute_pd(bv, 0x5));
        const __m256d prod = _mm256_fmaddsub_pd(ar_v, bv, t);
        store2(crow + j, _mm256_add_pd(load2(crow + j), prod));
      }
      for (std::size_t j = paired; j < n; ++j) {
        crow[j] += cd{ar * brow[j].real() - ai * brow[j].imag(),
                      ar * brow[j].imag() + ai * brow[j].real()};
      }
    }
  }
}

}  // namespace permgauge::kernels::avx2
