#pragma once
// Complex double-precision inner loops shared by the modular-data and gauging
// code. Every kernel has a scalar reference implementation; an AVX2+FMA variant
// is compiled into a separate translation unit when the toolchain supports it
// and selected at runtime when the CPU does.
//
// Setting PERMGAUGE_KERNELS=scalar in the environment forces the scalar path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace permgauge::kernels {

using cd = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend) noexcept;

// True if the backend was compiled in and the running CPU supports it.
bool available(Backend backend) noexcept;

// Backend used by the dispatching entry points below. Fixed on first call.
Backend active() noexcept;

// sum_i a[i] * b[i] (no conjugation). a and b must have equal length.
cd dotu(std::span<const cd> a, std::span<const cd> b);

// out[i] = a[i] * b[i]
void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out);

// Row-major C (m x n) = A (m x k) * B (k x n). C must not alias A or B.
void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c);

namespace scalar {
cd dotu(std::span<const cd> a, std::span<const cd> b);
void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out);
void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c);
}  // namespace scalar

#if defined(PERMGAUGE_WITH_AVX2)
namespace avx2 {
cd dotu(std::span<const cd> a, std::span<const cd> b);
void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out);
void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c);
}  // namespace avx2
#endif

}  // namespace permgauge::kernels
