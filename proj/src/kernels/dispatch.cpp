#include <cstdlib>
#include <string_view>

#include "permgauge/kernels.hpp"

namespace permgauge::kernels {
namespace {

struct Table {
  Backend backend;
  cd (*dotu)(std::span<const cd>, std::span<const cd>);
  void (*hadamard)(std::span<const cd>, std::span<const cd>, std::span<cd>);
  void (*gemm)(std::size_t, std::size_t, std::size_t, const cd*, const cd*, cd*);
};

bool cpu_has_avx2() noexcept {
#if defined(PERMGAUGE_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool forced_scalar() noexcept {
  const char* env = std::getenv("PERMGAUGE_KERNELS");
  return env != nullptr && std::string_view(env) == "scalar";
}

Table select() noexcept {
#if defined(PERMGAUGE_WITH_AVX2)
  if (!forced_scalar() && cpu_has_avx2()) {
    return {Backend::Avx2, &avx2::dotu, &avx2::hadamard, &avx2::gemm};
  }
#endif
  return {Backend::Scalar, &scalar::dotu, &scalar::hadamard, &scalar::gemm};
}

const Table& table() noexcept {
  static const Table t = select();
  return t;
}

}  // namespace

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return cpu_has_avx2();
  }
  return false;
}

Backend active() noexcept { return table().backend; }

cd dotu(std::span<const cd> a, std::span<const cd> b) {
  return table().dotu(a, b);
}

void hadamard(std::span<const cd> a, std::span<const cd> b, std::span<cd> out) {
  table().hadamard(a, b, out);
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const cd* a, const cd* b,
          cd* c) {
  table().gemm(m, k, n, a, b, c);
}

}  // namespace permgauge::kernels
