#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace permgauge {

using cd = std::complex<double>;

// Dense row-major complex matrix. Products go through the dispatched kernels.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cd> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<cd> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cd> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  cd* data() noexcept { return data_.data(); }
  const cd* data() const noexcept { return data_.data(); }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;

  ComplexMatrix& operator*=(cd scalar);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cd> data_;
};

// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace permgauge
