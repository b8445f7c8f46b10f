#ifndef RPAREA_MATRIX_H_
#define RPAREA_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace rparea {

// Dense row-major matrix of doubles. Rows are exposed as spans so that
// per-observation vectors can be passed around without copying.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Square boolean relation over observations.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n, bool fill = false)
      : n_(n), data_(n * n, fill ? 1 : 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool v) { data_[i * n_ + j] = v ? 1 : 0; }

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> data_;
};

}  // namespace rparea

#endif  // RPAREA_MATRIX_H_
