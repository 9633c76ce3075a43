#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace adtime {

using Real = double;

/// Dense row-major matrix with value semantics. Ordering/equality compare
/// dimensions first, then the flattened contents lexicographically.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return data_[i * cols_ + j];
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return data_[i * cols_ + j];
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::span<const T> flat() const { return data_; }
  std::span<T> flat() { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;
  friend auto operator<=>(const Grid& a, const Grid& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::out_of_range("grid index out of range");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RealGrid = Grid<Real>;
using PriceMatrix = Grid<Real>;
using TimeMatrix = Grid<Real>;
using AssignmentMatrix = Grid<std::uint8_t>;

}  // namespace adtime
