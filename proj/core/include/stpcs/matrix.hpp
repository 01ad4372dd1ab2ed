#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace stpcs {

/// Which mirror of the semi-tensor calculus to use: Left lifts by A⊗I and
/// x⊗J, Right lifts by I⊗A and J⊗x.
enum class Side { Left, Right };

std::string_view to_string(Side side);
/// Accepts "left"/"right" (case-insensitive); throws InvalidArgument otherwise.
Side parse_side(std::string_view text);

/// Real rows×cols matrix stored row-major. Shape is at least 1×1 and every
/// entry is finite; constructors enforce both.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix ones(std::size_t rows, std::size_t cols);
  static DenseMatrix column(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const double> data() const noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const;
  std::vector<double> col(std::size_t j) const;

  DenseMatrix transpose() const;
  /// Submatrix made of the listed columns, in the given order.
  DenseMatrix select_columns(std::span<const std::size_t> columns) const;
  bool is_integer_valued() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double scale, const DenseMatrix& a);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// A finite real vector of explicit dimension; one element of the union of
/// all R^n.
class Signal {
 public:
  explicit Signal(std::vector<double> entries);
  Signal(std::initializer_list<double> entries);

  static Signal zeros(std::size_t dim);
  /// The all-ones vector J_dim.
  static Signal ones(std::size_t dim);
  /// The unit vector δ_dim^index with a 1-based index.
  static Signal unit(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& vector() const noexcept { return entries_; }

  double dot(const Signal& other) const;
  bool is_integer_valued() const;

  bool operator==(const Signal&) const = default;

 private:
  std::vector<double> entries_;
};

Signal operator*(const DenseMatrix& a, const Signal& x);
Signal operator+(const Signal& x, const Signal& y);
Signal operator-(const Signal& x, const Signal& y);
Signal operator*(double scale, const Signal& x);

double max_abs_diff(const Signal& x, const Signal& y);

}  // namespace stpcs
