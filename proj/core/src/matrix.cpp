#include "stpcs/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <string>

#include "stpcs/errors.hpp"

namespace stpcs {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " has a non-finite entry");
    }
  }
}

bool all_integers(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::nearbyint(v) == v; });
}

}  // namespace

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Side parse_side(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "left" || lower == "l") return Side::Left;
  if (lower == "right" || lower == "r") return Side::Right;
  throw Error(ErrorCode::InvalidArgument, "unknown side '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : DenseMatrix(rows, cols, std::vector<double>(rows * cols, 0.0)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::BadShape, "matrix shape must be at least 1x1");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::BadShape, "entry count " + std::to_string(entries_.size()) +
                                         " does not match " + std::to_string(rows_) + "x" +
                                         std::to_string(cols_));
  }
  require_finite(entries_, "matrix");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::BadShape, "matrix shape must be at least 1x1");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::BadShape, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::ones(std::size_t rows, std::size_t cols) {
  return DenseMatrix(rows, cols, std::vector<double>(rows * cols, 1.0));
}

DenseMatrix DenseMatrix::column(std::span<const double> values) {
  return DenseMatrix(values.size(), 1, std::vector<double>(values.begin(), values.end()));
}

std::span<const double> DenseMatrix::row(std::size_t i) const {
  return std::span<const double>(entries_).subspan(i * cols_, cols_);
}

std::vector<double> DenseMatrix::col(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseMatrix DenseMatrix::select_columns(std::span<const std::size_t> columns) const {
  if (columns.empty()) throw Error(ErrorCode::BadShape, "empty column selection");
  DenseMatrix out(rows_, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] >= cols_) throw Error(ErrorCode::BadShape, "column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, c) = (*this)(i, columns[c]);
  }
  return out;
}

bool DenseMatrix::is_integer_valued() const { return all_integers(entries_); }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::BadShape, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                         std::to_string(b.rows()) + " differ");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

namespace {

template <typename Op>
DenseMatrix elementwise(const DenseMatrix& a, const DenseMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::BadShape, "elementwise operation on different shapes");
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.data()[i], b.data()[i]);
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

}  // namespace

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, std::plus<>());
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  return elementwise(a, b, std::minus<>());
}

DenseMatrix operator*(double scale, const DenseMatrix& a) {
  std::vector<double> out(a.data().begin(), a.data().end());
  for (double& v : out) v *= scale;
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::BadShape, "comparing matrices of different shapes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

// --------------------------------------------------------------------- Signal

Signal::Signal(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::BadShape, "signal dimension must be at least 1");
  require_finite(entries_, "signal");
}

Signal::Signal(std::initializer_list<double> entries)
    : Signal(std::vector<double>(entries)) {}

Signal Signal::zeros(std::size_t dim) { return Signal(std::vector<double>(dim, 0.0)); }

Signal Signal::ones(std::size_t dim) { return Signal(std::vector<double>(dim, 1.0)); }

Signal Signal::unit(std::size_t dim, std::size_t index) {
  if (index < 1 || index > dim) {
    throw Error(ErrorCode::InvalidArgument, "unit vector index must lie in [1, dim]");
  }
  std::vector<double> v(dim, 0.0);
  v[index - 1] = 1.0;
  return Signal(std::move(v));
}

double Signal::dot(const Signal& other) const {
  if (dim() != other.dim()) throw Error(ErrorCode::BadShape, "dot product of different dims");
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += entries_[i] * other.entries_[i];
  return acc;
}

bool Signal::is_integer_valued() const { return all_integers(entries_); }

Signal operator*(const DenseMatrix& a, const Signal& x) {
  if (a.cols() != x.dim()) {
    throw Error(ErrorCode::BadShape, "matrix has " + std::to_string(a.cols()) +
                                         " columns but signal has dim " +
                                         std::to_string(x.dim()));
  }
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return Signal(std::move(out));
}

Signal operator+(const Signal& x, const Signal& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::BadShape, "adding signals of different dims");
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
  return Signal(std::move(out));
}

Signal operator-(const Signal& x, const Signal& y) { return x + (-1.0) * y; }

Signal operator*(double scale, const Signal& x) {
  std::vector<double> out(x.vector());
  for (double& v : out) v *= scale;
  return Signal(std::move(out));
}

double max_abs_diff(const Signal& x, const Signal& y) {
  if (x.dim() != y.dim()) throw Error(ErrorCode::BadShape, "comparing signals of different dims");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace stpcs
