#include "stpcs/bibd.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <functional>
#include <set>
#include <span>
#include <string>

#include "stpcs/errors.hpp"
#include "stpcs/stp.hpp"

namespace stpcs {
namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

long column_dot(const SignMatrix& a, std::size_t i, std::size_t j) {
  long acc = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) acc += a(r, i) * a(r, j);
  return acc;
}

using Columns = std::vector<std::vector<int>>;

Columns columns_of(const SignMatrix& a) {
  Columns cols(a.cols(), std::vector<int>(a.rows()));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) cols[j][i] = a(i, j);
  return cols;
}

// Column multiset after fixing row order: pivot made all +1, leading entries +1.
Columns normal_form(const Columns& cols, std::size_t pivot, std::span<const std::size_t> order) {
  const std::size_t rows = order.size();
  Columns out(cols.size(), std::vector<int>(rows));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      const std::size_t r = order[i];
      out[j][i] = cols[j][r] * cols[pivot][r];
    }
    if (out[j][0] < 0)
      for (int& v : out[j]) v = -v;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SignMatrix from_columns(const Columns& cols) {
  const std::size_t rows = cols.front().size();
  DenseMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return SignMatrix(std::move(m));
}

}  // namespace

BooleanMatrix::BooleanMatrix(DenseMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != 0.0 && m_(i, j) != 1.0) {
        throw Error(ErrorCode::InvalidArgument, "entry " + pos(i, j) + " is not 0 or 1");
      }
}

std::vector<std::size_t> BooleanMatrix::column_degrees() const {
  std::vector<std::size_t> d(cols(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) d[j] += (*this)(i, j) ? 1 : 0;
  return d;
}

std::vector<std::size_t> BooleanMatrix::row_degrees() const {
  std::vector<std::size_t> d(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) d[i] += (*this)(i, j) ? 1 : 0;
  return d;
}

SignMatrix::SignMatrix(DenseMatrix m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != 1.0 && m_(i, j) != -1.0) {
        throw Error(ErrorCode::InvalidArgument, "entry " + pos(i, j) + " is not +1 or -1");
      }
}

EmbeddingMatrix::EmbeddingMatrix(SignMatrix signs, std::vector<double> diag, DenseMatrix value)
    : signs_(std::move(signs)), diag_(std::move(diag)), value_(std::move(value)) {}

EmbeddingMatrix make_embedding(SignMatrix signs, std::vector<double> diag) {
  if (diag.size() != signs.cols()) {
    throw Error(ErrorCode::BadDiag, "diagonal has " + std::to_string(diag.size()) +
                                        " entries for " + std::to_string(signs.cols()) + " columns");
  }
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!(diag[i] > 0.0)) throw Error(ErrorCode::BadDiag, "diagonal entry " + std::to_string(i) + " is not positive");
    for (std::size_t j = 0; j < i; ++j)
      if (diag[i] == diag[j]) {
        throw Error(ErrorCode::BadDiag, "diagonal entries " + std::to_string(j) + " and " +
                                            std::to_string(i) + " coincide");
      }
  }
  DenseMatrix value = signs.matrix();
  for (std::size_t i = 0; i < value.rows(); ++i)
    for (std::size_t j = 0; j < value.cols(); ++j) value(i, j) *= diag[j];
  return EmbeddingMatrix(std::move(signs), std::move(diag), std::move(value));
}

BooleanMatrix incidence_matrix(std::size_t alpha) {
  if (alpha < 3) throw Error(ErrorCode::InvalidArgument, "alpha must be at least 3");
  DenseMatrix h = DenseMatrix::ones(alpha, alpha);
  for (std::size_t i = 0; i < alpha; ++i) h(i, alpha - 1 - i) = 0.0;
  return BooleanMatrix(std::move(h));
}

BibdParams bibd_check(const BooleanMatrix& h) {
  const std::size_t v = h.rows();
  const std::size_t b = h.cols();
  const auto rdeg = h.row_degrees();
  const auto cdeg = h.column_degrees();
  for (std::size_t i = 1; i < v; ++i)
    if (rdeg[i] != rdeg[0]) {
      throw Error(ErrorCode::NotBibd, "row " + std::to_string(i) + " has degree " +
                                          std::to_string(rdeg[i]) + ", row 0 has " +
                                          std::to_string(rdeg[0]));
    }
  for (std::size_t j = 1; j < b; ++j)
    if (cdeg[j] != cdeg[0]) {
      throw Error(ErrorCode::NotBibd, "column " + std::to_string(j) + " has degree " +
                                          std::to_string(cdeg[j]) + ", column 0 has " +
                                          std::to_string(cdeg[0]));
    }
  const std::size_t k = cdeg[0];
  if (k < 2) throw Error(ErrorCode::NotBibd, "block size " + std::to_string(k) + " is below 2");
  if (k >= v) {
    throw Error(ErrorCode::NotBibd, "block size " + std::to_string(k) + " is not below the " +
                                        std::to_string(v) + " points");
  }
  std::size_t lambda = 0;
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = p + 1; q < v; ++q) {
      std::size_t together = 0;
      for (std::size_t j = 0; j < b; ++j) together += (h(p, j) && h(q, j)) ? 1 : 0;
      if (p == 0 && q == 1) {
        lambda = together;
      } else if (together != lambda) {
        throw Error(ErrorCode::NotBibd, "points " + std::to_string(p) + " and " + std::to_string(q) +
                                            " share " + std::to_string(together) + " blocks, expected " +
                                            std::to_string(lambda));
      }
    }
  return {v, b, rdeg[0], k, lambda};
}

BooleanMatrix vertical_expand(const BooleanMatrix& h) {
  const std::size_t alpha = h.cols();
  if (alpha < 3) throw Error(ErrorCode::NotExpandable, "need at least 3 columns");
  const std::size_t budget = alpha * alpha - 3 * alpha + 3;
  std::vector<std::set<std::size_t>> placed_cols;
  for (std::size_t j = 0; j < alpha; ++j) {
    std::set<std::size_t> placed;
    std::size_t next = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (!h(i, j)) continue;
      std::size_t row = std::max(i, next);
      for (;; ++row) {
        if (row >= budget) {
          throw Error(ErrorCode::NotExpandable, "column " + std::to_string(j) +
                                                    " does not fit in " + std::to_string(budget) + " rows");
        }
        bool fits = true;
        for (const auto& prev : placed_cols) {
          std::size_t overlap = prev.count(row);
          for (std::size_t r : placed) overlap += prev.count(r);
          if (overlap > 1) {
            fits = false;
            break;
          }
        }
        if (fits) break;
      }
      placed.insert(row);
      next = row + 1;
    }
    placed_cols.push_back(std::move(placed));
  }
  DenseMatrix out(budget, alpha);
  for (std::size_t j = 0; j < alpha; ++j)
    for (std::size_t r : placed_cols[j]) out(r, j) = 1.0;
  return BooleanMatrix(std::move(out));
}

BooleanMatrix vertical_expand_star(std::size_t alpha) {
  if (alpha < 3) throw Error(ErrorCode::InvalidArgument, "alpha must be at least 3");
  DenseMatrix out(alpha * (alpha - 1) / 2, alpha);
  std::size_t row = 0;
  for (std::size_t i = 0; i + 1 < alpha; ++i)
    for (std::size_t j = i + 1; j < alpha; ++j, ++row) {
      out(row, i) = 1.0;
      out(row, j) = 1.0;
    }
  return BooleanMatrix(std::move(out));
}

DenseMatrix horizontal_expand(const BooleanMatrix& hv, const DenseMatrix& b) {
  const auto degrees = hv.column_degrees();
  for (std::size_t j = 0; j < degrees.size(); ++j)
    if (degrees[j] != b.rows()) {
      throw Error(ErrorCode::DegreeMismatch, "column " + std::to_string(j) + " has degree " +
                                                 std::to_string(degrees[j]) + ", embedding has " +
                                                 std::to_string(b.rows()) + " rows");
    }
  const std::size_t w = b.cols();
  DenseMatrix out(hv.rows(), hv.cols() * w);
  for (std::size_t j = 0; j < hv.cols(); ++j) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < hv.rows(); ++i) {
      if (!hv(i, j)) continue;
      for (std::size_t c = 0; c < w; ++c) out(i, j * w + c) = b(seen, c);
      ++seen;
    }
  }
  return out;
}

DenseMatrix horizontal_expand(const BooleanMatrix& hv, const EmbeddingMatrix& b) {
  return horizontal_expand(hv, b.value());
}

DenseMatrix horizontal_expand(const BooleanMatrix& hv, const SignMatrix& b) {
  return horizontal_expand(hv, b.matrix());
}

SignMatrix ocm(std::size_t t) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  std::size_t q = t;
  std::size_t p = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++p;
  }
  const DenseMatrix o2{{1, 1}, {1, -1}};
  DenseMatrix acc = DenseMatrix::identity(1);
  for (std::size_t i = 0; i < p; ++i) acc = kron(acc, o2);
  return SignMatrix(kron(acc, DenseMatrix::ones(q, 1)));
}

SignMatrix aocm(std::size_t t) {
  if (t == 0) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  if (t % 2 == 0) return ocm(t);
  if (t == 5) {
    return SignMatrix(DenseMatrix{{1, 1, 1, 1, 1},
                                  {1, 1, 1, -1, -1},
                                  {1, 1, -1, 1, -1},
                                  {1, -1, -1, -1, 1},
                                  {1, -1, 1, 1, -1}});
  }
  const std::size_t n = t + 1;
  if (t >= 3 && (n & (n - 1)) == 0) {
    const DenseMatrix full = ocm(n).matrix();
    DenseMatrix out(t, n);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = full(i + 1, j);
    return SignMatrix(std::move(out));
  }
  throw Error(ErrorCode::Unsupported, "no construction known for odd t = " + std::to_string(t));
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::OCM:
      return "OCM";
    case SignClass::AOCM:
      return "AOCM";
    case SignClass::Neither:
      break;
  }
  return "Neither";
}

SignClass sign_matrix_check(const SignMatrix& a, std::size_t alpha_minus_1) {
  if (a.rows() != alpha_minus_1) {
    throw Error(ErrorCode::BadShape, "sign matrix has " + std::to_string(a.rows()) +
                                         " rows, expected " + std::to_string(alpha_minus_1));
  }
  if (a.cols() == 1) return a.rows() % 2 == 0 ? SignClass::OCM : SignClass::AOCM;
  bool orthogonal = true;
  bool almost = true;
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      const long d = column_dot(a, i, j);
      orthogonal = orthogonal && d == 0;
      almost = almost && (d == 1 || d == -1);
    }
  if (orthogonal) return SignClass::OCM;
  if (almost) return SignClass::AOCM;
  return SignClass::Neither;
}

SignMatrix canonicalize(const SignMatrix& a, std::size_t pivot) {
  if (pivot >= a.cols()) throw Error(ErrorCode::InvalidArgument, "pivot column out of range");
  std::vector<std::size_t> order(a.rows());
  std::iota(order.begin(), order.end(), 0);
  return from_columns(normal_form(columns_of(a), pivot, order));
}

bool equivalent_under_sign_group(const SignMatrix& a, const SignMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.rows() > 8) throw Error(ErrorCode::Unsupported, "row-order search is limited to 8 rows");
  std::vector<std::size_t> identity(a.rows());
  std::iota(identity.begin(), identity.end(), 0);
  const Columns target = normal_form(columns_of(a), 0, identity);
  const Columns cols = columns_of(b);
  for (std::size_t pivot = 0; pivot < b.cols(); ++pivot) {
    std::vector<std::size_t> order = identity;
    do {
      if (normal_form(cols, pivot, order) == target) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return false;
}

std::vector<std::vector<int>> sign_matrix_extensions(const SignMatrix& a, SignClass target) {
  if (target == SignClass::Neither) throw Error(ErrorCode::Unsupported, "no extension rule for Neither");
  const std::size_t t = a.rows();
  if (t > 24) throw Error(ErrorCode::Unsupported, "exhaustive search is limited to 24 rows");
  const Columns cols = columns_of(a);
  std::vector<std::vector<int>> found;
  std::vector<int> x(t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    for (std::size_t i = 0; i < t; ++i) x[i] = (mask >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (const auto& c : cols) {
      long d = 0;
      for (std::size_t i = 0; i < t; ++i) d += c[i] * x[i];
      ok = target == SignClass::OCM ? d == 0 : (d == 1 || d == -1);
      if (!ok) break;
    }
    if (ok) found.push_back(x);
  }
  return found;
}

}  // namespace stpcs
