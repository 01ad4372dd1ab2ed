#pragma once

#include <cstddef>
#include <vector>

#include "stpcs/matrix.hpp"

namespace stpcs {

/// A matrix with entries in {0,1}.
class BooleanMatrix {
 public:
  explicit BooleanMatrix(DenseMatrix m);

  const DenseMatrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  bool operator()(std::size_t i, std::size_t j) const { return m_(i, j) != 0.0; }

  std::vector<std::size_t> column_degrees() const;
  std::vector<std::size_t> row_degrees() const;

  bool operator==(const BooleanMatrix&) const = default;

 private:
  DenseMatrix m_;
};

/// A matrix with entries in {-1,+1}.
class SignMatrix {
 public:
  explicit SignMatrix(DenseMatrix m);

  const DenseMatrix& matrix() const noexcept { return m_; }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  int operator()(std::size_t i, std::size_t j) const { return m_(i, j) > 0.0 ? 1 : -1; }

  bool operator==(const SignMatrix&) const = default;

 private:
  DenseMatrix m_;
};

/// (points, blocks, replication, block size, pair count).
struct BibdParams {
  std::size_t alpha = 0;
  std::size_t b = 0;
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;

  bool operator==(const BibdParams&) const = default;
};

/// signs·diag(d) with d strictly positive and pairwise distinct.
class EmbeddingMatrix {
 public:
  const SignMatrix& signs() const noexcept { return signs_; }
  const std::vector<double>& diag() const noexcept { return diag_; }
  const DenseMatrix& value() const noexcept { return value_; }
  std::size_t rows() const noexcept { return value_.rows(); }
  std::size_t cols() const noexcept { return value_.cols(); }

 private:
  friend EmbeddingMatrix make_embedding(SignMatrix signs, std::vector<double> diag);
  EmbeddingMatrix(SignMatrix signs, std::vector<double> diag, DenseMatrix value);

  SignMatrix signs_;
  std::vector<double> diag_;
  DenseMatrix value_;
};

/// Throws BadDiag when diag has the wrong length, a nonpositive entry or a
/// repeated entry.
EmbeddingMatrix make_embedding(SignMatrix signs, std::vector<double> diag);

/// α×α incidence matrix with zeros on the anti-diagonal and ones elsewhere.
BooleanMatrix incidence_matrix(std::size_t alpha);

/// Throws NotBibd naming the first violated condition.
BibdParams bibd_check(const BooleanMatrix& h);

/// Greedy downward shifting of each 1 until every pairwise column inner
/// product is at most 1. The output has α²-3α+3 rows; NotExpandable is thrown
/// when a 1 cannot be placed inside that budget.
BooleanMatrix vertical_expand(const BooleanMatrix& h);

/// Stacked blocks [0, J_{α-i}, I_{α-i}], i = 1..α-1. Shape α(α-1)/2 × α.
BooleanMatrix vertical_expand_star(std::size_t alpha);

/// The i-th 1 of each column of hv (top to bottom) is replaced by row i of b,
/// every 0 by a zero row. Throws DegreeMismatch unless each column degree of
/// hv equals b.rows().
DenseMatrix horizontal_expand(const BooleanMatrix& hv, const DenseMatrix& b);
DenseMatrix horizontal_expand(const BooleanMatrix& hv, const EmbeddingMatrix& b);
DenseMatrix horizontal_expand(const BooleanMatrix& hv, const SignMatrix& b);

/// O_2^{⊗p}⊗J_q for t = 2^p·q with q odd.
SignMatrix ocm(std::size_t t);

/// t = 2^p-1: ocm(2^p) minus its first row. t = 5: a fixed 5×5 matrix.
/// Even t: ocm(t). Any other t throws Unsupported.
SignMatrix aocm(std::size_t t);

enum class SignClass { OCM, AOCM, Neither };

const char* to_string(SignClass c);

/// OCM when all pairwise column inner products vanish, AOCM when all are ±1.
/// A single column has no pairs and is classified by the parity of its length.
/// Throws BadShape unless a.rows() == alpha_minus_1.
SignClass sign_matrix_check(const SignMatrix& a, std::size_t alpha_minus_1);

/// Representative of a under row/column negation and column permutation,
/// with rows kept in place: column `pivot` is made all +1 by row negations,
/// every column is then negated so its first entry is +1, and columns are
/// sorted lexicographically.
SignMatrix canonicalize(const SignMatrix& a, std::size_t pivot = 0);

/// Whether b arises from a by row/column negations and permutations.
/// Exhaustive over row orders; throws Unsupported beyond 8 rows.
bool equivalent_under_sign_group(const SignMatrix& a, const SignMatrix& b);

/// All sign vectors x (as ±1 columns) such that [a, x] keeps the class of a
/// (pairwise inner products 0 for OCM, ±1 for AOCM). Exhaustive over 2^rows
/// candidates; throws Unsupported beyond 24 rows or when target is Neither.
std::vector<std::vector<int>> sign_matrix_extensions(const SignMatrix& a, SignClass target);

}  // namespace stpcs
