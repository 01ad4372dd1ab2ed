#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stpcs/matrix.hpp"
#include "stpcs/metrics.hpp"

namespace stpcs {

/// At most per_block_k nonzeros either in the whole vector (Global) or in each
/// consecutive block of length block_len (Blockwise).
struct SparsitySpec {
  enum class Mode { Global, Blockwise };

  std::size_t block_len = 1;
  std::size_t per_block_k = 0;
  Mode mode = Mode::Blockwise;
};

/// Dimensions of compressing a p-dimensional signal with the atom of a matrix:
/// t = lcm(n₀, p) = s·n₀ = r·p. r == 1 means the signal needs no lifting.
struct CompressionPlan {
  DenseMatrix atom;
  Side side = Side::Left;
  std::size_t multiplicity = 1;
  std::size_t p = 0;
  std::size_t s = 1;
  std::size_t r = 1;
  std::size_t t = 0;
  std::size_t output_dim = 0;
};

CompressionPlan plan(const DenseMatrix& a, std::size_t p, Side side);
std::vector<CompressionPlan> plans_for(const DenseMatrix& a, std::span<const std::size_t> dims,
                                       Side side);

/// y = a ⋉ x (or the right product).
Signal compress(const DenseMatrix& a, const Signal& x, Side side);
std::vector<Signal> compress_varying(const DenseMatrix& a, std::span<const Signal> xs, Side side);

struct RecoveryOptions {
  enum class Solver { Exhaustive, Omp };

  /// Dimension p of the original signal when it was lifted before
  /// compression; defaults to a.cols()·s.
  std::optional<std::size_t> signal_dim;
  double residual_tol = 1e-8;
  std::uint64_t budget = kDefaultEnumerationBudget;
  Solver solver = Solver::Exhaustive;
};

/// Solves y = (a⊗I_s)x (Left) or y = (I_s⊗a)x (Right) for x with at most
/// spec.per_block_k nonzeros per block of a.cols() entries. Left systems are
/// conjugated by swap matrices into the block-diagonal Right form; the
/// sparsity then applies to the permuted unknown.
///
/// The exhaustive solver tries every support of size <= k in each block and
/// throws NoSolution when none leaves a residual below residual_tol, NotUnique
/// when two different solutions do. With signal_dim = p < a.cols()·s the
/// solution is unlifted by r = a.cols()·s/p, and NoSolution is thrown if it is
/// not a lift.
Signal recover(const DenseMatrix& a, std::size_t s, const Signal& y, const SparsitySpec& spec,
               Side side, const RecoveryOptions& options = {});

/// True iff spark of the atom of a exceeds 2k, which makes every blockwise
/// k-sparse solution unique for every lift.
bool uniqueness_guarantee(const DenseMatrix& a, std::size_t k, Side side = Side::Left,
                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace stpcs
