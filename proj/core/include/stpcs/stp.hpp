#pragma once

#include <cstddef>
#include <vector>

#include "stpcs/matrix.hpp"

namespace stpcs {

/// Kronecker product a⊗b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Swap matrix W_[m,n]: the mn×mn permutation with W_[m,n](x⊗y) = y⊗x for
/// x∈R^m, y∈R^n. Satisfies W_[m,p](A⊗B)W_[q,n] = B⊗A for A m×n, B p×q.
DenseMatrix swap_matrix(std::size_t m, std::size_t n);

/// Index form of W_[m,n]: (W_[m,n] v)[i] = v[perm[i]].
std::vector<std::size_t> swap_permutation(std::size_t m, std::size_t n);

/// Lifts x to x⊗J_factor (Left) or J_factor⊗x (Right).
Signal lift(const Signal& x, std::size_t factor, Side side);

/// Lifts a to a⊗I_factor (Left) or I_factor⊗a (Right).
DenseMatrix lift(const DenseMatrix& a, std::size_t factor, Side side);

/// Matrix-matrix semi-tensor product. With t = lcm(a.cols, b.rows) the Left
/// product is (A⊗I_{t/n})(B⊗I_{t/p}) and the Right one mirrors it with I on
/// the left of each factor. Equals AB when the inner dimensions agree.
DenseMatrix mm_stp(const DenseMatrix& a, const DenseMatrix& b, Side side);

/// Matrix-vector semi-tensor product over s = lcm(a.cols, x.dim):
/// (A⊗I_{s/n})(x⊗J_{s/r}) on the Left, (I_{s/n}⊗A)(J_{s/r}⊗x) on the Right.
Signal mv_stp(const DenseMatrix& a, const Signal& x, Side side);

/// Semi-tensor addition (or subtraction) after lifting both operands to
/// dimension lcm(x.dim, y.dim).
Signal sta(const Signal& x, const Signal& y, Side side, bool subtract = false);

}  // namespace stpcs
