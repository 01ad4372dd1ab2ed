#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stpcs/matrix.hpp"

namespace stpcs {

/// δ_n^j with gcd(j, n) = 1 and j < n, or the scalar 1 when n = 1.
struct BasisElement {
  std::size_t n;
  std::size_t j;

  Signal value() const;
  bool operator==(const BasisElement&) const = default;
};

/// n = s²·q with s maximal (so q is squarefree).
struct SquareDecomposition {
  std::size_t s;
  std::size_t q;
};

SquareDecomposition square_decomposition(std::size_t n);

/// True iff some s > 1 has s² | n.
bool has_multifold_divisor(std::size_t n);

/// All δ_n^j with 1 <= j < n and gcd(j, n) = 1, ascending in j; [1] for n = 1.
std::vector<BasisElement> generating_layer(std::size_t n);

/// The independent part of generating_layer(n). Squarefree n keeps the whole
/// layer; otherwise only indices j <= (s-1)·s·q survive.
std::vector<BasisElement> basis_layer(std::size_t n);

/// Layers 1..m concatenated in ascending n.
std::vector<BasisElement> basis_up_to(std::size_t m);

/// Pairwise inner_v values of the given signals.
DenseMatrix gram_matrix(std::span<const Signal> elements, Side side);

struct OrthonormalBasis {
  Side side;
  std::vector<BasisElement> sources;  // the element each vector was built from
  std::vector<Signal> elements;       // irreducible representatives

  std::size_t count() const { return elements.size(); }
};

/// Modified Gram-Schmidt (with one re-orthogonalization pass) over
/// basis_up_to(m) under inner_v on the given side. Each output vector is
/// stored reduced and scaled so its first nonzero entry is positive. Throws
/// DependentInput when a residual norm drops below 1e-10.
///
/// The default Right side reproduces the classical table of leading vectors
/// (1, (1,-1), √½(2,-1,-1), ...). Work grows with lcm(1..m); BudgetExceeded
/// is thrown when that exceeds kMaxOrthonormalDim (so m <= 16).
inline constexpr std::size_t kMaxOrthonormalDim = std::size_t{1} << 20;

OrthonormalBasis orthonormal_basis(std::size_t m, Side side = Side::Right);

/// Coordinates ξ_i = inner_v(x, e_i). Throws InsufficientBasis when Σ ξ_i e_i
/// is farther than 1e-8 from x in dist_v.
std::vector<double> coordinates(const Signal& x, const OrthonormalBasis& basis);

/// Σ ξ_i e_i as a single signal (dimension is the lcm of the element dims
/// involved).
Signal reconstruct(std::span<const double> coords, const OrthonormalBasis& basis);

}  // namespace stpcs
