#pragma once

#include <cstddef>

#include "stpcs/matrix.hpp"

namespace stpcs {

/// Default tolerance for deciding that two floating entries are equal when
/// testing factorizations. Integer-valued data differs by at least 1, so the
/// same threshold is an exact test there.
inline constexpr double kReductionTolerance = 1e-12;

template <typename T>
struct Reduction {
  T atom;
  std::size_t multiplicity;
};

/// Irreducible representative of an equivalence class of signals.
struct SignalClass {
  Side side;
  Signal atom;

  std::size_t dim() const { return atom.dim(); }
};

/// Irreducible representative of an equivalence class of matrices.
struct MatrixClass {
  Side side;
  DenseMatrix atom;
};

/// Writes x = atom⊗J_mult (Left) or J_mult⊗atom (Right) with the largest
/// possible multiplicity, so the atom is irreducible. A zero signal reduces
/// to the scalar atom (0).
Reduction<Signal> reduce_signal(const Signal& x, Side side, double tol = kReductionTolerance);

/// Writes a = atom⊗I_mult (Left) or I_mult⊗atom (Right) with the largest
/// possible multiplicity.
Reduction<DenseMatrix> reduce_matrix(const DenseMatrix& a, Side side,
                                     double tol = kReductionTolerance);

SignalClass signal_class(const Signal& x, Side side);
MatrixClass matrix_class(const DenseMatrix& a, Side side);

/// True iff x and y reduce to the same atom.
bool equivalent(const Signal& x, const Signal& y, Side side, double tol = kReductionTolerance);

/// Lift-invariant inner product (1/t)·⟨lift(x), lift(y)⟩ with t = lcm(m, n).
double inner_v(const Signal& x, const Signal& y, Side side = Side::Left);
double norm_v(const Signal& x);
double dist_v(const Signal& x, const Signal& y, Side side = Side::Left);

/// Angle in radians between two signals under inner_v. Throws ZeroVector if
/// either argument has zero norm.
double angle_v(const Signal& x, const Signal& y, Side side = Side::Left);

/// The n×m matrix Π^m_n whose product with x∈R^m is the point of R^n
/// closest to x in dist_v. For the Left system
/// Π = (n/t)(I_n⊗J_{t/n}ᵀ)(I_m⊗J_{t/m}); the Right one swaps the Kronecker
/// factors.
DenseMatrix projection_matrix(std::size_t m, std::size_t n, Side side = Side::Left);

Signal project(const Signal& x, std::size_t n, Side side = Side::Left);

}  // namespace stpcs
