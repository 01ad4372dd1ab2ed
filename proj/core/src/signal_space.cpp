#include "stpcs/signal_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "stpcs/errors.hpp"
#include "stpcs/stp.hpp"

namespace stpcs {
namespace {

std::vector<std::size_t> divisors_descending(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Candidate atom of dimension n/s read off x, before verification.
std::vector<double> signal_atom_candidate(const Signal& x, std::size_t s, Side side) {
  const std::size_t m = x.dim() / s;
  std::vector<double> atom(m);
  for (std::size_t i = 0; i < m; ++i) atom[i] = side == Side::Left ? x[i * s] : x[i];
  return atom;
}

bool signal_factorizes(const Signal& x, const std::vector<double>& atom, std::size_t s,
                       Side side, double tol) {
  const std::size_t m = atom.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      const double v = side == Side::Left ? x[i * s + k] : x[k * m + i];
      if (std::abs(v - atom[i]) > tol) return false;
    }
  return true;
}

bool matrix_factorizes(const DenseMatrix& a, std::size_t s, Side side, double tol) {
  const std::size_t m0 = a.rows() / s, n0 = a.cols() / s;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      // Block coordinates (i, j) of the atom and (k, l) of the identity.
      std::size_t i, j, k, l;
      if (side == Side::Left) {
        i = r / s, k = r % s, j = c / s, l = c % s;
      } else {
        k = r / m0, i = r % m0, l = c / n0, j = c % n0;
      }
      const double expected =
          k == l ? (side == Side::Left ? a(i * s, j * s) : a(i, j)) : 0.0;
      if (std::abs(a(r, c) - expected) > tol) return false;
    }
  return true;
}

}  // namespace

Reduction<Signal> reduce_signal(const Signal& x, Side side, double tol) {
  for (std::size_t s : divisors_descending(x.dim())) {
    if (s == 1) break;
    auto atom = signal_atom_candidate(x, s, side);
    if (signal_factorizes(x, atom, s, side, tol)) return {Signal(std::move(atom)), s};
  }
  return {x, 1};
}

Reduction<DenseMatrix> reduce_matrix(const DenseMatrix& a, Side side, double tol) {
  for (std::size_t s : divisors_descending(std::gcd(a.rows(), a.cols()))) {
    if (s == 1) break;
    if (!matrix_factorizes(a, s, side, tol)) continue;
    const std::size_t m0 = a.rows() / s, n0 = a.cols() / s;
    DenseMatrix atom(m0, n0);
    for (std::size_t i = 0; i < m0; ++i)
      for (std::size_t j = 0; j < n0; ++j)
        atom(i, j) = side == Side::Left ? a(i * s, j * s) : a(i, j);
    return {std::move(atom), s};
  }
  return {a, 1};
}

SignalClass signal_class(const Signal& x, Side side) {
  return {side, reduce_signal(x, side).atom};
}

MatrixClass matrix_class(const DenseMatrix& a, Side side) {
  return {side, reduce_matrix(a, side).atom};
}

bool equivalent(const Signal& x, const Signal& y, Side side, double tol) {
  const auto rx = reduce_signal(x, side, tol);
  const auto ry = reduce_signal(y, side, tol);
  return rx.atom.dim() == ry.atom.dim() && max_abs_diff(rx.atom, ry.atom) <= tol;
}

double inner_v(const Signal& x, const Signal& y, Side side) {
  const std::size_t t = std::lcm(x.dim(), y.dim());
  const std::size_t fx = t / x.dim(), fy = t / y.dim();
  // Sum over the lifted coordinates without materializing either lift.
  double acc = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double xi = side == Side::Left ? x[i / fx] : x[i % x.dim()];
    const double yi = side == Side::Left ? y[i / fy] : y[i % y.dim()];
    acc += xi * yi;
  }
  return acc / static_cast<double>(t);
}

double norm_v(const Signal& x) {
  return std::sqrt(x.dot(x) / static_cast<double>(x.dim()));
}

double dist_v(const Signal& x, const Signal& y, Side side) {
  return norm_v(sta(x, y, side, true));
}

double angle_v(const Signal& x, const Signal& y, Side side) {
  const double nx = norm_v(x), ny = norm_v(y);
  if (nx == 0.0 || ny == 0.0) throw Error(ErrorCode::ZeroVector, "angle with a zero signal");
  const double c = std::clamp(inner_v(x, y, side) / (nx * ny), -1.0, 1.0);
  return std::acos(c);
}

DenseMatrix projection_matrix(std::size_t m, std::size_t n, Side side) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "projection dims must be >= 1");
  const std::size_t t = std::lcm(m, n);
  const auto down = DenseMatrix::ones(1, t / n);
  const auto up = DenseMatrix::ones(t / m, 1);
  const auto in = DenseMatrix::identity(n), im = DenseMatrix::identity(m);
  const DenseMatrix shrink = side == Side::Left ? kron(in, down) : kron(down, in);
  const DenseMatrix grow = side == Side::Left ? kron(im, up) : kron(up, im);
  return (static_cast<double>(n) / static_cast<double>(t)) * (shrink * grow);
}

Signal project(const Signal& x, std::size_t n, Side side) {
  return projection_matrix(x.dim(), n, side) * x;
}

}  // namespace stpcs
