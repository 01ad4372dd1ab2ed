#include "stpcs/stp.hpp"

#include <numeric>

namespace stpcs {

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t p = b.rows(), q = b.cols();
  DenseMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
    }
  return out;
}

std::vector<std::size_t> swap_permutation(std::size_t m, std::size_t n) {
  // Position j*m+i of y⊗x holds x_i y_j, which sits at i*n+j in x⊗y.
  std::vector<std::size_t> perm(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) perm[j * m + i] = i * n + j;
  return perm;
}

DenseMatrix swap_matrix(std::size_t m, std::size_t n) {
  const auto perm = swap_permutation(m, n);
  DenseMatrix w(m * n, m * n);
  for (std::size_t r = 0; r < perm.size(); ++r) w(r, perm[r]) = 1.0;
  return w;
}

Signal lift(const Signal& x, std::size_t factor, Side side) {
  if (factor == 1) return x;
  const std::size_t n = x.dim();
  std::vector<double> out(n * factor);
  if (side == Side::Left) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < factor; ++k) out[i * factor + k] = x[i];
  } else {
    for (std::size_t k = 0; k < factor; ++k)
      for (std::size_t i = 0; i < n; ++i) out[k * n + i] = x[i];
  }
  return Signal(std::move(out));
}

DenseMatrix lift(const DenseMatrix& a, std::size_t factor, Side side) {
  if (factor == 1) return a;
  const auto eye = DenseMatrix::identity(factor);
  return side == Side::Left ? kron(a, eye) : kron(eye, a);
}

DenseMatrix mm_stp(const DenseMatrix& a, const DenseMatrix& b, Side side) {
  const std::size_t t = std::lcm(a.cols(), b.rows());
  return lift(a, t / a.cols(), side) * lift(b, t / b.rows(), side);
}

Signal mv_stp(const DenseMatrix& a, const Signal& x, Side side) {
  const std::size_t s = std::lcm(a.cols(), x.dim());
  return lift(a, s / a.cols(), side) * lift(x, s / x.dim(), side);
}

Signal sta(const Signal& x, const Signal& y, Side side, bool subtract) {
  const std::size_t t = std::lcm(x.dim(), y.dim());
  const Signal lx = lift(x, t / x.dim(), side);
  const Signal ly = lift(y, t / y.dim(), side);
  return subtract ? lx - ly : lx + ly;
}

}  // namespace stpcs
