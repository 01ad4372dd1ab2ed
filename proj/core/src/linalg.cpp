#include "stpcs/linalg.hpp"

#include <Eigen/Dense>

#include "stpcs/errors.hpp"

namespace stpcs::linalg {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
  return Eigen::Map<const RowMajor>(a.data().data(), static_cast<Eigen::Index>(a.rows()),
                                    static_cast<Eigen::Index>(a.cols()));
}

}  // namespace

std::vector<double> singular_values(const DenseMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

std::size_t rank(const DenseMatrix& a, double rel_tol) {
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cutoff = rel_tol * s.front();
  std::size_t r = 0;
  for (double v : s)
    if (v >= cutoff) ++r;
  return r;
}

std::vector<double> least_squares(const DenseMatrix& a, std::span<const double> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::BadShape, "right-hand side length mismatch");
  const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(to_eigen(a));
  const Eigen::VectorXd x = cod.solve(rhs);
  return std::vector<double>(x.data(), x.data() + x.size());
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::BadShape, "eigenvalues need a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace stpcs::linalg
