#include "stpcs/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "combinatorics.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/linalg.hpp"
#include "stpcs/signal_space.hpp"
#include "stpcs/stp.hpp"

namespace stpcs {
namespace {

constexpr double kSameSolutionTolerance = 1e-6;

// (W_[m,n] v)[r] = v[perm[r]].
std::vector<double> apply_swap(std::size_t m, std::size_t n, std::span<const double> v) {
  const auto perm = swap_permutation(m, n);
  std::vector<double> out(v.size());
  for (std::size_t r = 0; r < perm.size(); ++r) out[r] = v[perm[r]];
  return out;
}

double residual_norm(const DenseMatrix& a, std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double v = -y[i];
    for (std::size_t j = 0; j < a.cols(); ++j) v += a(i, j) * x[j];
    acc += v * v;
  }
  return std::sqrt(acc);
}

bool same_solution(const std::vector<double>& u, const std::vector<double>& v) {
  double scale = 1.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    scale = std::max({scale, std::abs(u[i]), std::abs(v[i])});
    diff = std::max(diff, std::abs(u[i] - v[i]));
  }
  return diff <= kSameSolutionTolerance * scale;
}

std::uint64_t support_count(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j <= k; ++j) total = detail::saturating_add(total, detail::binomial(n, j));
  return total;
}

std::vector<double> exhaustive_solve(const DenseMatrix& a, std::span<const double> y, std::size_t k,
                                     double tol) {
  const std::size_t n = a.cols();
  std::vector<std::vector<double>> solutions;
  auto consider = [&](std::vector<double> x) {
    if (residual_norm(a, x, y) >= tol) return;
    for (const auto& s : solutions)
      if (same_solution(s, x)) return;
    solutions.push_back(std::move(x));
  };
  consider(std::vector<double>(n, 0.0));
  for (std::size_t size = 1; size <= std::min(k, n); ++size) {
    auto idx = detail::first_combination(size);
    do {
      const auto coef = linalg::least_squares(a.select_columns(idx), y);
      std::vector<double> x(n, 0.0);
      for (std::size_t c = 0; c < size; ++c) x[idx[c]] = coef[c];
      consider(std::move(x));
    } while (detail::next_combination(idx, n));
  }
  if (solutions.empty()) {
    throw Error(ErrorCode::NoSolution, "no support of size <= " + std::to_string(k) +
                                           " meets the residual bound");
  }
  if (solutions.size() > 1) {
    throw Error(ErrorCode::NotUnique, std::to_string(solutions.size()) +
                                          " distinct sparse solutions meet the residual bound");
  }
  return solutions.front();
}

std::vector<double> omp_solve(const DenseMatrix& a, std::span<const double> y, std::size_t k,
                              double tol) {
  const std::size_t n = a.cols();
  std::vector<double> norms(n, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) norms[j] += a(i, j) * a(i, j);
  std::vector<std::size_t> support;
  std::vector<double> x(n, 0.0);
  std::vector<double> residual(y.begin(), y.end());
  for (std::size_t step = 0; step < std::min(k, n); ++step) {
    double rnorm = 0.0;
    for (double v : residual) rnorm += v * v;
    if (std::sqrt(rnorm) < tol) break;
    std::size_t best = n;
    double best_score = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (norms[j] == 0.0 || std::find(support.begin(), support.end(), j) != support.end()) continue;
      double dot = 0.0;
      for (std::size_t i = 0; i < a.rows(); ++i) dot += a(i, j) * residual[i];
      const double score = std::abs(dot) / std::sqrt(norms[j]);
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    if (best == n) break;
    support.push_back(best);
    std::sort(support.begin(), support.end());
    const auto coef = linalg::least_squares(a.select_columns(support), y);
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t c = 0; c < support.size(); ++c) x[support[c]] = coef[c];
    for (std::size_t i = 0; i < a.rows(); ++i) {
      double v = y[i];
      for (std::size_t j : support) v -= a(i, j) * x[j];
      residual[i] = v;
    }
  }
  if (residual_norm(a, x, y) >= tol) {
    throw Error(ErrorCode::NoSolution, "matching pursuit did not reach the residual bound");
  }
  return x;
}

// Entrywise-rounded x if it reproduces y exactly, else x.
std::vector<double> snap_integers(const DenseMatrix& a, std::vector<double> x, std::span<const double> y) {
  std::vector<double> rounded(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) rounded[i] = std::nearbyint(x[i]);
  return residual_norm(a, rounded, y) == 0.0 ? rounded : x;
}

std::vector<double> sparse_solve(const DenseMatrix& a, std::span<const double> y, std::size_t k,
                                 const RecoveryOptions& options) {
  auto x = options.solver == RecoveryOptions::Solver::Omp ? omp_solve(a, y, k, options.residual_tol)
                                                          : exhaustive_solve(a, y, k, options.residual_tol);
  return snap_integers(a, std::move(x), y);
}

std::optional<Signal> try_unlift(const Signal& x, std::size_t r, Side side) {
  const std::size_t p = x.dim() / r;
  std::vector<double> base(p);
  for (std::size_t i = 0; i < p; ++i) base[i] = side == Side::Left ? x[i * r] : x[i];
  Signal candidate(std::move(base));
  if (max_abs_diff(lift(candidate, r, side), x) > kReductionTolerance) return std::nullopt;
  return candidate;
}

}  // namespace

CompressionPlan plan(const DenseMatrix& a, std::size_t p, Side side) {
  if (p == 0) throw Error(ErrorCode::InvalidArgument, "signal dimension must be positive");
  auto reduced = reduce_matrix(a, side);
  CompressionPlan out{std::move(reduced.atom), side, reduced.multiplicity, p};
  const std::size_t n0 = out.atom.cols();
  out.t = std::lcm(n0, p);
  out.s = out.t / n0;
  out.r = out.t / p;
  out.output_dim = out.atom.rows() * out.s;
  return out;
}

std::vector<CompressionPlan> plans_for(const DenseMatrix& a, std::span<const std::size_t> dims,
                                       Side side) {
  std::vector<CompressionPlan> out;
  out.reserve(dims.size());
  for (std::size_t p : dims) out.push_back(plan(a, p, side));
  return out;
}

Signal compress(const DenseMatrix& a, const Signal& x, Side side) { return mv_stp(a, x, side); }

std::vector<Signal> compress_varying(const DenseMatrix& a, std::span<const Signal> xs, Side side) {
  std::vector<Signal> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(compress(a, x, side));
  return out;
}

Signal recover(const DenseMatrix& a, std::size_t s, const Signal& y, const SparsitySpec& spec,
               Side side, const RecoveryOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "lift factor must be positive");
  if (y.dim() != m * s) {
    throw Error(ErrorCode::BadShape, "measurement has dimension " + std::to_string(y.dim()) +
                                         ", expected " + std::to_string(m * s));
  }
  if (spec.block_len != n) {
    throw Error(ErrorCode::InvalidArgument, "block length " + std::to_string(spec.block_len) +
                                                " differs from the column count " + std::to_string(n));
  }
  if (spec.per_block_k > spec.block_len) {
    throw Error(ErrorCode::InvalidArgument, "per-block sparsity exceeds the block length");
  }
  if (!(options.residual_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "residual tolerance must be positive");
  const std::size_t full_dim = n * s;
  std::size_t r = 1;
  if (options.signal_dim) {
    const std::size_t p = *options.signal_dim;
    if (p == 0 || full_dim % p != 0) {
      throw Error(ErrorCode::InvalidArgument, "signal dimension " + std::to_string(p) +
                                                  " does not divide " + std::to_string(full_dim));
    }
    r = full_dim / p;
  }

  const bool blockwise = spec.mode == SparsitySpec::Mode::Blockwise;
  if (options.solver == RecoveryOptions::Solver::Exhaustive) {
    const std::uint64_t needed = blockwise ? detail::binomial(s, 1) * support_count(n, spec.per_block_k)
                                           : support_count(full_dim, spec.per_block_k);
    if (needed > options.budget) {
      throw Error(ErrorCode::BudgetExceeded, "recovery needs " + std::to_string(needed) +
                                                 " supports, budget is " + std::to_string(options.budget));
    }
  }

  // Right form: y' = (I_s⊗a) z.
  const std::vector<double> rhs = side == Side::Left ? apply_swap(m, s, y.entries()) : y.vector();
  std::vector<double> z(full_dim, 0.0);
  if (blockwise) {
    for (std::size_t b = 0; b < s; ++b) {
      const std::span<const double> block(rhs.data() + b * m, m);
      const auto xb = sparse_solve(a, block, spec.per_block_k, options);
      std::copy(xb.begin(), xb.end(), z.begin() + static_cast<std::ptrdiff_t>(b * n));
    }
  } else {
    z = sparse_solve(lift(a, s, Side::Right), rhs, spec.per_block_k, options);
  }
  Signal x(side == Side::Left ? apply_swap(s, n, z) : std::move(z));
  if (r == 1) return x;
  auto base = try_unlift(x, r, side);
  if (!base) {
    throw Error(ErrorCode::NoSolution, "recovered signal is not a lift by " + std::to_string(r));
  }
  return *base;
}

bool uniqueness_guarantee(const DenseMatrix& a, std::size_t k, Side side, std::uint64_t budget) {
  return spark(reduce_matrix(a, side).atom, budget).exceeds(2 * k);
}

}  // namespace stpcs
