#include "stpcs/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "combinatorics.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/linalg.hpp"
#include "stpcs/signal_space.hpp"
#include "stpcs/stp.hpp"

namespace stpcs {
namespace {

constexpr double kRankTolerance = 1e-9;
constexpr double kUnitNormTolerance = 1e-12;

std::vector<double> column_norms(const DenseMatrix& a) {
  std::vector<double> norms(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) norms[j] += a(i, j) * a(i, j);
  for (double& n : norms) n = std::sqrt(n);
  return norms;
}

// Largest normalized column correlation, with or without absolute value.
double correlation_max(const DenseMatrix& a, bool absolute) {
  if (a.cols() < 2) throw Error(ErrorCode::BadShape, "coherence needs at least two columns");
  const auto norms = column_norms(a);
  for (std::size_t j = 0; j < norms.size(); ++j)
    if (norms[j] == 0.0) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j) + " is zero");
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < a.rows(); ++r) dot += a(r, i) * a(r, j);
      double c = dot / (norms[i] * norms[j]);
      if (absolute) c = std::abs(c);
      best = std::max(best, c);
    }
  return best;
}

DenseMatrix normalized_columns(const DenseMatrix& a) {
  const auto norms = column_norms(a);
  DenseMatrix out = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (norms[j] == 0.0) throw Error(ErrorCode::ZeroColumn, "column " + std::to_string(j) + " is zero");
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) /= norms[j];
  }
  return out;
}

DenseMatrix prepare_for_rip(const DenseMatrix& a, const RipOptions& options) {
  if (options.normalize) return normalized_columns(a);
  for (double n : column_norms(a))
    if (std::abs(n - 1.0) > kUnitNormTolerance) {
      throw Error(ErrorCode::InvalidArgument,
                  "RIP is only certified for unit-norm columns; enable normalization");
    }
  return a;
}

double isometry_defect(const DenseMatrix& sub) {
  const auto s = linalg::singular_values(sub);
  const double smax = s.front();
  // With more columns than rows the smallest singular value is zero.
  const double smin = sub.cols() > sub.rows() ? 0.0 : s.back();
  return std::max(1.0 - smin * smin, smax * smax - 1.0);
}

}  // namespace

std::string Spark::to_string() const { return infinite ? "inf" : std::to_string(value); }

double coherence(const DenseMatrix& a) { return correlation_max(a, true); }

double signed_coherence(const DenseMatrix& a) { return correlation_max(a, false); }

double welch_bound(std::size_t m, std::size_t n) {
  if (m == 0 || n < 2 || n <= m) {
    throw Error(ErrorCode::BadShape, "Welch bound needs n > m >= 1");
  }
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  return std::sqrt((nd - md) / (md * (nd - 1.0)));
}

Spark spark(const DenseMatrix& a, std::uint64_t budget) {
  const std::size_t n = a.cols();
  const std::size_t full_rank = linalg::rank(a, kRankTolerance);
  if (full_rank == n) return Spark::none();
  // Any rank+1 columns are dependent, so the search stops there.
  const std::size_t max_size = full_rank + 1;
  std::uint64_t needed = 0;
  for (std::size_t k = 1; k <= max_size; ++k) needed = detail::saturating_add(needed, detail::binomial(n, k));
  if (needed > budget) {
    throw Error(ErrorCode::BudgetExceeded, "spark needs " + std::to_string(needed) +
                                               " subsets, budget is " + std::to_string(budget));
  }
  for (std::size_t k = 1; k < max_size; ++k) {
    auto idx = detail::first_combination(k);
    do {
      if (linalg::rank(a.select_columns(idx), kRankTolerance) < k) return Spark::finite(k);
    } while (detail::next_combination(idx, n));
  }
  return Spark::finite(max_size);
}

std::size_t max_sparsity_from_coherence(double mu, std::size_t cols) {
  if (mu < 0.0 || !std::isfinite(mu)) throw Error(ErrorCode::InvalidArgument, "coherence must be >= 0");
  if (mu == 0.0) return cols;
  const double bound = 0.5 * (1.0 + 1.0 / mu);
  // Strict inequality; a bound within rounding of an integer is that integer.
  const double nearest = std::round(bound);
  const double effective = std::abs(bound - nearest) <= 1e-9 * std::max(1.0, bound) ? nearest : bound;
  const double k = std::ceil(effective) - 1.0;
  return k <= 0.0 ? 0 : std::min(static_cast<std::size_t>(k), cols);
}

std::size_t max_sparsity(const DenseMatrix& a) {
  return max_sparsity_from_coherence(coherence(a), a.cols());
}

RipResult rip_check(const DenseMatrix& a, std::size_t k, const RipOptions& options) {
  if (k == 0 || k > a.cols()) {
    throw Error(ErrorCode::InvalidArgument, "RIP order must lie in [1, cols]");
  }
  const std::uint64_t subsets = detail::binomial(a.cols(), k);
  if (subsets > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(subsets) +
                                               " subsets exceed the budget of " +
                                               std::to_string(options.budget));
  }
  const DenseMatrix unit = prepare_for_rip(a, options);
  double delta = 0.0;
  auto idx = detail::first_combination(k);
  do {
    delta = std::max(delta, isometry_defect(unit.select_columns(idx)));
  } while (detail::next_combination(idx, a.cols()));
  return {k, delta, delta < 1.0};
}

RipResult rip_check_blockwise(const DenseMatrix& a, std::size_t s, std::size_t k,
                              const RipOptions& options) {
  if (s == 0 || s > 2) throw Error(ErrorCode::Unsupported, "blockwise enumeration needs s in {1, 2}");
  const std::size_t n = a.cols();
  if (k == 0 || k > n) throw Error(ErrorCode::InvalidArgument, "RIP order must lie in [1, cols]");
  const std::uint64_t per_block = detail::binomial(n, k);
  const std::uint64_t subsets = s == 1 ? per_block
                                : per_block > options.budget / per_block ? options.budget + 1
                                                                         : per_block * per_block;
  if (subsets > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, "blockwise RIP enumeration exceeds the budget");
  }
  const DenseMatrix lifted = lift(prepare_for_rip(a, options), s, Side::Right);
  double delta = 0.0;
  auto first = detail::first_combination(k);
  do {
    if (s == 1) {
      delta = std::max(delta, isometry_defect(lifted.select_columns(first)));
      continue;
    }
    auto second = detail::first_combination(k);
    do {
      std::vector<std::size_t> support(first);
      for (std::size_t c : second) support.push_back(n + c);
      delta = std::max(delta, isometry_defect(lifted.select_columns(support)));
    } while (detail::next_combination(second, n));
  } while (detail::next_combination(first, n));
  return {k, delta, delta < 1.0};
}

CsReport metrics(const DenseMatrix& a, const MetricsOptions& options) {
  CsReport report;
  report.coherence = coherence(a);
  report.signed_coherence = signed_coherence(a);
  if (a.cols() > a.rows()) report.welch_bound = welch_bound(a.rows(), a.cols());
  report.spark = spark(a, options.budget);
  report.max_k = max_sparsity_from_coherence(report.coherence, a.cols());
  if (options.rip_k) report.rip = rip_check(a, *options.rip_k, {true, options.budget});
  report.atom_rows = a.rows();
  report.atom_cols = a.cols();
  return report;
}

CsReport class_metrics(const DenseMatrix& a, Side side, const MetricsOptions& options) {
  auto reduced = reduce_matrix(a, side);
  CsReport report = metrics(reduced.atom, options);
  report.multiplicity = reduced.multiplicity;
  return report;
}

}  // namespace stpcs
