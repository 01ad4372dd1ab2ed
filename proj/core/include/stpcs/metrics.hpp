#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "stpcs/matrix.hpp"

namespace stpcs {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Largest |⟨a_i,a_j⟩|/(‖a_i‖‖a_j‖) over distinct columns. Needs at least two
/// columns; throws ZeroColumn if any column vanishes.
double coherence(const DenseMatrix& a);

/// Same maximum without the absolute value.
double signed_coherence(const DenseMatrix& a);

/// sqrt((n-m)/(m(n-1))), the floor on coherence for an m×n matrix with n > m.
double welch_bound(std::size_t m, std::size_t n);

/// Smallest number of linearly dependent columns, or infinite when all
/// columns are independent.
struct Spark {
  bool infinite = false;
  std::size_t value = 0;

  static Spark finite(std::size_t v) { return {false, v}; }
  static Spark none() { return {true, 0}; }

  /// True iff spark > bound.
  bool exceeds(std::size_t bound) const { return infinite || value > bound; }
  std::string to_string() const;
  bool operator==(const Spark&) const = default;
};

/// Exhaustive search over column subsets in increasing size. A singular value
/// below 1e-9·σ_max of the subset counts as zero. Throws BudgetExceeded when
/// the number of subsets to test exceeds the budget.
Spark spark(const DenseMatrix& a, std::uint64_t budget = kDefaultEnumerationBudget);

/// Largest integer k with k < (1 + 1/μ)/2. With μ = 0 every sparsity level up
/// to the column count qualifies.
std::size_t max_sparsity_from_coherence(double mu, std::size_t cols);
std::size_t max_sparsity(const DenseMatrix& a);

struct RipOptions {
  bool normalize = true;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

struct RipResult {
  std::size_t k = 0;
  double delta = 0.0;
  bool satisfied = false;  // delta < 1
};

/// Exact restricted isometry constant of order k: the maximum over k-column
/// submatrices S of max(1 - σ_min(S)², σ_max(S)² - 1). Columns are normalized
/// first unless options.normalize is false, in which case they must already
/// have unit norm.
RipResult rip_check(const DenseMatrix& a, std::size_t k, const RipOptions& options = {});

/// Cross-check of the block-sparse isometry constant: enumerates supports with
/// k entries in each of the s blocks of (I_s⊗A) directly. Limited to s <= 2.
RipResult rip_check_blockwise(const DenseMatrix& a, std::size_t s, std::size_t k,
                              const RipOptions& options = {});

struct CsReport {
  double coherence = 0.0;
  double signed_coherence = 0.0;
  std::optional<double> welch_bound;  // empty when cols <= rows
  Spark spark;
  std::size_t max_k = 0;
  std::optional<RipResult> rip;
  std::size_t atom_rows = 0;
  std::size_t atom_cols = 0;
  std::size_t multiplicity = 1;
};

struct MetricsOptions {
  std::optional<std::size_t> rip_k;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Metrics of a as given.
CsReport metrics(const DenseMatrix& a, const MetricsOptions& options = {});

/// Metrics of the equivalence class of a: the matrix is first reduced to its
/// irreducible atom and everything is computed there.
CsReport class_metrics(const DenseMatrix& a, Side side, const MetricsOptions& options = {});

}  // namespace stpcs
