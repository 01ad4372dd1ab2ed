#include "stpcs/basis.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "stpcs/errors.hpp"
#include "stpcs/signal_space.hpp"
#include "stpcs/stp.hpp"

namespace stpcs {
namespace {

constexpr double kDependenceTolerance = 1e-10;
constexpr double kReconstructionTolerance = 1e-8;
// Projections smaller than this are skipped; they cannot change any entry
// beyond rounding but would force a lift to a larger lcm.
constexpr double kNegligibleCoefficient = 1e-15;

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

Signal orient(const Signal& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (std::abs(v[i]) > 1e-12) return v[i] < 0 ? -1.0 * v : v;
  }
  return v;
}

}  // namespace

Signal BasisElement::value() const {
  if (n == 1) return Signal{1.0};
  return Signal::unit(n, j);
}

SquareDecomposition square_decomposition(std::size_t n) {
  require_positive(n, "n");
  std::size_t best = 1;
  for (std::size_t s = 2; s * s <= n; ++s)
    if (n % (s * s) == 0) best = s;
  return {best, n / (best * best)};
}

bool has_multifold_divisor(std::size_t n) { return square_decomposition(n).s > 1; }

std::vector<BasisElement> generating_layer(std::size_t n) {
  require_positive(n, "n");
  if (n == 1) return {{1, 1}};
  std::vector<BasisElement> out;
  for (std::size_t j = 1; j < n; ++j)
    if (std::gcd(j, n) == 1) out.push_back({n, j});
  return out;
}

std::vector<BasisElement> basis_layer(std::size_t n) {
  auto layer = generating_layer(n);
  const auto [s, q] = square_decomposition(n);
  if (s == 1) return layer;
  const std::size_t cutoff = (s - 1) * s * q;
  std::erase_if(layer, [cutoff](const BasisElement& e) { return e.j > cutoff; });
  return layer;
}

std::vector<BasisElement> basis_up_to(std::size_t m) {
  require_positive(m, "m");
  std::vector<BasisElement> out;
  for (std::size_t n = 1; n <= m; ++n) {
    auto layer = basis_layer(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

DenseMatrix gram_matrix(std::span<const Signal> elements, Side side) {
  const std::size_t k = elements.size();
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "gram matrix of nothing");
  DenseMatrix g(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) g(a, b) = g(b, a) = inner_v(elements[a], elements[b], side);
  return g;
}

OrthonormalBasis orthonormal_basis(std::size_t m, Side side) {
  std::size_t span_dim = 1;
  for (std::size_t n = 2; n <= m && span_dim <= kMaxOrthonormalDim; ++n) span_dim = std::lcm(span_dim, n);
  if (span_dim > kMaxOrthonormalDim) {
    throw Error(ErrorCode::BudgetExceeded, "lcm(1.." + std::to_string(m) + ") exceeds " +
                                               std::to_string(kMaxOrthonormalDim));
  }
  OrthonormalBasis basis{side, basis_up_to(m), {}};
  basis.elements.reserve(basis.sources.size());
  for (const auto& source : basis.sources) {
    Signal v = source.value();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis.elements) {
        const double c = inner_v(v, e, side);
        if (std::abs(c) <= kNegligibleCoefficient) continue;
        v = sta(v, c * e, side, true);
      }
    }
    v = reduce_signal(v, side, kDependenceTolerance).atom;
    const double norm = norm_v(v);
    if (norm < kDependenceTolerance) {
      throw Error(ErrorCode::DependentInput,
                  "delta_" + std::to_string(source.n) + "^" + std::to_string(source.j) +
                      " lies in the span of the preceding basis elements");
    }
    basis.elements.push_back(orient((1.0 / norm) * v));
  }
  return basis;
}

Signal reconstruct(std::span<const double> coords, const OrthonormalBasis& basis) {
  if (coords.size() > basis.count()) {
    throw Error(ErrorCode::BadShape, "more coordinates than basis elements");
  }
  Signal acc = Signal::zeros(1);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0.0) continue;
    acc = sta(acc, coords[i] * basis.elements[i], basis.side);
  }
  return reduce_signal(acc, basis.side, kDependenceTolerance).atom;
}

std::vector<double> coordinates(const Signal& x, const OrthonormalBasis& basis) {
  std::vector<double> xi;
  xi.reserve(basis.count());
  for (const auto& e : basis.elements) xi.push_back(inner_v(x, e, basis.side));
  const double residual = dist_v(reconstruct(xi, basis), x, basis.side);
  if (residual > kReconstructionTolerance) {
    throw Error(ErrorCode::InsufficientBasis,
                "signal is not in the span of the basis (residual " + std::to_string(residual) +
                    ")");
  }
  return xi;
}

}  // namespace stpcs
