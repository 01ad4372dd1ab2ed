#include "golden_check.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stpcs/basis.hpp"
#include "stpcs/bibd.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/io.hpp"
#include "stpcs/metrics.hpp"

namespace stpcs::cli {
namespace {

using nlohmann::json;

DenseMatrix load(const std::filesystem::path& dir, const std::string& file) {
  return io::load_matrix(dir / file).matrix;
}

GoldenResult exact(const std::string& name, const DenseMatrix& got, const DenseMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    return {name, false, "shape differs"};
  }
  const double diff = max_abs_diff(got, want);
  return {name, diff == 0.0, diff == 0.0 ? "" : "max entry difference " + io::format_double(diff)};
}

GoldenResult up_to_group(const std::string& name, const SignMatrix& got, const DenseMatrix& want) {
  const SignMatrix w(want);
  const bool ok = equivalent_under_sign_group(got, w);
  return {name, ok, ok ? "" : "not equivalent under sign changes and permutations"};
}

GoldenResult element_list(const std::string& name, const std::vector<BasisElement>& got,
                          const json& want) {
  std::vector<BasisElement> w;
  for (const auto& pair : want) w.push_back({pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>()});
  if (got == w) return {name, true, ""};
  return {name, false, "got " + std::to_string(got.size()) + " elements, expected " + std::to_string(w.size())};
}

template <typename F>
void guarded(std::vector<GoldenResult>& out, const std::string& name, F&& f) {
  try {
    out.push_back(f());
  } catch (const std::exception& e) {
    out.push_back({name, false, e.what()});
  }
}

}  // namespace

std::vector<GoldenResult> check_golden(const std::filesystem::path& dir) {
  std::vector<GoldenResult> out;
  guarded(out, "incidence_alpha4", [&] {
    return exact("incidence_alpha4", incidence_matrix(4).matrix(), load(dir, "incidence_alpha4.csv"));
  });
  guarded(out, "hv_alpha4", [&] {
    return exact("hv_alpha4", vertical_expand(incidence_matrix(4)).matrix(), load(dir, "hv_alpha4.csv"));
  });
  guarded(out, "phi_alpha4", [&] {
    const auto hv = vertical_expand(incidence_matrix(4));
    const SignMatrix b(load(dir, "embedding_b.csv"));
    auto r = exact("phi_alpha4", horizontal_expand(hv, b), load(dir, "phi_alpha4.csv"));
    const double mu = coherence(load(dir, "phi_alpha4.csv"));
    if (r.ok && std::abs(mu - 1.0 / 3.0) > 1e-12) r = {"phi_alpha4", false, "coherence " + io::format_double(mu)};
    return r;
  });
  guarded(out, "hstar_alpha4", [&] {
    return exact("hstar_alpha4", vertical_expand_star(4).matrix(), load(dir, "hstar_alpha4.csv"));
  });
  for (const auto& [name, sm] : {std::pair{"ocm4", 4}, {"aocm3", 3}, {"aocm3_equivalent", 3},
                                 {"aocm7", 7}, {"aocm7_equivalent", 7}, {"aocm5", 5}}) {
    const std::string n = name;
    const std::size_t t = static_cast<std::size_t>(sm);
    guarded(out, n, [&] {
      const SignMatrix got = n.starts_with("ocm") ? ocm(t) : aocm(t);
      return up_to_group(n, got, load(dir, n + ".csv"));
    });
  }
  guarded(out, "basis", [&] {
    std::ifstream in(dir / "basis.json");
    const json doc = json::parse(in);
    for (const auto& r : {element_list("generating_layer_12", generating_layer(12), doc.at("generating_layer_12")),
                          element_list("layer_12", basis_layer(12), doc.at("layer_12")),
                          element_list("generating_layer_27", generating_layer(27), doc.at("generating_layer_27")),
                          element_list("layer_27", basis_layer(27), doc.at("layer_27")),
                          element_list("up_to_10", basis_up_to(10), doc.at("up_to_10"))}) {
      if (!r.ok) return GoldenResult{"basis", false, r.name + ": " + r.detail};
    }
    return GoldenResult{"basis", true, ""};
  });
  guarded(out, "orthonormal9", [&] {
    std::ifstream in(dir / "orthonormal9.json");
    const json doc = json::parse(in);
    const auto basis = orthonormal_basis(5, parse_side(doc.at("side").get<std::string>()));
    const auto& want = doc.at("elements");
    if (basis.count() < want.size()) return GoldenResult{"orthonormal9", false, "too few elements"};
    for (std::size_t i = 0; i < want.size(); ++i) {
      const auto scale = want[i].at("scale");
      const double c = std::sqrt(scale.at(0).get<double>() / scale.at(1).get<double>());
      std::vector<double> v;
      for (const auto& e : want[i].at("entries")) v.push_back(c * e.get<double>());
      const Signal& got = basis.elements[i];
      if (got.dim() != v.size() || max_abs_diff(got, Signal(v)) > 1e-10) {
        return GoldenResult{"orthonormal9", false, "element " + std::to_string(i + 1) + " differs"};
      }
    }
    return GoldenResult{"orthonormal9", true, ""};
  });
  return out;
}

}  // namespace stpcs::cli
