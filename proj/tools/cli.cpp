#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "golden_check.hpp"
#include "stpcs/basis.hpp"
#include "stpcs/bibd.hpp"
#include "stpcs/errors.hpp"
#include "stpcs/io.hpp"
#include "stpcs/metrics.hpp"
#include "stpcs/pipeline.hpp"
#include "stpcs/signal_space.hpp"

#ifndef STPCS_DEFAULT_GOLDEN_DIR
#define STPCS_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace stpcs::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("STPCS_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError("STPCS_BUDGET must be a positive integer");
  return v;
}

Side side_of(const std::string& text) {
  try {
    return parse_side(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void emit_matrix(std::ostream& out, const std::string& path, io::MatrixFile file) {
  if (path.empty() || path == "-") {
    io::write_matrix_csv(out, file.matrix, file.kind);
    return;
  }
  if (file.name.empty()) file.name = std::filesystem::path(path).stem().string();
  io::save_matrix(path, file);
}

void emit_signal(std::ostream& out, const std::string& path, const Signal& x) {
  if (path.empty() || path == "-") {
    io::write_signal_csv(out, x);
  } else {
    io::save_signal(path, x);
  }
}

void emit_text(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text << '\n';
}

io::MatrixFile named(std::string name, const DenseMatrix& m, std::map<std::string, std::string> prov) {
  return {std::move(name), io::infer_kind(m), m, std::move(prov)};
}

// Uniform double in [-1, 1) from the top 53 bits; identical on every platform.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, io::MatrixKind kind) {
  std::mt19937_64 rng(seed);
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      switch (kind) {
        case io::MatrixKind::Real:
          m(i, j) = unit_interval(rng);
          break;
        case io::MatrixKind::Sign:
          m(i, j) = (rng() >> 63) ? -1.0 : 1.0;
          break;
        case io::MatrixKind::Boolean:
          m(i, j) = static_cast<double>(rng() >> 63);
          break;
      }
    }
  return m;
}

json element_json(const BasisElement& e) { return json::array({e.n, e.j}); }

struct State {
  std::string output;
  std::string input;
  std::string second_input;
  std::string side = "left";
  std::size_t alpha = 4;
  std::size_t t = 4;
  std::size_t rows = 4;
  std::size_t cols = 6;
  std::uint64_t seed = 0;
  std::string kind = "real";
  std::string expansion = "vertical";
  std::vector<double> diag;
  std::size_t k = 1;
  std::size_t s = 0;
  std::size_t n = 1;
  std::size_t m = 5;
  std::size_t layer = 0;
  std::size_t signal_dim = 0;
  std::size_t rip_k = 0;
  bool class_mode = false;
  bool orthonormal = false;
  std::string mode = "blockwise";
  std::string solver = "exhaustive";
  double tol = 1e-8;
  std::string golden_dir = STPCS_DEFAULT_GOLDEN_DIR;
};

void build(CLI::App& app, State& st, std::function<int()>& action, std::ostream& out, std::ostream& err) {
  auto on = [&action](std::function<int()> f) { return [&action, f] { action = f; }; };
  auto out_opt = [&st](CLI::App* c) { c->add_option("-o,--output", st.output, "Output file (stdout if omitted)"); };

  auto* gen = app.add_subcommand("gen", "Generate matrices");
  gen->require_subcommand(1);
  auto* bibd = gen->add_subcommand("bibd", "Expanded BIBD incidence matrix");
  bibd->add_option("--alpha", st.alpha, "Number of points")->required()->check(CLI::Range(3, 1000));
  bibd->add_option("--expansion", st.expansion, "vertical, star or none")
      ->check(CLI::IsMember({"vertical", "star", "none"}));
  out_opt(bibd);
  bibd->callback(on([&] {
    const BooleanMatrix h = st.expansion == "star"       ? vertical_expand_star(st.alpha)
                            : st.expansion == "vertical" ? vertical_expand(incidence_matrix(st.alpha))
                                                         : incidence_matrix(st.alpha);
    emit_matrix(out, st.output,
                named("bibd", h.matrix(), {{"alpha", std::to_string(st.alpha)}, {"expansion", st.expansion}}));
    return 0;
  }));
  auto* inc = gen->add_subcommand("incidence", "Anti-diagonal-free incidence matrix");
  inc->add_option("--alpha", st.alpha, "Number of points")->required()->check(CLI::Range(3, 1000));
  out_opt(inc);
  inc->callback(on([&] {
    emit_matrix(out, st.output,
                named("incidence", incidence_matrix(st.alpha).matrix(), {{"alpha", std::to_string(st.alpha)}}));
    return 0;
  }));
  auto* gocm = gen->add_subcommand("ocm", "Largest orthogonal column matrix with t rows");
  gocm->add_option("-t,--t", st.t, "Row count")->required()->check(CLI::PositiveNumber);
  out_opt(gocm);
  gocm->callback(on([&] {
    emit_matrix(out, st.output, named("ocm", ocm(st.t).matrix(), {{"t", std::to_string(st.t)}}));
    return 0;
  }));
  auto* gaocm = gen->add_subcommand("aocm", "Almost orthogonal column matrix with t rows");
  gaocm->add_option("-t,--t", st.t, "Row count")->required()->check(CLI::PositiveNumber);
  out_opt(gaocm);
  gaocm->callback(on([&] {
    emit_matrix(out, st.output, named("aocm", aocm(st.t).matrix(), {{"t", std::to_string(st.t)}}));
    return 0;
  }));
  auto* rnd = gen->add_subcommand("random", "Seeded random matrix");
  rnd->add_option("--rows", st.rows, "Rows")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--cols", st.cols, "Columns")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--seed", st.seed, "Seed")->required();
  rnd->add_option("--kind", st.kind, "real, sign or boolean")->check(CLI::IsMember({"real", "sign", "boolean"}));
  out_opt(rnd);
  rnd->callback(on([&] {
    const auto kind = io::parse_kind(st.kind);
    io::MatrixFile f{"random", kind, random_matrix(st.rows, st.cols, st.seed, kind),
                     {{"seed", std::to_string(st.seed)}, {"kind", st.kind}}};
    emit_matrix(out, st.output, std::move(f));
    return 0;
  }));

  auto* expand = app.add_subcommand("expand", "Vertical and horizontal expansions");
  expand->require_subcommand(1);
  auto* ev = expand->add_subcommand("vertical", "Greedy vertical expansion of an incidence matrix");
  ev->add_option("-i,--input", st.input, "Incidence matrix file")->required();
  out_opt(ev);
  ev->callback(on([&] {
    const BooleanMatrix h(io::load_matrix(st.input).matrix);
    emit_matrix(out, st.output, named("vertical", vertical_expand(h).matrix(), {{"input", st.input}}));
    return 0;
  }));
  auto* es = expand->add_subcommand("star", "Stacked-block vertical expansion");
  es->add_option("--alpha", st.alpha, "Number of points")->required()->check(CLI::Range(3, 1000));
  out_opt(es);
  es->callback(on([&] {
    emit_matrix(out, st.output,
                named("star", vertical_expand_star(st.alpha).matrix(), {{"alpha", std::to_string(st.alpha)}}));
    return 0;
  }));
  auto* eh = expand->add_subcommand("horizontal", "Replace the 1s of each column by embedding rows");
  eh->add_option("-i,--input", st.input, "Expanded incidence matrix")->required();
  eh->add_option("-b,--embedding", st.second_input, "Sign matrix file")->required();
  eh->add_option("--diag", st.diag, "Distinct positive column scales")->delimiter(',');
  out_opt(eh);
  eh->callback(on([&] {
    const BooleanMatrix h(io::load_matrix(st.input).matrix);
    SignMatrix b(io::load_matrix(st.second_input).matrix);
    const DenseMatrix phi = st.diag.empty() ? horizontal_expand(h, b)
                                            : horizontal_expand(h, make_embedding(std::move(b), st.diag));
    emit_matrix(out, st.output, named("horizontal", phi, {{"input", st.input}, {"embedding", st.second_input}}));
    return 0;
  }));

  auto* met = app.add_subcommand("metrics", "Coherence, Welch bound, spark, sparsity bound and RIP");
  met->add_option("-i,--input", st.input, "Matrix file")->required();
  met->add_option("--rip-k", st.rip_k, "Also compute the RIP constant of this order");
  met->add_flag("--class", st.class_mode, "Reduce to the irreducible atom first");
  met->add_option("--side", st.side, "left or right (with --class)");
  out_opt(met);
  met->callback(on([&] {
    const DenseMatrix a = io::load_matrix(st.input).matrix;
    MetricsOptions opts;
    opts.budget = enumeration_budget();
    if (st.rip_k > 0) opts.rip_k = st.rip_k;
    const CsReport r = st.class_mode ? class_metrics(a, side_of(st.side), opts) : metrics(a, opts);
    emit_text(out, st.output, io::report_json(r));
    return 0;
  }));

  auto* bas = app.add_subcommand("basis", "Signal-space basis elements");
  bas->add_option("-m,--max-dim", st.m, "Largest layer")->check(CLI::PositiveNumber);
  bas->add_option("--layer", st.layer, "Print only this layer");
  bas->add_flag("--orthonormal", st.orthonormal, "Gram-Schmidt the elements up to --max-dim");
  bas->add_option("--side", st.side, "left or right (orthonormal only)");
  out_opt(bas);
  bas->callback(on([&, bas] {
    json doc;
    if (st.layer > 0) {
      doc["generating"] = json::array();
      for (const auto& e : generating_layer(st.layer)) doc["generating"].push_back(element_json(e));
      doc["layer"] = json::array();
      for (const auto& e : basis_layer(st.layer)) doc["layer"].push_back(element_json(e));
    } else if (st.orthonormal) {
      const auto b = orthonormal_basis(st.m, side_of(bas->count("--side") ? st.side : "right"));
      doc["side"] = std::string(to_string(b.side));
      doc["elements"] = json::array();
      for (std::size_t i = 0; i < b.count(); ++i)
        doc["elements"].push_back({{"source", element_json(b.sources[i])}, {"value", b.elements[i].vector()}});
    } else {
      doc["elements"] = json::array();
      for (const auto& e : basis_up_to(st.m)) doc["elements"].push_back(element_json(e));
    }
    emit_text(out, st.output, doc.dump(2));
    return 0;
  }));

  auto* proj = app.add_subcommand("project", "Closest point of R^n to a signal");
  proj->add_option("-x,--signal", st.input, "Signal file")->required();
  proj->add_option("-n,--dim", st.n, "Target dimension")->required()->check(CLI::PositiveNumber);
  proj->add_option("--side", st.side, "left or right");
  out_opt(proj);
  proj->callback(on([&] {
    emit_signal(out, st.output, project(io::load_signal(st.input), st.n, side_of(st.side)));
    return 0;
  }));

  auto* comp = app.add_subcommand("compress", "Semi-tensor measurement y = A x");
  comp->add_option("-A,--matrix", st.input, "Sensing matrix file")->required();
  comp->add_option("-x,--signal", st.second_input, "Signal file")->required();
  comp->add_option("--side", st.side, "left or right");
  out_opt(comp);
  comp->callback(on([&] {
    const DenseMatrix a = io::load_matrix(st.input).matrix;
    emit_signal(out, st.output, compress(a, io::load_signal(st.second_input), side_of(st.side)));
    return 0;
  }));

  auto* rec = app.add_subcommand("recover", "Exact sparse recovery");
  rec->add_option("-A,--matrix", st.input, "Sensing matrix file")->required();
  rec->add_option("-y,--measurement", st.second_input, "Measurement file")->required();
  rec->add_option("-k,--k", st.k, "Nonzeros per block")->required();
  rec->add_option("-s,--lift", st.s, "Lift factor (inferred from the dimensions if omitted)");
  rec->add_option("--side", st.side, "left or right");
  rec->add_option("--signal-dim", st.signal_dim, "Dimension of the unlifted signal");
  rec->add_option("--mode", st.mode, "blockwise or global")->check(CLI::IsMember({"blockwise", "global"}));
  rec->add_option("--solver", st.solver, "exhaustive or omp")->check(CLI::IsMember({"exhaustive", "omp"}));
  rec->add_option("--tol", st.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  out_opt(rec);
  rec->callback(on([&] {
    const DenseMatrix a = io::load_matrix(st.input).matrix;
    const Signal y = io::load_signal(st.second_input);
    std::size_t s = st.s;
    if (s == 0) {
      if (y.dim() % a.rows() != 0) {
        throw Error(ErrorCode::BadShape, "measurement dimension is not a multiple of the row count");
      }
      s = y.dim() / a.rows();
    }
    SparsitySpec spec{a.cols(), st.k,
                      st.mode == "global" ? SparsitySpec::Mode::Global : SparsitySpec::Mode::Blockwise};
    RecoveryOptions opts;
    opts.residual_tol = st.tol;
    opts.budget = enumeration_budget();
    opts.solver = st.solver == "omp" ? RecoveryOptions::Solver::Omp : RecoveryOptions::Solver::Exhaustive;
    if (st.signal_dim > 0) opts.signal_dim = st.signal_dim;
    emit_signal(out, st.output, recover(a, s, y, spec, side_of(st.side), opts));
    return 0;
  }));

  auto* gold = app.add_subcommand("golden", "Rebuild the worked examples and diff them against golden files");
  gold->add_option("--dir", st.golden_dir, "Golden file directory");
  gold->callback(on([&] {
    int failures = 0;
    for (const auto& r : check_golden(st.golden_dir)) {
      out << (r.ok ? "ok       " : "MISMATCH ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << '\n';
      failures += r.ok ? 0 : 1;
    }
    if (failures > 0) {
      err << json{{"error", "GoldenMismatch"}, {"message", std::to_string(failures) + " example(s) differ"}}.dump()
          << '\n';
      return 1;
    }
    return 0;
  }));
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-tensor compressed sensing toolkit", "stpcs"};
  app.require_subcommand(1);
  State st;
  std::function<int()> action;
  build(app, st, action, out, err);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const Error& e) {
    err << json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace stpcs::cli
