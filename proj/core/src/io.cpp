#include "stpcs/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "stpcs/errors.hpp"

namespace stpcs::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at == std::string_view::npos ? at : at - start)));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

double parse_double(std::string_view s, std::size_t line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": '" + std::string(s) +
                                           "' is not a number");
  }
  return v;
}

std::size_t parse_size(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": bad dimension '" +
                                           std::string(s) + "'");
  }
  return v;
}

void check_kind(const DenseMatrix& m, MatrixKind kind) {
  if (kind == MatrixKind::Real) return;
  for (double v : m.data()) {
    const bool ok = kind == MatrixKind::Boolean ? (v == 0.0 || v == 1.0) : (v == 1.0 || v == -1.0);
    if (!ok) {
      throw Error(ErrorCode::ParseError, "entry " + format_double(v) + " violates kind " +
                                             std::string(to_string(kind)));
    }
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  return in;
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Boolean:
      return "boolean";
    case MatrixKind::Sign:
      return "sign";
    case MatrixKind::Real:
      break;
  }
  return "real";
}

MatrixKind parse_kind(std::string_view text) {
  if (text == "real") return MatrixKind::Real;
  if (text == "boolean") return MatrixKind::Boolean;
  if (text == "sign") return MatrixKind::Sign;
  throw Error(ErrorCode::ParseError, "unknown matrix kind '" + std::string(text) + "'");
}

MatrixKind infer_kind(const DenseMatrix& m) {
  bool boolean = true, sign = true;
  for (double v : m.data()) {
    boolean = boolean && (v == 0.0 || v == 1.0);
    sign = sign && (v == 1.0 || v == -1.0);
  }
  if (boolean) return MatrixKind::Boolean;
  if (sign) return MatrixKind::Sign;
  return MatrixKind::Real;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m, MatrixKind kind) {
  out << "# " << m.rows() << ',' << m.cols() << ',' << to_string(kind) << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << format_double(m(i, j));
    out << '\n';
  }
}

MatrixFile read_matrix_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t rows = 0, cols = 0;
  MatrixKind kind = MatrixKind::Real;
  bool have_header = false;
  std::vector<double> entries;
  std::size_t seen_rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!have_header) {
      if (text.front() != '#') throw Error(ErrorCode::ParseError, "missing '# rows,cols,kind' header");
      const auto fields = split(trim(text.substr(1)), ',');
      if (fields.size() != 3) throw Error(ErrorCode::ParseError, "header needs rows,cols,kind");
      rows = parse_size(fields[0], lineno);
      cols = parse_size(fields[1], lineno);
      kind = parse_kind(fields[2]);
      have_header = true;
      continue;
    }
    if (text.front() == '#') continue;
    const auto fields = split(text, ',');
    if (fields.size() != cols) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + " has " +
                                             std::to_string(fields.size()) + " fields, expected " +
                                             std::to_string(cols));
    }
    for (auto f : fields) entries.push_back(parse_double(f, lineno));
    ++seen_rows;
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "empty matrix file");
  if (seen_rows != rows) {
    throw Error(ErrorCode::ParseError, "found " + std::to_string(seen_rows) + " rows, header says " +
                                           std::to_string(rows));
  }
  MatrixFile file;
  file.kind = kind;
  try {
    file.matrix = DenseMatrix(rows, cols, std::move(entries));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  check_kind(file.matrix, kind);
  return file;
}

void write_matrix_json(std::ostream& out, const MatrixFile& file) {
  json data = json::array();
  for (std::size_t i = 0; i < file.matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < file.matrix.cols(); ++j) row.push_back(file.matrix(i, j));
    data.push_back(std::move(row));
  }
  json doc{{"name", file.name},
           {"kind", to_string(file.kind)},
           {"rows", file.matrix.rows()},
           {"cols", file.matrix.cols()},
           {"data", std::move(data)},
           {"provenance", file.provenance}};
  out << doc.dump(2) << '\n';
}

MatrixFile read_matrix_json(std::istream& in) {
  MatrixFile file;
  try {
    const json doc = json::parse(in);
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    std::vector<double> entries;
    const auto& data = doc.at("data");
    if (data.size() != rows) throw Error(ErrorCode::ParseError, "row count does not match 'rows'");
    for (const auto& row : data) {
      if (row.size() != cols) throw Error(ErrorCode::ParseError, "row length does not match 'cols'");
      for (const auto& v : row) entries.push_back(v.get<double>());
    }
    file.name = doc.value("name", "");
    file.kind = parse_kind(doc.value("kind", "real"));
    if (doc.contains("provenance")) file.provenance = doc.at("provenance").get<std::map<std::string, std::string>>();
    file.matrix = DenseMatrix(rows, cols, std::move(entries));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
  check_kind(file.matrix, file.kind);
  return file;
}

void save_matrix(const std::filesystem::path& path, const MatrixFile& file) {
  auto out = open_out(path);
  if (path.extension() == ".json") {
    write_matrix_json(out, file);
  } else {
    write_matrix_csv(out, file.matrix, file.kind);
  }
}

MatrixFile load_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  MatrixFile file = path.extension() == ".json" ? read_matrix_json(in) : read_matrix_csv(in);
  if (file.name.empty()) file.name = path.stem().string();
  return file;
}

void write_signal_csv(std::ostream& out, const Signal& x) {
  write_matrix_csv(out, DenseMatrix::column(x.entries()), MatrixKind::Real);
}

Signal read_signal_csv(std::istream& in) {
  const MatrixFile file = read_matrix_csv(in);
  if (file.matrix.cols() != 1) throw Error(ErrorCode::ParseError, "a signal file has one column");
  return Signal(file.matrix.col(0));
}

void save_signal(const std::filesystem::path& path, const Signal& x) {
  auto out = open_out(path);
  write_signal_csv(out, x);
}

Signal load_signal(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_signal_csv(in);
}

std::string report_json(const CsReport& report, int indent) {
  json doc{{"coherence", report.coherence}, {"signed_coherence", report.signed_coherence}};
  doc["welch_bound"] = report.welch_bound ? json(*report.welch_bound) : json(nullptr);
  doc["spark"] = report.spark.infinite ? json(nullptr) : json(report.spark.value);
  doc["spark_infinite"] = report.spark.infinite;
  doc["max_k"] = report.max_k;
  if (report.rip) doc["rip"] = {{"k", report.rip->k}, {"delta", report.rip->delta}};
  return doc.dump(indent);
}

}  // namespace stpcs::io
