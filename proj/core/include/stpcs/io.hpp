#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "stpcs/matrix.hpp"
#include "stpcs/metrics.hpp"

namespace stpcs::io {

enum class MatrixKind { Real, Boolean, Sign };

std::string_view to_string(MatrixKind kind);
MatrixKind parse_kind(std::string_view text);

/// Boolean if every entry is 0/1, Sign if every entry is ±1, Real otherwise.
MatrixKind infer_kind(const DenseMatrix& m);

struct MatrixFile {
  std::string name;
  MatrixKind kind = MatrixKind::Real;
  DenseMatrix matrix{1, 1};
  std::map<std::string, std::string> provenance;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

/// CSV layout: a header line "# rows,cols,kind" followed by one matrix row per
/// line. Reading validates the shape and the kind constraint and throws
/// ParseError on any mismatch.
void write_matrix_csv(std::ostream& out, const DenseMatrix& m, MatrixKind kind);
MatrixFile read_matrix_csv(std::istream& in);

/// JSON layout: {"name", "kind", "rows", "cols", "data": [[...]], "provenance": {...}}.
void write_matrix_json(std::ostream& out, const MatrixFile& file);
MatrixFile read_matrix_json(std::istream& in);

/// Chooses JSON for a .json extension and CSV otherwise.
void save_matrix(const std::filesystem::path& path, const MatrixFile& file);
MatrixFile load_matrix(const std::filesystem::path& path);

/// Signals are single-column real CSVs.
void write_signal_csv(std::ostream& out, const Signal& x);
Signal read_signal_csv(std::istream& in);
void save_signal(const std::filesystem::path& path, const Signal& x);
Signal load_signal(const std::filesystem::path& path);

/// {coherence, signed_coherence, welch_bound|null, spark|null, spark_infinite,
///  max_k, rip: {k, delta}} with rip present only when computed.
std::string report_json(const CsReport& report, int indent = 2);

}  // namespace stpcs::io
