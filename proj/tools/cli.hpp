#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stpcs::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on usage errors and 1 on domain errors; the latter print a JSON object
/// {"error": <code name>, "message": ...} to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stpcs::cli
