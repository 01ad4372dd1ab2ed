#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace stpcs::cli {

struct GoldenResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Rebuilds every worked example and compares it with the files in dir.
std::vector<GoldenResult> check_golden(const std::filesystem::path& dir);

}  // namespace stpcs::cli
