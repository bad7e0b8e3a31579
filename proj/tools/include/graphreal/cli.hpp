#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphreal/error.hpp"
#include "graphreal/fixtures.hpp"

namespace graphreal::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kGuard = 3 };

/// Runs one command line (without the program name). The JSON report goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FixtureCheck {
  std::string key;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  std::string provenance;
  bool ok = false;
  /// How `actual` was obtained.
  std::string method;
};

/// Recomputes every checkable expected value of `f`.
std::vector<FixtureCheck> check_fixture(const Fixture& f, const Guards& guards);

/// Writes code.json, graph.json, omega.json, vctree.json (when present) and
/// fixture.json into dir/<name>/. Returns the files written.
std::vector<std::filesystem::path> write_fixture(const Fixture& f, const std::filesystem::path& dir);

}  // namespace graphreal::cli
