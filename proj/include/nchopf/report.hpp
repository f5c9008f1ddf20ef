#pragma once

// Verification records and the flat, versioned JSON report built from them.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace nchopf {

inline constexpr const char* kReportVersion = "1.0";

using Json = nlohmann::ordered_json;

/// below: pass iff residual < tol. above: pass iff residual > tol (strict
/// inequalities such as the non-commutative obstruction).
enum class Direction { below, above };

struct CheckRecord {
  std::string suite;
  std::string name;
  Json params = Json::object();
  double residual = 0.0;
  double tol = 0.0;
  Direction direction = Direction::below;
  bool pass = false;

  static CheckRecord make(std::string suite, std::string name, Json params, double residual, double tol,
                          Direction direction = Direction::below);
  Json to_json() const;
};

struct Summary {
  std::size_t total = 0, passed = 0, failed = 0;
};

struct ReportDocument {
  std::string version = kReportVersion;
  std::uint64_t seed = 0;
  Json config = Json::object();
  std::vector<CheckRecord> checks;

  Summary summary() const;
  bool all_pass() const { return summary().failed == 0; }
  /// The timestamp is the only field that differs between identical runs.
  Json to_json(bool with_timestamp = true) const;
  std::string to_csv() const;
};

/// Write-temp-then-rename. Throws IOFailure.
void write_atomic(const std::filesystem::path& path, const std::string& text);

/// Shortest round-trip text for a double (17 significant digits).
std::string format_double(double v);

}  // namespace nchopf
