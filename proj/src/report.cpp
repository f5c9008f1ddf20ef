#include "nchopf/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "nchopf/error.hpp"

namespace nchopf {

CheckRecord CheckRecord::make(std::string suite, std::string name, Json params, double residual, double tol,
                              Direction direction) {
  CheckRecord r{std::move(suite), std::move(name), std::move(params), residual, tol, direction, false};
  // NaN compares false both ways, so it always fails.
  r.pass = direction == Direction::below ? residual < tol : residual > tol;
  return r;
}

Json CheckRecord::to_json() const {
  Json j;
  j["suite"] = suite;
  j["name"] = name;
  j["params"] = params;
  j["residual"] = std::isfinite(residual) ? Json(residual) : Json(format_double(residual));
  j["tol"] = tol;
  j["direction"] = direction == Direction::below ? "below" : "above";
  j["pass"] = pass;
  return j;
}

Summary ReportDocument::summary() const {
  Summary s;
  s.total = checks.size();
  for (const auto& c : checks) (c.pass ? s.passed : s.failed) += 1;
  return s;
}

Json ReportDocument::to_json(bool with_timestamp) const {
  Json j;
  j["version"] = version;
  if (with_timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    j["timestamp"] = buf;
  }
  j["seed"] = seed;
  j["config"] = config;
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  j["checks"] = std::move(arr);
  const Summary s = summary();
  j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return j;
}

std::string ReportDocument::to_csv() const {
  std::string out = "suite,name,params,residual,tol,direction,pass\n";
  for (const auto& c : checks) {
    std::string params = c.params.dump();
    std::string quoted = "\"";
    for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    quoted += '"';
    out += c.suite + ',' + c.name + ',' + quoted + ',' + format_double(c.residual) + ',' + format_double(c.tol) +
           ',' + (c.direction == Direction::below ? "below" : "above") + ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::IOFailure, "cannot open " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw Error(ErrorKind::IOFailure, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::IOFailure, "cannot move output into " + path.string());
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace nchopf
