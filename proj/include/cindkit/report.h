#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace cindkit {

using Json = nlohmann::json;

struct CheckResult {
  std::string id;
  bool pass = true;
  Json witness;  // omitted from the report when null
};

struct RunReport {
  std::string command;
  Json config = Json::object();
  std::string started;  // ISO-8601 UTC; volatile
  long long elapsed_ms = 0;
  std::vector<CheckResult> checks;
  Json summary = Json::object();

  bool all_pass() const;
  Json to_json() const;
  std::string to_csv() const;
};

std::string iso_timestamp_now();

// Render in "json" or "csv", trailing newline included.
std::string render_report(const RunReport& rep, const std::string& format);

// Removes the volatile timing fields (started, elapsed_ms) from every object
// in the document so reports from identical configs compare byte-equal.
Json strip_volatile(Json doc);

}  // namespace cindkit
