#include "cindkit/report.h"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace cindkit {

bool RunReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["config"] = config;
  doc["started"] = started;
  doc["elapsed_ms"] = elapsed_ms;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["id"] = c.id;
    row["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.is_null()) row["witness"] = c.witness;
    arr.push_back(std::move(row));
  }
  doc["checks"] = std::move(arr);
  doc["summary"] = summary;
  return doc;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string RunReport::to_csv() const {
  std::string out = "id,status,witness\n";
  for (const auto& c : checks) {
    out += csv_field(c.id);
    out += ',';
    out += c.pass ? "pass" : "fail";
    out += ',';
    if (!c.witness.is_null())
      out += csv_field(c.witness.is_string() ? c.witness.get<std::string>() : c.witness.dump());
    out += '\n';
  }
  return out;
}

std::string iso_timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string render_report(const RunReport& rep, const std::string& format) {
  if (format == "json") return rep.to_json().dump(2) + "\n";
  if (format == "csv") return rep.to_csv();
  throw std::invalid_argument("unknown report format: " + format);
}

Json strip_volatile(Json doc) {
  if (doc.is_object()) {
    doc.erase("started");
    doc.erase("elapsed_ms");
    for (auto& el : doc.items()) el.value() = strip_volatile(el.value());
  } else if (doc.is_array()) {
    for (auto& v : doc) v = strip_volatile(v);
  }
  return doc;
}

}  // namespace cindkit
