#include "mildbank/report.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>

namespace mildbank {

bool Report::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

double Report::max_residual() const {
  double m = 0.0;
  for (const CheckResult& c : checks) m = std::max(m, c.residual);
  return m;
}

std::string format_sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string report_json(const Report& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass();
  j["environment"] = {
      {"h", report.h}, {"n", report.n}, {"seed", report.seed},
      {"version", report.version}};
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  if (with_timing)
    j["timing"] = {{"timestamp", report.timestamp},
                   {"wall_ms", report.wall_ms}};
  return j.dump(2) + "\n";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\r\n") != std::string::npos) {
      line += '"';
      for (char ch : f) {
        if (ch == '"') line += '"';
        line += ch;
      }
      line += '"';
    } else {
      line += f;
    }
  }
  return line + "\r\n";
}

std::string report_csv(const Report& report) {
  std::string out = csv_line({"name", "anchor", "residual", "tolerance", "pass"});
  for (const CheckResult& c : report.checks)
    out += csv_line({c.name, c.anchor, format_sig17(c.residual),
                     format_sig17(c.tolerance), c.pass ? "true" : "false"});
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + path);
  f << content;
}

}  // namespace mildbank
