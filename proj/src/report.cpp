#include "wam/report.hpp"

#include <cmath>
#include <cstdio>

namespace wam {
namespace {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return number(v);
}

}  // namespace

Check make_check(std::string id, double computed, double reference, Provenance provenance,
                 double tol, CheckMode mode) {
  bool pass = false;
  const double diff = std::abs(computed - reference);
  switch (mode) {
    case CheckMode::abs: pass = diff <= tol; break;
    case CheckMode::rel: pass = diff <= tol * std::abs(reference); break;
    case CheckMode::at_most: pass = computed <= reference + tol; break;
    case CheckMode::at_least: pass = computed >= reference - tol; break;
    case CheckMode::finite: pass = std::isfinite(computed); break;
  }
  return {std::move(id), computed, reference, provenance, tol, mode, pass};
}

bool ExperimentReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* ExperimentReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::paper: return "PAPER";
    case Provenance::trivial: return "TRIVIAL";
    case Provenance::derived: return "DERIVED";
  }
  return "";
}

std::string to_string(CheckMode m) {
  switch (m) {
    case CheckMode::abs: return "abs";
    case CheckMode::rel: return "rel";
    case CheckMode::at_most: return "at_most";
    case CheckMode::at_least: return "at_least";
    case CheckMode::finite: return "finite";
  }
  return "";
}

nlohmann::ordered_json to_json(const ExperimentReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id},
                      {"computed", json_number(c.computed)},
                      {"reference", json_number(c.reference)},
                      {"provenance", to_string(c.provenance)},
                      {"tol", json_number(c.tol)},
                      {"mode", to_string(c.mode)},
                      {"pass", c.pass}});
  }
  return {{"name", r.name},
          {"params", r.params},
          {"checks", checks},
          {"diagnostics", r.diagnostics},
          {"pass", r.pass()}};
}

std::string to_csv(const ExperimentReport& r) {
  std::string out = "experiment,id,computed,reference,provenance,tol,mode,pass\r\n";
  for (const auto& c : r.checks) {
    out += csv_field(r.name) + ',' + csv_field(c.id) + ',' + number(c.computed) + ',' +
           number(c.reference) + ',' + to_string(c.provenance) + ',' + number(c.tol) + ',' +
           to_string(c.mode) + ',' + (c.pass ? "true" : "false") + "\r\n";
  }
  return out;
}

std::string verdict_lines(const ExperimentReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.id + " computed=" + number(c.computed);
    if (c.mode != CheckMode::finite) out += " reference=" + number(c.reference);
    out += " [" + to_string(c.provenance) + "]\n";
  }
  return out;
}

}  // namespace wam
