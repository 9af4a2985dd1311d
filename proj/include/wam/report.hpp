#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wam {

/// Where a reference value comes from: a closed form stated in the source
/// analysis, a trivial identity, or an independent derivation.
enum class Provenance { paper, trivial, derived };

enum class CheckMode {
  abs,       // |computed - reference| <= tol
  rel,       // |computed - reference| <= tol |reference|
  at_most,   // computed <= reference + tol
  at_least,  // computed >= reference - tol
  finite,    // computed is finite; reference unused
};

struct Check {
  std::string id;
  double computed = 0.0;
  double reference = 0.0;
  Provenance provenance = Provenance::derived;
  double tol = 0.0;
  CheckMode mode = CheckMode::abs;
  bool pass = false;
};

Check make_check(std::string id, double computed, double reference, Provenance provenance,
                 double tol, CheckMode mode);

struct ExperimentReport {
  std::string name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Check> checks;
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();

  void add(Check c) { checks.push_back(std::move(c)); }
  bool pass() const;
  const Check* find(const std::string& id) const;
};

std::string to_string(Provenance p);
std::string to_string(CheckMode m);

/// {name, params, checks:[{id, computed, reference, provenance, tol, mode, pass}],
///  diagnostics, pass}.
nlohmann::ordered_json to_json(const ExperimentReport& r);

/// RFC 4180 table of the checks with a header row; numbers in %.17g.
std::string to_csv(const ExperimentReport& r);

/// One line per check: "PASS id computed=... reference=... [tag]".
std::string verdict_lines(const ExperimentReport& r);

}  // namespace wam
