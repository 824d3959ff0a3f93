#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace rbhopf {

/// A single counterexample: the basis tuple it was found on and both sides of
/// the identity, rendered as label -> coefficient maps.
struct Violation {
  std::vector<std::string> labels;
  std::map<std::string, std::string> lhs;
  std::map<std::string, std::string> rhs;
};

/// Outcome of checking one identity on a sample of basis tuples. Identities
/// are (multi)linear in basis labels, so an empty violation list verifies the
/// identity on the whole subspace the sample spans.
struct Report {
  std::string axiom;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

nlohmann::json report_json(const Report& r);
nlohmann::json reports_json(const std::vector<Report>& rs);
std::string reports_text(const std::vector<Report>& rs);
bool all_ok(const std::vector<Report>& rs);

}  // namespace rbhopf
