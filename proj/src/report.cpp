#include "rbhopf/report.hpp"

#include <sstream>

namespace rbhopf {

nlohmann::json report_json(const Report& r) {
  nlohmann::json out;
  out["axiom"] = r.axiom;
  out["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) {
    nlohmann::json jv;
    jv["labels"] = v.labels;
    jv["lhs"] = v.lhs;
    jv["rhs"] = v.rhs;
    out["violations"].push_back(std::move(jv));
  }
  return out;
}

nlohmann::json reports_json(const std::vector<Report>& rs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rs) out.push_back(report_json(r));
  return out;
}

static std::string side_text(const std::map<std::string, std::string>& side) {
  if (side.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, coeff] : side) {
    if (!first) os << " + ";
    first = false;
    os << coeff << "*" << label;
  }
  return os.str();
}

std::string reports_text(const std::vector<Report>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.ok() ? "PASS" : "FAIL") << " " << r.axiom;
    if (!r.ok()) os << " (" << r.violations.size() << " violations)";
    os << "\n";
    for (const auto& v : r.violations) {
      os << "  at (";
      for (std::size_t i = 0; i < v.labels.size(); ++i) {
        if (i) os << ", ";
        os << v.labels[i];
      }
      os << "): lhs = " << side_text(v.lhs) << "; rhs = " << side_text(v.rhs) << "\n";
    }
  }
  return os.str();
}

bool all_ok(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return false;
  return true;
}

}  // namespace rbhopf
