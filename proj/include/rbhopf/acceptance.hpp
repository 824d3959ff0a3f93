#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbhopf::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // empty when everything held
};

/// Runs the whole acceptance suite on the built-in fixtures.
std::vector<CriterionResult> run_all();

/// Prints one pass/fail line per criterion; returns 0 iff all pass.
int run_and_print(std::ostream& os);

}  // namespace rbhopf::acceptance
