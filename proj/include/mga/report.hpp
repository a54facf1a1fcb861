#pragma once

// Structured run reports: deterministic JSON/CSV bodies with an optional
// metadata header.  Timings are opt-in so that identical configurations
// produce byte-identical bodies.

#include <string>
#include <vector>

#include "mga/obstruction.hpp"

namespace mga {

struct Report {
  std::string verdict;  // "PASS", "FAIL" or "CERTIFIED"
  std::vector<CongruenceReport> items;
  std::vector<double> timingsMs;  // parallel to items when timing is enabled

  bool allPass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

struct ReportOptions {
  bool includeMeta = true;
  bool includeTimings = false;
  std::string tool = "mga";
  std::string version = "1.0.0";
};

std::string toJson(const Report& r, const ReportOptions& opt);
std::string toCsv(const Report& r);

}  // namespace mga
