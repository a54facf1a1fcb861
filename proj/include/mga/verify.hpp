#pragma once

// The full verification suite run by the CLI: every check is a named item;
// ids are stable and filterable ("--only lemma:2C" runs one of them).

#include <string>

#include "mga/report.hpp"

namespace mga {

struct VerifyOptions {
  bool deep = false;      // adds (5,3,2), the extension ring, and the (5,4,2) census
  std::string only;       // substring filter on item ids; empty runs everything
  bool timings = false;
};

Report runVerify(const VerifyOptions& opt);

}  // namespace mga
