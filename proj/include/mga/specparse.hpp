#pragma once

// Textual specifications accepted by the CLI.
//
// Ring specs:   Zmod:4   Zmod:4[t]/(t^2);n=2,t   Zmod:4[t]/(t^2-2);n=t
// Group specs:  G(4,3,2)  H(4,3,2)  C2^4  D16  or a pc presentation file:
//   gens 3
//   orders 2 2 4
//   pow 1 =
//   conj 1 2 = x2^1 x3^1
// Parse errors carry the offset (or line) they were raised at.

#include <string>

#include "mga/coefring.hpp"
#include "mga/pcgroup.hpp"

namespace mga {

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error(Err::ParseError, what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

CoefRing parseRingSpec(const std::string& spec);

// named families only (no file access here)
PcGroup parseGroupName(const std::string& spec);
// pc presentation text format; lineOffset feeds error positions
PcGroup parsePcPresentation(const std::string& text);

std::string printPcPresentation(const PcPresentation& pres);

}  // namespace mga
