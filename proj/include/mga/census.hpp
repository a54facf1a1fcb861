#pragma once

// Conjugacy classes of cyclic subgroups, the closed count for abelian
// p-groups of rank at most three, the |CS(H)| - |CS(G)| comparison, the
// normality characterization inside the maximal abelian subgroup, and
// Wedderburn component counts for the rational and complex group algebras.

#include <string>
#include <vector>

#include "mga/pcgroup.hpp"

namespace mga {

struct CensusResult {
  std::string groupId;
  unsigned long long csCount = 0;       // |CS(Gamma)|
  unsigned long long classCount = 0;    // element conjugacy classes
  unsigned long long rationalComponents = 0;  // = csCount
  unsigned long long complexComponents = 0;   // = classCount
  bool degreeProfileKnown = false;      // requires an abelian maximal subgroup
  unsigned long long degreeOneCount = 0;
  unsigned long long degreeTwoCount = 0;
};

// brute force: enumerate cyclic subgroups, partition into conjugacy orbits;
// cross-checked internally against the weighted sum
//   sum_g 1 / (|Gamma : N_Gamma(<g>)| * phi(|g|))
// computed in exact rational arithmetic
unsigned long long countCyclicSubgroupClasses(const PcGroup& gamma);

// |CS(C_{p^n} x C_{p^m} x C_{p^l})| for n >= m >= l >= 0
unsigned long long tothClosedForm(unsigned p, unsigned n, unsigned m, unsigned l);

struct CsDifference {
  unsigned long long csG = 0, csH = 0;
  long long brute = 0;    // csH - csG by enumeration
  long long formula = 0;  // (n-m) 2^{m-1} (2^{l-1} - 1)
  bool agree = false;
};
CsDifference csDifference(unsigned n, unsigned m, unsigned l);

struct NormalityReport {
  std::string groupId;
  std::size_t cyclicSubgroupsChecked = 0;
  bool holds = false;  // K normal <=> K <= Z or K <= Omega(Gamma : Gamma')
  std::string witness;
};
// exhaustive over every cyclic subgroup of C_Gamma(Gamma')
NormalityReport normalityCharacterization(const PcGroup& gamma);

CensusResult wedderburnCounts(const PcGroup& gamma);

}  // namespace mga
