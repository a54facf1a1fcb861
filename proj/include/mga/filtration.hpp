#pragma once

// Closed-form filtrations of Delta(SG : n)^k for the cyclic 2-groups and the
// dihedral group of order 16, Jennings dimension subgroups (product formula
// and membership route), and the relative augmentation quotient dimensions.
//
// Every closed form here is paired with the brute-force ideal powers from
// groupalg; the test suites assert module equality between the two routes.

#include <string>
#include <vector>

#include "mga/coefring.hpp"
#include "mga/groupalg.hpp"
#include "mga/pcgroup.hpp"

namespace mga {

// one direct summand n^a Q or (n^a + 2 n^b) Q of a filtration entry, with the
// convention n^j = S for j <= 0
struct ClosedFormComponent {
  std::string tag;             // monomial label, e.g. "U^3" or "UVW^2"
  std::vector<unsigned> mono;  // cyclic: {i}; dihedral: {s, t, i} with W-exponent i in 0..3
  int aExp = 0;
  bool hasTwoPart = false;
  int bExp = 0;
};

struct ClosedFormEntry {
  unsigned k = 0;
  std::vector<ClosedFormComponent> comps;
};

// entry for Delta(S C_{2^n} : n)^k on the basis U^0..U^{2^n - 1}
ClosedFormEntry cyclicClosedForm(unsigned n, unsigned k);
// entry for Delta(S D16 : n)^k on the 16 monomials U^s V^t W^i (Q and Q W^2)
ClosedFormEntry dihedralClosedForm(unsigned k);

// the component's coefficient ideal as a subset of S
std::vector<RingElem> componentIdeal(const ClosedFormComponent& c, const CoefRing& s);

// concrete submodule of SG; the algebra's group must match the entry's shape
HowellModule materialize(const ClosedFormEntry& e, const GroupAlgebra& alg);

struct JenningsData {
  std::vector<Subgroup> series;         // D_1 = G, D_2, ..., ending at the trivial subgroup
  std::vector<unsigned> gradedLogDims;  // log_p |D_n / D_{n+1}|
};

// product formula D_n = prod_{i p^j >= n} gamma_i(G)^{p^j}
JenningsData jenningsSeries(unsigned p, const PcGroup& g);

// membership route: D_{n,S}(G) = { g : g - 1 in Delta(SG)^n }
Subgroup dimensionSubgroup(const CoefRing& s, const PcGroup& g, unsigned n);
// the whole series at once (single Delta filtration, far cheaper than per-n)
JenningsData dimensionSubgroupsByMembership(const CoefRing& s, const PcGroup& g,
                                            unsigned cap = 64);

struct RelAugReport {
  unsigned long long thetaQuotient = 0;  // |Theta / Theta^2|
  unsigned long long nQuotient = 0;      // |n / n^2|
  unsigned fDim = 0;                     // dim_F Theta/Theta^2
  unsigned nDim = 0;                     // dim_F n/n^2
  unsigned deltaFDim = 0;                // dim_F Delta(FG)/Delta(FG)^2
  bool match = false;                    // fDim == nDim + deltaFDim, sizes consistent
};

RelAugReport relAugQuotientDims(const CoefRing& s, const PcGroup& g);

}  // namespace mga
