#pragma once

// Machine verification that SG and SH are non-isomorphic over a suitable
// characteristic-4 local ring: instantiate the common hypotheses, check every
// congruence by Theta-power membership in SH, reduce the two negative facts
// to the cyclic and dihedral closed forms, and confirm that the resulting
// scalar system has only the trivial solution.

#include <memory>
#include <string>
#include <vector>

#include "mga/coefring.hpp"
#include "mga/filtration.hpp"
#include "mga/groupalg.hpp"
#include "mga/pcgroup.hpp"

namespace mga {

struct CongruenceReport {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string witness;
};

class HypothesisInstance {
 public:
  // requires n > m > l >= 2 and a ring with: char 4, n maximal, 2 in n,
  // 2 not in n^2 (throws BadParameters / RingUnsuitable)
  HypothesisInstance(unsigned n, unsigned m, unsigned l, const CoefRing& s);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  unsigned l() const { return l_; }
  const CoefRing& ring() const { return s_; }
  const ResidueField& field() const { return f_; }
  const PcGroup& groupG() const { return *g_; }
  const PcGroup& groupH() const { return *h_; }
  const GroupAlgebra& algSH() const { return *sh_; }
  const GroupAlgebra& algSG() const { return *sg_; }
  const IdealFiltration& theta() const { return *theta_; }
  unsigned thetaDepth() const { return 1 + (2u << m_); }  // 1 + 2^{m+1}

  const AlgebraElement& A() const { return aMinus1_; }
  const AlgebraElement& B() const { return bMinus1_; }
  const AlgebraElement& C() const { return cMinus1_; }
  const AlgebraElement& Y() const { return yMinus1_; }

 private:
  unsigned n_, m_, l_;
  CoefRing s_;
  ResidueField f_;
  std::unique_ptr<PcGroup> g_, h_;
  std::unique_ptr<GroupAlgebra> sh_, sg_;
  std::unique_ptr<IdealFiltration> theta_;
  AlgebraElement aMinus1_, bMinus1_, cMinus1_, yMinus1_;
};

inline const std::vector<std::string>& lemmaIds() {
  static const std::vector<std::string> ids{"x2y2",  "ThetaModTheta2", "commBA", "square",
                                            "commCACB", "modZSH",      "fourth", "power",
                                            "A2m+1", "2C"};
  return ids;
}

CongruenceReport verifyLemma(const HypothesisInstance& inst, const std::string& lemmaId);
std::vector<CongruenceReport> verifyQuotientReductions(const HypothesisInstance& inst);

// all (alpha, beta) in F^2 with alpha + beta = 0, beta + beta^2 + alpha beta = 0,
// alpha + alpha^2 + alpha beta = 0
std::vector<std::pair<unsigned, unsigned>> solveFinalSystem(const ResidueField& f);

struct VerificationReport {
  std::vector<CongruenceReport> items;
  bool certified = false;
};

VerificationReport verifyCounterexample(unsigned n, unsigned m, unsigned l, const CoefRing& s);

}  // namespace mga
