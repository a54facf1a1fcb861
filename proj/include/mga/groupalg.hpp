#pragma once

// The group algebra SG over a finite local coefficient ring: element
// arithmetic, augmentation structure, the relative augmentation ideal
// Theta = Delta(SG : n) and its powers, base change to the residue field,
// and centrality tests.
//
// Elements are dense coefficient vectors flattened over Z/mZ: the block
// [g*e, (g+1)*e) holds the RingElem coefficient of the group element with
// index g.  That flattening is exactly the layout the Howell engine sees,
// so ideal computations need no conversion.

#include <cstdint>
#include <vector>

#include "mga/coefring.hpp"
#include "mga/howell.hpp"
#include "mga/pcgroup.hpp"

namespace mga {

class GroupAlgebra;

struct AlgebraElement {
  const GroupAlgebra* alg = nullptr;
  ModVec v;  // length |G| * e

  bool operator==(const AlgebraElement& other) const { return v == other.v; }
  bool isZero() const {
    for (auto x : v)
      if (x) return false;
    return true;
  }
};

class GroupAlgebra {
 public:
  GroupAlgebra(CoefRing ring, const PcGroup& grp);

  const CoefRing& ring() const { return ring_; }
  const PcGroup& group() const { return *grp_; }
  std::size_t dim() const { return dim_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(ElemIdx g) const;         // the group element g
  AlgebraElement groupMinusOne(ElemIdx g) const; // g - 1
  AlgebraElement scalarElem(const RingElem& s) const;

  RingElem coeffAt(const AlgebraElement& x, ElemIdx g) const;
  void setCoeff(AlgebraElement& x, ElemIdx g, const RingElem& c) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement neg(const AlgebraElement& x) const;
  AlgebraElement scale(const RingElem& s, const AlgebraElement& x) const;
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement power(const AlgebraElement& x, unsigned k) const;
  AlgebraElement lieCommutator(const AlgebraElement& x, const AlgebraElement& y) const;

  // inverse of 1 + x for x with nilpotent support; exact Neumann series
  AlgebraElement inverseOnePlusNilpotent(const AlgebraElement& x) const;

  RingElem augmentation(const AlgebraElement& x) const;

  bool isCentral(const AlgebraElement& x) const;
  // S-span of conjugacy class sums = Z(SG) as a module
  HowellModule centralSubmodule() const;

  // Delta(SG) as a module over Z/mZ
  HowellModule deltaModule() const;
  // Ker(SG -> FG) = n * SG
  HowellModule kernelOfResidueMap() const;

  bool sameAlgebra(const GroupAlgebra& other) const {
    return grp_ == other.grp_ && ring_ == other.ring_;
  }

 private:
  CoefRing ring_;
  const PcGroup* grp_;
  std::size_t dim_;

  void requireSame(const AlgebraElement& x, const AlgebraElement& y) const;
};

// Theta^0 (= SG) through Theta^K for Theta = Delta(SG : n), n from the ring
// (deltaPowers uses the zero ideal instead, giving Delta(SG)^k).
class IdealFiltration {
 public:
  IdealFiltration(const GroupAlgebra& alg, std::vector<HowellModule> powers);

  const GroupAlgebra& algebra() const { return *alg_; }
  unsigned depth() const { return static_cast<unsigned>(powers_.size() - 1); }
  const HowellModule& at(unsigned k) const;
  bool memberAt(const AlgebraElement& x, unsigned k) const;

 private:
  const GroupAlgebra* alg_;
  std::vector<HowellModule> powers_;
};

IdealFiltration thetaPowers(const GroupAlgebra& alg, unsigned maxExponent);
IdealFiltration deltaPowers(const GroupAlgebra& alg, unsigned maxExponent);
// extend Delta powers until the zero module (p-group nilpotency), capped
IdealFiltration deltaPowersUntilZero(const GroupAlgebra& alg, unsigned cap = 64);

// the algebra map pi-hat: SG -> FG induced by S -> S/n, with FG realized
// over an explicit CoefRing isomorphic to the residue field
class ResidueAlgebraMap {
 public:
  explicit ResidueAlgebraMap(const GroupAlgebra& src);

  const GroupAlgebra& source() const { return *src_; }
  const GroupAlgebra& target() const { return target_; }
  const ResidueField& field() const { return field_; }

  AlgebraElement apply(const AlgebraElement& x) const;
  // lift a target module back: Howell span of row lifts plus Ker pi-hat
  HowellModule preimage(const HowellModule& sub) const;

 private:
  const GroupAlgebra* src_;
  ResidueField field_;
  ResidueField::AsRing asRing_;
  GroupAlgebra target_;
};

// algebra surjection SG -> S(G/N) (or along any group homomorphism given by
// its element map); coefficients of a fiber are summed
AlgebraElement pushForward(const GroupAlgebra& src, const GroupAlgebra& dst,
                           const std::vector<ElemIdx>& elementMap, const AlgebraElement& x);

}  // namespace mga
