#pragma once

// Exact arithmetic in finite local coefficient rings S = Z/mZ[t]/(g(t)) with
// a designated ideal n, their residue fields F = S/n, and p-adic valuation
// utilities.  All validation flags are computed by exhaustive enumeration;
// the rings in play have at most a few hundred elements.

#include <cstdint>
#include <string>
#include <vector>

#include "mga/error.hpp"

namespace mga {

// polynomial over Z, coefficients low degree first
using Poly = std::vector<long long>;

// element of S as a coefficient vector of length e = deg g, basis 1, t, ..., t^{e-1}
struct RingElem {
  std::vector<std::uint8_t> c;

  bool operator==(const RingElem&) const = default;
  bool isZero() const {
    for (auto x : c)
      if (x) return false;
    return true;
  }
};

class ResidueField;

class CoefRing {
 public:
  struct Flags {
    bool idealIsMaximal = false;   // S/n has no zero divisors, nonzero cosets invertible
    unsigned quotientChar = 0;     // additive order of 1 + n in S/n
    bool twoInIdeal = false;       // 2 in n
    bool twoInIdealSquared = false;  // 2 in n^2
  };

  // g must be monic; m >= 2.  idealGens given as polynomials in t.
  static CoefRing make(unsigned modulus, Poly reducer, std::vector<Poly> idealGens);

  unsigned modulus() const { return m_; }
  unsigned degree() const { return e_; }  // e = deg g
  std::size_t size() const { return size_; }
  const Flags& flags() const { return flags_; }
  const std::string& spec() const { return spec_; }  // canonical spec string

  RingElem zero() const { return RingElem{std::vector<std::uint8_t>(e_, 0)}; }
  RingElem one() const { return fromInt(1); }
  RingElem fromInt(long long v) const;
  RingElem fromPoly(const Poly& p) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scale(long long k, const RingElem& a) const;

  // elements enumerated in mixed-radix order: index = sum c_i * m^i
  std::size_t indexOf(const RingElem& a) const;
  RingElem elementAt(std::size_t idx) const;

  bool isUnit(const RingElem& a) const;

  const std::vector<RingElem>& idealGens() const { return idealGens_; }
  // full element set of n^k, sorted by index; n^k = S for k <= 0 is the
  // caller's convention (k is unsigned here, k = 0 returns all of S)
  std::vector<RingElem> idealPower(unsigned k) const;

  ResidueField residueField() const;

  bool operator==(const CoefRing& other) const {
    return m_ == other.m_ && g_ == other.g_ && idealGens_ == other.idealGens_;
  }

 private:
  unsigned m_ = 0;
  unsigned e_ = 0;
  std::vector<std::uint8_t> g_;  // monic reducer, length e+1
  std::vector<RingElem> idealGens_;
  std::size_t size_ = 0;
  Flags flags_;
  std::string spec_;
  // reduction of t^k for k in [e, 2e-1), as coefficient vectors
  std::vector<std::vector<std::uint8_t>> tPowers_;

  std::vector<std::size_t> idealClosure(std::vector<RingElem> gens) const;
  void computeFlags();
};

// The quotient F = S/n with field arithmetic on coset indices.  Index 0 is
// the zero coset; representatives are the minimal-index elements.
class ResidueField {
 public:
  ResidueField(const CoefRing& ring, std::vector<std::size_t> cosetOfElement, unsigned q);

  unsigned size() const { return q_; }
  unsigned charP() const { return p_; }

  unsigned project(const RingElem& a) const;  // S -> F
  const RingElem& rep(unsigned f) const { return reps_[f]; }  // canonical lift

  unsigned add(unsigned a, unsigned b) const { return addT_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mulT_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return negT_[a]; }
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long k) const;

  const CoefRing& ring() const { return ring_; }

  // an explicit CoefRing of the form Z/pZ[t]/(h) isomorphic to F, with the
  // image of each coset under that isomorphism
  struct AsRing {
    CoefRing field;
    std::vector<RingElem> image;  // by coset index
  };
  AsRing asCoefRing() const;

 private:
  CoefRing ring_;
  std::vector<std::size_t> cosetOf_;  // ring element index -> coset index
  unsigned q_ = 0;
  unsigned p_ = 0;
  std::vector<RingElem> reps_;
  std::vector<unsigned> addT_, mulT_, negT_, invT_;
};

// largest k with p^k | x; throws ZeroInput for x = 0
unsigned padicValuation(unsigned p, unsigned long long x);

// nu_p(binomial(p^n, i)) for 0 < i < p^n, by Kummer's carry count
unsigned binomialValuation(unsigned p, unsigned n, unsigned long long i);

}  // namespace mga
