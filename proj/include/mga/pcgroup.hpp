#pragma once

// Consistent polycyclic presentations for finite p-groups, normal-form
// arithmetic via collection, and brute-force subgroup machinery.
//
// A presentation lists generators g_1..g_r with prime-power relative orders
// o_i, power relations g_i^{o_i} = (word in later generators) and conjugate
// relations g_j^{g_i} = (word in generators > i) for i < j.  Elements are
// exponent vectors (e_1..e_r), 0 <= e_i < o_i, indexed lexicographically
// with e_1 most significant.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mga/error.hpp"

namespace mga {

using ExpVec = std::vector<unsigned>;
using ElemIdx = std::uint32_t;

struct PcPresentation {
  std::vector<unsigned> relOrders;           // o_1..o_r, prime powers
  std::vector<ExpVec> powerRhs;              // g_i^{o_i}; support in generators > i
  std::vector<std::vector<ExpVec>> conjRhs;  // conjRhs[i][j] = g_j^{g_i} for i < j; support > i
  std::string name;

  unsigned ngens() const { return static_cast<unsigned>(relOrders.size()); }
};

class PcGroup {
 public:
  // validates shape; checkConsistency() probes associativity
  explicit PcGroup(PcPresentation pres);

  static constexpr std::size_t kMaxOrder = 1u << 13;
  static constexpr std::size_t kTableLimit = 1u << 12;

  const PcPresentation& presentation() const { return pres_; }
  const std::string& name() const { return pres_.name; }
  std::size_t order() const { return order_; }
  unsigned ngens() const { return pres_.ngens(); }
  unsigned prime() const { return prime_; }

  ElemIdx identity() const { return 0; }
  ElemIdx generator(unsigned i) const;
  ElemIdx idx(const ExpVec& e) const;
  ExpVec expvec(ElemIdx g) const;

  ElemIdx multiply(ElemIdx g, ElemIdx h) const;
  ElemIdx inverse(ElemIdx g) const;
  ElemIdx power(ElemIdx g, long long k) const;
  ElemIdx conjugate(ElemIdx g, ElemIdx h) const;   // h^-1 g h
  ElemIdx commutator(ElemIdx g, ElemIdx h) const;  // g^-1 h^-1 g h
  unsigned orderOf(ElemIdx g) const;

  bool hasTable() const { return !table_.empty(); }
  const std::vector<ElemIdx>& table() const { return table_; }  // row-major |G| x |G|

  // exhaustive associativity for |G| <= 2^9, otherwise sampled triples;
  // also verifies the defining relations against collection
  bool checkConsistency(std::size_t randomTriples = 100000) const;

 private:
  PcPresentation pres_;
  std::size_t order_ = 1;
  unsigned prime_ = 0;
  std::vector<std::size_t> radix_;  // place value per generator
  std::vector<ElemIdx> table_;
  std::vector<std::uint8_t> invCache_;

  ExpVec mulVec(const ExpVec& a, const ExpVec& b) const;
  ExpVec mulGenPower(ExpVec u, unsigned i, unsigned e) const;
  ExpVec conjugateTailByGen(const ExpVec& tail, unsigned i) const;
  ExpVec powVec(const ExpVec& w, unsigned e) const;
  ElemIdx multiplyNoTable(ElemIdx g, ElemIdx h) const;
};

// Canonical subgroup: sorted element list plus the generators it came from.
class Subgroup {
 public:
  Subgroup(const PcGroup& g, std::vector<ElemIdx> sortedElems, std::vector<ElemIdx> gens);

  const PcGroup& group() const { return *group_; }
  const std::vector<ElemIdx>& elems() const { return elems_; }
  const std::vector<ElemIdx>& gens() const { return gens_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(ElemIdx g) const;
  bool containsSubgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return elems_ == other.elems_; }

 private:
  const PcGroup* group_;
  std::vector<ElemIdx> elems_;
  std::vector<ElemIdx> gens_;
};

Subgroup closure(const PcGroup& g, std::vector<ElemIdx> gens);
Subgroup trivialSubgroup(const PcGroup& g);
Subgroup fullSubgroup(const PcGroup& g);

Subgroup center(const PcGroup& g);
Subgroup derived(const PcGroup& g);
Subgroup frattini(const PcGroup& g);
Subgroup lowerCentral(const PcGroup& g, unsigned n);  // gamma_n, n >= 1
Subgroup omegaRel(const PcGroup& g, const Subgroup& n);  // <g : g^p in N>
Subgroup omegaK(const PcGroup& g, unsigned k);           // <g : g^{p^k} = 1>
Subgroup agemo(const PcGroup& g, unsigned k);            // <g^{p^k}>
Subgroup agemoOf(const Subgroup& k, unsigned j);         // <s^{p^j} : s in K>
Subgroup centralizer(const PcGroup& g, const Subgroup& k);
Subgroup normalizer(const PcGroup& g, const Subgroup& k);
bool isNormal(const PcGroup& g, const Subgroup& k);
bool isAbelian(const Subgroup& k);

// invariant-factor type of an abelian p-subgroup, prime powers descending
std::vector<unsigned long long> abelianInvariants(const Subgroup& k);

// G/N with the element-level projection; the quotient presentation has all
// relative orders equal to p (built along a central composition series)
struct QuotientResult {
  std::shared_ptr<PcGroup> quotient;
  std::vector<ElemIdx> projection;  // by element of G
};
QuotientResult quotientPresentation(const PcGroup& g, const Subgroup& n);

// homomorphism determined by images of the pc generators; returns the full
// element map if the defining relations are preserved, nullopt otherwise
std::optional<std::vector<ElemIdx>> homByImages(const PcGroup& src, const PcGroup& dst,
                                                const std::vector<ElemIdx>& images);

// named families
PcGroup familyG(unsigned n, unsigned m, unsigned l);
PcGroup familyH(unsigned n, unsigned m, unsigned l);
PcGroup cyclic2(unsigned n);     // C_{2^n}
PcGroup dihedral16();
PcGroup cyclicGroup(unsigned order);  // C_order, order a prime power
// C_{p^{e_1}} x ... x C_{p^{e_k}} (zero exponents allowed and skipped)
PcGroup abelianProduct(unsigned p, const std::vector<unsigned>& exps);

}  // namespace mga
