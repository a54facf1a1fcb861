#include "mga/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "mga/census.hpp"
#include "mga/filtration.hpp"
#include "mga/specparse.hpp"

namespace mga {

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
  const VerifyOptions& opt;
  Report report;

  void run(const std::string& id, const std::string& claim,
           const std::function<bool(std::string&)>& body) {
    if (!opt.only.empty() && id.find(opt.only) == std::string::npos) return;
    CongruenceReport item;
    item.id = id;
    item.claim = claim;
    const auto start = Clock::now();
    try {
      item.pass = body(item.witness);
    } catch (const Error& e) {
      item.pass = false;
      item.witness = e.what();
    }
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() / 1000.0;
    report.items.push_back(std::move(item));
    report.timingsMs.push_back(ms);
  }

  void add(CongruenceReport item, double ms = 0) {
    if (!opt.only.empty() && item.id.find(opt.only) == std::string::npos) return;
    report.items.push_back(std::move(item));
    report.timingsMs.push_back(ms);
  }
};

unsigned minimalGenerators(const PcGroup& g) {
  const Subgroup phi = frattini(g);
  unsigned d = 0;
  for (std::size_t q = g.order() / phi.order(); q > 1; q /= g.prime()) ++d;
  return d;
}

bool cyclicFiltrationMatches(const CoefRing& s, unsigned n, std::string& witness) {
  PcGroup c = cyclic2(n);
  GroupAlgebra alg(s, c);
  const unsigned maxK = (1u << n) + 4;
  IdealFiltration th = thetaPowers(alg, maxK);
  for (unsigned k = 0; k <= maxK; ++k) {
    if (materialize(cyclicClosedForm(n, k), alg) != th.at(k)) {
      witness = "mismatch at C_{2^" + std::to_string(n) + "}, k = " + std::to_string(k);
      return false;
    }
  }
  return true;
}

bool dihedralFiltrationMatches(const CoefRing& s, std::string& witness) {
  PcGroup d = dihedral16();
  GroupAlgebra alg(s, d);
  IdealFiltration th = thetaPowers(alg, 20);
  for (unsigned k = 0; k <= 20; ++k) {
    if (materialize(dihedralClosedForm(k), alg) != th.at(k)) {
      witness = "mismatch at k = " + std::to_string(k);
      return false;
    }
  }
  const AlgebraElement W = alg.groupMinusOne(d.generator(2));
  const AlgebraElement twoW2 = alg.scale(s.fromInt(2), alg.mul(W, W));
  const AlgebraElement twoW = alg.scale(s.fromInt(2), W);
  if (!th.memberAt(twoW2, 8)) {
    witness = "2W^2 missing from Theta^8";
    return false;
  }
  if (th.memberAt(twoW, 4)) {
    witness = "2W unexpectedly in Theta^4";
    return false;
  }
  return true;
}

bool jenningsMatches(const PcGroup& g, std::string& witness) {
  const CoefRing f2 = CoefRing::make(2, Poly{0, 1}, {});
  const JenningsData product = jenningsSeries(2, g);
  const JenningsData member = dimensionSubgroupsByMembership(f2, g);
  if (product.series.size() != member.series.size()) {
    witness = "series lengths differ";
    return false;
  }
  for (std::size_t i = 0; i < product.series.size(); ++i)
    if (!(product.series[i] == member.series[i])) {
      witness = "D_" + std::to_string(i + 1) + " differs";
      return false;
    }
  unsigned total = 0;
  for (const unsigned d : product.gradedLogDims) total += d;
  unsigned logOrder = 0;
  for (std::size_t q = g.order(); q > 1; q /= 2) ++logOrder;
  if (total != logOrder) {
    witness = "graded log-dims sum to " + std::to_string(total);
    return false;
  }
  return true;
}

bool relAugMatches(const CoefRing& s, const PcGroup& g, std::string& witness) {
  const RelAugReport r = relAugQuotientDims(s, g);
  const unsigned d = minimalGenerators(g);
  if (!r.match || r.deltaFDim != d) {
    std::ostringstream os;
    os << "fDim=" << r.fDim << " nDim=" << r.nDim << " deltaFDim=" << r.deltaFDim
       << " d(G)=" << d;
    witness = os.str();
    return false;
  }
  return true;
}

bool powerIdentityHolds(const CoefRing& s, const PcGroup& g, std::string& witness) {
  GroupAlgebra alg(s, g);
  for (ElemIdx x = 0; x < g.order(); ++x) {
    AlgebraElement cur = alg.groupMinusOne(x);
    for (unsigned n = 1; n <= 4; ++n) {
      cur = alg.mul(cur, cur);
      const AlgebraElement rhs =
          alg.add(alg.groupMinusOne(g.power(x, 1LL << n)),
                  alg.scale(s.fromInt(2), alg.groupMinusOne(g.power(x, 1LL << (n - 1)))));
      if (!(cur == rhs)) {
        witness = "element " + std::to_string(x) + ", exponent 2^" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool char2InvariantsAgree(std::string& witness) {
  const CoefRing f2 = CoefRing::make(2, Poly{0, 1}, {});
  PcGroup g = familyG(4, 3, 2);
  PcGroup h = familyH(4, 3, 2);
  GroupAlgebra ag(f2, g), ah(f2, h);
  IdealFiltration dg = deltaPowersUntilZero(ag), dh = deltaPowersUntilZero(ah);
  if (dg.depth() != dh.depth()) {
    witness = "nilpotency depths differ: " + std::to_string(dg.depth()) + " vs " +
              std::to_string(dh.depth());
    return false;
  }
  for (unsigned k = 0; k < dg.depth(); ++k) {
    const auto qg = dg.at(k).quotientSizeOver(dg.at(k + 1));
    const auto qh = dh.at(k).quotientSizeOver(dh.at(k + 1));
    if (qg != qh) {
      witness = "dim Delta^k/Delta^{k+1} differs at k = " + std::to_string(k);
      return false;
    }
  }
  const JenningsData jg = jenningsSeries(2, g), jh = jenningsSeries(2, h);
  if (jg.gradedLogDims != jh.gradedLogDims) {
    witness = "Jennings graded dimensions differ";
    return false;
  }
  std::ostringstream os;
  os << "common Delta nilpotency index " << dg.depth();
  witness = os.str();
  return true;
}

}  // namespace

Report runVerify(const VerifyOptions& opt) {
  Suite s{opt, {}, };
  const CoefRing z4 = parseRingSpec("Zmod:4;n=2");
  const CoefRing z4t2 = parseRingSpec("Zmod:4[t]/(t^2);n=2,t");

  s.run("kummer:p2", "nu_2(binom(2^n, i)) = n - nu_2(i) for n <= 10, 0 < i < 2^n",
        [&](std::string& w) {
          for (unsigned n = 1; n <= 10; ++n)
            for (unsigned long long i = 1; i < (1ULL << n); ++i)
              if (binomialValuation(2, n, i) != n - padicValuation(2, i)) {
                w = "fails at n = " + std::to_string(n) + ", i = " + std::to_string(i);
                return false;
              }
          return true;
        });

  s.run("kummer:oddp-note",
        "carry count at (p,n,i) = (3,2,1) gives 2; the displayed closed form (p-1)(n-nu(i)) "
        "would give 4 (recorded, only p = 2 is used downstream)",
        [&](std::string& w) {
          w = "binomialValuation(3,2,1) = " + std::to_string(binomialValuation(3, 2, 1));
          return binomialValuation(3, 2, 1) == 2;
        });

  s.run("rings:flags", "Zmod:4 and Zmod:4[t]/(t^2) suit the hypotheses; Zmod:4[t]/(t^2-2) does not",
        [&](std::string& w) {
          const CoefRing excluded = parseRingSpec("Zmod:4[t]/(t^2-2);n=t");
          const bool ok = z4.flags().idealIsMaximal && z4.flags().twoInIdeal &&
                          !z4.flags().twoInIdealSquared && z4t2.flags().idealIsMaximal &&
                          z4t2.flags().twoInIdeal && !z4t2.flags().twoInIdealSquared &&
                          excluded.flags().twoInIdealSquared;
          if (!ok) w = "flag computation disagrees with the expected ring classification";
          return ok;
        });

  for (const char* name : {"C2^4", "D16", "G(4,3,2)", "H(4,3,2)"}) {
    s.run(std::string("powerIdentity:") + name,
          "(g-1)^{2^n} = (g^{2^n}-1) + 2(g^{2^{n-1}}-1) over Zmod:4, n <= 4",
          [&, name](std::string& w) { return powerIdentityHolds(z4, parseGroupName(name), w); });
  }

  s.run("filtration:cyclic:Zmod4", "closed form = brute force for C_{2^n}, n <= 4, k <= 2^n + 4",
        [&](std::string& w) {
          for (unsigned n = 1; n <= 4; ++n)
            if (!cyclicFiltrationMatches(z4, n, w)) return false;
          return true;
        });
  s.run("filtration:cyclic:Zmod4t2", "same over Zmod:4[t]/(t^2) with n = (2, t)",
        [&](std::string& w) {
          for (unsigned n = 1; n <= 4; ++n)
            if (!cyclicFiltrationMatches(z4t2, n, w)) return false;
          return true;
        });

  s.run("filtration:c4table", "the C4 filtration table: sizes and component ideals",
        [&](std::string& w) {
          PcGroup c4 = cyclic2(2);
          GroupAlgebra alg(z4, c4);
          IdealFiltration th = thetaPowers(alg, 5);
          const unsigned long long sizes[6] = {256, 128, 32, 8, 4, 2};
          const unsigned long long comps[6][4] = {{4, 4, 4, 4}, {2, 4, 4, 4}, {1, 2, 4, 4},
                                                  {1, 1, 2, 4}, {1, 1, 2, 2}, {1, 1, 1, 2}};
          for (unsigned k = 0; k <= 5; ++k) {
            if (th.at(k).size() != sizes[k]) {
              w = "module size differs at k = " + std::to_string(k);
              return false;
            }
            const ClosedFormEntry e = cyclicClosedForm(2, k);
            for (unsigned i = 0; i < 4; ++i)
              if (componentIdeal(e.comps[i], z4).size() != comps[k][i]) {
                w = "component ideal differs at k = " + std::to_string(k) + ", U^" +
                    std::to_string(i);
                return false;
              }
          }
          return true;
        });

  s.run("filtration:dihedral:Zmod4", "closed form = brute force for D16, k <= 20; 2W^2 and 2W facts",
        [&](std::string& w) { return dihedralFiltrationMatches(z4, w); });
  s.run("filtration:dihedral:Zmod4t2", "same over Zmod:4[t]/(t^2)",
        [&](std::string& w) { return dihedralFiltrationMatches(z4t2, w); });

  for (const char* name : {"C2^2", "C2^3", "D16", "G(4,3,2)", "H(4,3,2)"}) {
    s.run(std::string("jennings:") + name,
          "product-formula dimension subgroups = membership route over F2; dims sum to log2|G|",
          [&, name](std::string& w) { return jenningsMatches(parseGroupName(name), w); });
  }

  for (const char* name : {"C2^2", "C2^3", "D16", "G(4,3,2)", "H(4,3,2)"}) {
    s.run(std::string("relaug:Zmod4:") + name,
          "|Theta/Theta^2| = |n/n^2| |F|^{d(G)} with the prime-field route agreeing",
          [&, name](std::string& w) { return relAugMatches(z4, parseGroupName(name), w); });
  }
  for (const char* name : {"C2^2", "D16"}) {
    s.run(std::string("relaug:Zmod4t2:") + name, "same over Zmod:4[t]/(t^2)",
          [&, name](std::string& w) { return relAugMatches(z4t2, parseGroupName(name), w); });
  }
  s.run("relaug:dim3", "Theta/Theta^2 of SH(4,3,2) over Zmod:4 has F-dimension 3",
        [&](std::string& w) {
          const RelAugReport r = relAugQuotientDims(z4, familyH(4, 3, 2));
          w = "fDim = " + std::to_string(r.fDim);
          return r.match && r.fDim == 3;
        });

  auto anyIdMatches = [&](const std::vector<std::string>& ids) {
    if (opt.only.empty()) return true;
    for (const auto& id : ids)
      if (id.find(opt.only) != std::string::npos) return true;
    return false;
  };

  {
    // the obstruction pipeline at (4,3,2) over Z/4Z: emit its items directly
    std::vector<std::string> ids{"hypothesis", "reduction:cyclic", "reduction:dihedral",
                                 "finalSystem", "crossCheck", "obstruction:4,3,2:Zmod4"};
    for (const auto& l : lemmaIds()) ids.push_back("lemma:" + l);
    if (anyIdMatches(ids)) {
      const auto start = Clock::now();
      VerificationReport vr = verifyCounterexample(4, 3, 2, z4);
      const double ms =
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() /
          1000.0;
      bool first = true;
      for (auto& item : vr.items) {
        s.add(std::move(item), first ? ms : 0);
        first = false;
      }
      CongruenceReport overall;
      overall.id = "obstruction:4,3,2:Zmod4";
      overall.claim = "verifyCounterexample(4,3,2, Zmod:4) is CERTIFIED";
      overall.pass = vr.certified;
      s.add(std::move(overall));
    }
  }

  s.run("census:toth", "closed count = brute force for p in {2,3}, p^{n+m+l} <= 2^12",
        [&](std::string& w) {
          for (const unsigned p : {2u, 3u}) {
            const unsigned maxSum = p == 2 ? 12 : 7;
            for (unsigned total = 0; total <= maxSum; ++total)
              for (unsigned n = 0; n <= total; ++n)
                for (unsigned m = 0; m + n <= total; ++m) {
                  const unsigned l = total - n - m;
                  if (!(n >= m && m >= l)) continue;
                  const PcGroup g = abelianProduct(p, {n, m, l});
                  if (tothClosedForm(p, n, m, l) != countCyclicSubgroupClasses(g)) {
                    w = "mismatch at p = " + std::to_string(p) + ", (" + std::to_string(n) + "," +
                        std::to_string(m) + "," + std::to_string(l) + ")";
                    return false;
                  }
                }
          }
          return true;
        });

  s.run("census:diff:4,3,2", "|CS(H)| - |CS(G)| = 4 at (4,3,2), formula = enumeration",
        [&](std::string& w) {
          const CsDifference d = csDifference(4, 3, 2);
          w = "CS(G) = " + std::to_string(d.csG) + ", CS(H) = " + std::to_string(d.csH);
          return d.agree && d.formula == 4;
        });
  s.run("census:diff:5,3,2", "|CS(H)| - |CS(G)| = 8 at (5,3,2), formula = enumeration",
        [&](std::string& w) {
          const CsDifference d = csDifference(5, 3, 2);
          w = "CS(G) = " + std::to_string(d.csG) + ", CS(H) = " + std::to_string(d.csH);
          return d.agree && d.formula == 8;
        });

  s.run("census:wedderburn:4,3,2",
        "complex components match (224 = 128 + 96); rational components differ by 4",
        [&](std::string& w) {
          const CensusResult g = wedderburnCounts(familyG(4, 3, 2));
          const CensusResult h = wedderburnCounts(familyH(4, 3, 2));
          std::ostringstream os;
          os << "G: " << g.complexComponents << " classes, " << g.rationalComponents
             << " rational; H: " << h.complexComponents << " classes, " << h.rationalComponents
             << " rational";
          w = os.str();
          return g.degreeProfileKnown && h.degreeProfileKnown && g.complexComponents == 224 &&
                 h.complexComponents == 224 && g.degreeOneCount == 128 && g.degreeTwoCount == 96 &&
                 h.degreeOneCount == 128 && h.degreeTwoCount == 96 &&
                 g.degreeOneCount + g.degreeTwoCount == g.classCount &&
                 h.rationalComponents - g.rationalComponents == 4;
        });

  for (const char* name : {"G(4,3,2)", "H(4,3,2)"}) {
    s.run(std::string("census:normality:") + name,
          "K normal <=> K <= Z or K <= Omega(Gamma : Gamma'), all cyclic K <= C(Gamma')",
          [&, name](std::string& w) {
            const NormalityReport r = normalityCharacterization(parseGroupName(name));
            w = std::to_string(r.cyclicSubgroupsChecked) + " cyclic subgroups checked";
            return r.holds;
          });
  }

  s.run("char2:4,3,2", "over F2, Jennings graded dims and dim Delta^k/Delta^{k+1} agree for G and H",
        char2InvariantsAgree);

  if (opt.deep) {
    {
      if (anyIdMatches({"deep:obstruction:5,3,2:Zmod4"})) {
        const auto start = Clock::now();
        VerificationReport vr = verifyCounterexample(5, 3, 2, z4);
        const double ms =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() /
            1000.0;
        CongruenceReport overall;
        overall.id = "deep:obstruction:5,3,2:Zmod4";
        overall.claim = "verifyCounterexample(5,3,2, Zmod:4) is CERTIFIED";
        overall.pass = vr.certified;
        for (const auto& item : vr.items)
          if (!item.pass) overall.witness += item.id + " failed; ";
        s.add(std::move(overall), ms);
      }
    }
    {
      if (anyIdMatches({"deep:obstruction:4,3,2:Zmod4t2"})) {
        const auto start = Clock::now();
        VerificationReport vr = verifyCounterexample(4, 3, 2, z4t2);
        const double ms =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() /
            1000.0;
        CongruenceReport overall;
        overall.id = "deep:obstruction:4,3,2:Zmod4t2";
        overall.claim = "verifyCounterexample(4,3,2, Zmod:4[t]/(t^2)) is CERTIFIED";
        overall.pass = vr.certified;
        for (const auto& item : vr.items)
          if (!item.pass) overall.witness += item.id + " failed; ";
        s.add(std::move(overall), ms);
      }
    }
    s.run("deep:census:diff:5,4,2", "|CS(H)| - |CS(G)| = 8 at (5,4,2), formula = enumeration at order 2048",
          [&](std::string& w) {
            const CsDifference d = csDifference(5, 4, 2);
            w = "CS(G) = " + std::to_string(d.csG) + ", CS(H) = " + std::to_string(d.csH);
            return d.agree && d.formula == 8;
          });
  }

  s.report.verdict = s.report.allPass() ? "PASS" : "FAIL";
  return s.report;
}

}  // namespace mga
