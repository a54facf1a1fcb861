// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact; each criterion also enforces its runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mga/census.hpp"
#include "mga/filtration.hpp"
#include "mga/obstruction.hpp"
#include "mga/specparse.hpp"
#include "oracles.hpp"

using namespace mga;

namespace {

CoefRing z4() { return parseRingSpec("Zmod:4;n=2"); }
CoefRing z4t2() { return parseRingSpec("Zmod:4[t]/(t^2);n=2,t"); }
CoefRing f2() { return CoefRing::make(2, Poly{0, 1}, {}); }

bool criterion1(std::string& note) {
  for (unsigned n = 1; n <= 10; ++n) {
    const unsigned long long pn = 1ULL << n;
    oracles::BigNat binom(1);
    for (unsigned long long i = 1; i < pn; ++i) {
      // C(pn, i) = C(pn, i-1) * (pn - i + 1) / i, the division exact
      binom.mulSmall(pn - i + 1);
      binom.divSmall(i);
      const unsigned v = binomialValuation(2, n, i);
      if (v != n - padicValuation(2, i)) {
        note = "closed form fails at n=" + std::to_string(n) + " i=" + std::to_string(i);
        return false;
      }
      if (v != oracles::valuationOfBig(binom, 2)) {
        note = "exact binomial disagrees at n=" + std::to_string(n) + " i=" + std::to_string(i);
        return false;
      }
    }
  }
  note = "all n <= 10, 0 < i < 2^n";
  return true;
}

bool criterion2(std::string& note) {
  const CoefRing s = z4();
  for (const char* name : {"C2^4", "D16", "G(4,3,2)", "H(4,3,2)"}) {
    const PcGroup g = parseGroupName(name);
    GroupAlgebra alg(s, g);
    for (ElemIdx x = 0; x < g.order(); ++x) {
      AlgebraElement cur = alg.groupMinusOne(x);
      for (unsigned n = 1; n <= 4; ++n) {
        cur = alg.mul(cur, cur);
        const AlgebraElement rhs =
            alg.add(alg.groupMinusOne(g.power(x, 1LL << n)),
                    alg.scale(s.fromInt(2), alg.groupMinusOne(g.power(x, 1LL << (n - 1)))));
        if (!(cur == rhs)) {
          note = std::string(name) + ", element " + std::to_string(x);
          return false;
        }
      }
    }
  }
  note = "all elements of C16, D16, G(4,3,2), H(4,3,2)";
  return true;
}

bool criterion3(std::string& note) {
  for (const CoefRing& s : {z4(), z4t2()}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const PcGroup c = cyclic2(n);
      GroupAlgebra alg(s, c);
      const unsigned maxK = (1u << n) + 4;
      IdealFiltration th = thetaPowers(alg, maxK);
      for (unsigned k = 0; k <= maxK; ++k)
        if (!(materialize(cyclicClosedForm(n, k), alg) == th.at(k))) {
          note = s.spec() + ", C_{2^" + std::to_string(n) + "}, k=" + std::to_string(k);
          return false;
        }
    }
  }
  // the worked C4 table over Z/4Z: component ideal sizes and module sizes
  {
    const CoefRing s = z4();
    PcGroup c4 = cyclic2(2);
    GroupAlgebra alg(s, c4);
    IdealFiltration th = thetaPowers(alg, 5);
    const unsigned long long sizes[6] = {256, 128, 32, 8, 4, 2};
    const unsigned long long comps[6][4] = {{4, 4, 4, 4}, {2, 4, 4, 4}, {1, 2, 4, 4},
                                            {1, 1, 2, 4}, {1, 1, 2, 2}, {1, 1, 1, 2}};
    for (unsigned k = 0; k <= 5; ++k) {
      if (th.at(k).size() != sizes[k]) {
        note = "C4 table: module size differs at k=" + std::to_string(k);
        return false;
      }
      const ClosedFormEntry e = cyclicClosedForm(2, k);
      for (unsigned i = 0; i < 4; ++i)
        if (componentIdeal(e.comps[i], s).size() != comps[k][i]) {
          note = "C4 table: component U^" + std::to_string(i) + " at k=" + std::to_string(k);
          return false;
        }
    }
  }
  note = "n <= 4, k <= 2^n + 4, both rings; C4 table exact";
  return true;
}

bool criterion4(std::string& note) {
  for (const CoefRing& s : {z4(), z4t2()}) {
    PcGroup d = dihedral16();
    GroupAlgebra alg(s, d);
    IdealFiltration th = thetaPowers(alg, 20);
    for (unsigned k = 0; k <= 20; ++k)
      if (!(materialize(dihedralClosedForm(k), alg) == th.at(k))) {
        note = s.spec() + ", k=" + std::to_string(k);
        return false;
      }
    const AlgebraElement W = alg.groupMinusOne(d.generator(2));
    const AlgebraElement twoW2 = alg.scale(s.fromInt(2), alg.mul(W, W));
    if (!th.memberAt(twoW2, 8) || th.memberAt(alg.scale(s.fromInt(2), W), 4)) {
      note = s.spec() + ": 2W^2 / 2W membership facts";
      return false;
    }
  }
  note = "k <= 20, both rings; 2W^2 in Theta^8, 2W not in Theta^4";
  return true;
}

bool criterion5(std::string& note) {
  for (const char* name : {"C2^2", "C2^3", "D16", "G(4,3,2)", "H(4,3,2)"}) {
    const PcGroup g = parseGroupName(name);
    const JenningsData prod = jenningsSeries(2, g);
    const JenningsData memb = dimensionSubgroupsByMembership(f2(), g);
    if (prod.series.size() != memb.series.size()) {
      note = std::string(name) + ": series lengths differ";
      return false;
    }
    for (std::size_t i = 0; i < prod.series.size(); ++i)
      if (!(prod.series[i] == memb.series[i])) {
        note = std::string(name) + ": D_" + std::to_string(i + 1);
        return false;
      }
    unsigned total = 0;
    for (const unsigned v : prod.gradedLogDims) total += v;
    unsigned lg = 0;
    for (std::size_t q = g.order(); q > 1; q /= 2) ++lg;
    if (total != lg) {
      note = std::string(name) + ": graded dims sum to " + std::to_string(total);
      return false;
    }
  }
  note = "C4, C8, D16, G(4,3,2), H(4,3,2), full depth";
  return true;
}

bool criterion6(std::string& note) {
  struct Pair {
    CoefRing s;
    const char* g;
  };
  const std::vector<Pair> pairs = {{z4(), "C2^2"},    {z4(), "C2^3"}, {z4(), "D16"},
                                   {z4(), "G(4,3,2)"}, {z4(), "H(4,3,2)"}, {z4t2(), "C2^2"},
                                   {z4t2(), "D16"}};
  for (const auto& p : pairs) {
    const PcGroup g = parseGroupName(p.g);
    const RelAugReport r = relAugQuotientDims(p.s, g);
    const Subgroup phi = frattini(g);
    unsigned d = 0;
    for (std::size_t q = g.order() / phi.order(); q > 1; q /= 2) ++d;
    unsigned long long fpow = 1;
    for (unsigned i = 0; i < d; ++i) fpow *= p.s.residueField().size();
    if (!r.match || r.deltaFDim != d || r.thetaQuotient != r.nQuotient * fpow) {
      note = std::string(p.g) + " over " + p.s.spec();
      return false;
    }
  }
  const RelAugReport rh = relAugQuotientDims(z4(), familyH(4, 3, 2));
  if (rh.fDim != 3) {
    note = "F-dimension of Theta/Theta^2 for SH(4,3,2) is " + std::to_string(rh.fDim);
    return false;
  }
  note = "7 ring/group pairs; SH(4,3,2) F-dimension 3";
  return true;
}

bool criterion7(std::string& note) {
  const VerificationReport vr = verifyCounterexample(4, 3, 2, z4());
  unsigned passed = 0;
  for (const auto& item : vr.items) {
    if (!item.pass) {
      note = item.id + " failed";
      return false;
    }
    ++passed;
  }
  if (!vr.certified) {
    note = "not certified";
    return false;
  }
  note = "CERTIFIED; " + std::to_string(passed) + " checks (10 lemmas, 2 reductions, system, scalars)";
  return true;
}

bool criterion8(std::string& note) {
  for (const unsigned p : {2u, 3u}) {
    const unsigned maxSum = p == 2 ? 12 : 7;
    for (unsigned total = 0; total <= maxSum; ++total)
      for (unsigned n = 0; n <= total; ++n)
        for (unsigned m = 0; m + n <= total; ++m) {
          const unsigned l = total - n - m;
          if (!(n >= m && m >= l)) continue;
          if (tothClosedForm(p, n, m, l) !=
              countCyclicSubgroupClasses(abelianProduct(p, {n, m, l}))) {
            note = "count mismatch at p=" + std::to_string(p) + " (" + std::to_string(n) + "," +
                   std::to_string(m) + "," + std::to_string(l) + ")";
            return false;
          }
        }
  }
  const CsDifference d432 = csDifference(4, 3, 2);
  const CsDifference d532 = csDifference(5, 3, 2);
  if (!(d432.agree && d432.formula == 4 && d532.agree && d532.formula == 8)) {
    note = "difference check failed";
    return false;
  }
  note = "closed count = brute force (p = 2, 3); differences 4 and 8 confirmed";
  return true;
}

bool criterion9(std::string& note) {
  const CensusResult g = wedderburnCounts(familyG(4, 3, 2));
  const CensusResult h = wedderburnCounts(familyH(4, 3, 2));
  const bool complexMatch = g.complexComponents == 224 && h.complexComponents == 224 &&
                            g.degreeProfileKnown && h.degreeProfileKnown &&
                            g.degreeOneCount == 128 && g.degreeTwoCount == 96 &&
                            h.degreeOneCount == 128 && h.degreeTwoCount == 96 &&
                            g.degreeOneCount + g.degreeTwoCount == g.classCount &&
                            h.degreeOneCount + h.degreeTwoCount == h.classCount;
  if (!complexMatch) {
    note = "complex profiles do not match the expected 224 = 128 + 96";
    return false;
  }
  if (g.rationalComponents == h.rationalComponents) {
    note = "rational component counts unexpectedly equal";
    return false;
  }
  note = "complex profiles equal (224 = 128 + 96); rational counts 62 vs 66";
  return true;
}

bool criterion10(std::string& note) {
  for (const char* name : {"G(4,3,2)", "H(4,3,2)"}) {
    const NormalityReport r = normalityCharacterization(parseGroupName(name));
    if (!r.holds) {
      note = std::string(name) + ": " + r.witness;
      return false;
    }
  }
  note = "exhaustive over all cyclic subgroups of the maximal abelian subgroups";
  return true;
}

bool criterion11(std::string& note) {
  const CoefRing f = f2();
  const PcGroup g = familyG(4, 3, 2);
  const PcGroup h = familyH(4, 3, 2);
  GroupAlgebra ag(f, g), ah(f, h);
  const IdealFiltration dg = deltaPowersUntilZero(ag), dh = deltaPowersUntilZero(ah);
  if (dg.depth() != dh.depth()) {
    note = "Delta nilpotency depths differ";
    return false;
  }
  for (unsigned k = 0; k < dg.depth(); ++k)
    if (dg.at(k).quotientSizeOver(dg.at(k + 1)) != dh.at(k).quotientSizeOver(dh.at(k + 1))) {
      note = "dim Delta^k/Delta^{k+1} differs at k=" + std::to_string(k);
      return false;
    }
  if (jenningsSeries(2, g).gradedLogDims != jenningsSeries(2, h).gradedLogDims) {
    note = "Jennings graded dimensions differ";
    return false;
  }
  note = "graded dims agree through Delta nilpotency index " + std::to_string(dg.depth());
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int num;
    const char* label;
    double budgetSec;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Kummer p=2 valuations vs closed form and exact binomials", 1, criterion1},
      {2, "char-4 power identity across four groups", 10, criterion2},
      {3, "cyclic filtration closed form = brute force; C4 table", 30, criterion3},
      {4, "dihedral filtration closed form = brute force to k = 20", 60, criterion4},
      {5, "Jennings product formula = membership dimension subgroups", 120, criterion5},
      {6, "relative augmentation quotient dimensions", 120, criterion6},
      {7, "obstruction certificate at (4,3,2) over Z/4Z", 600, criterion7},
      {8, "cyclic subgroup census: closed form and differences", 300, criterion8},
      {9, "Wedderburn counts: complex equal, rational differ", 300, criterion9},
      {10, "normality characterization, exhaustive", 300, criterion10},
      {11, "char-2 invariants of G and H agree", 120, criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double sec =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count() /
        1000.0;
    const bool inBudget = sec < c.budgetSec;
    if (!inBudget && ok) note += " [over runtime budget]";
    ok = ok && inBudget;
    std::printf("[%s] criterion %2d (%6.2fs < %gs): %s%s%s\n", ok ? "PASS" : "FAIL", c.num, sec,
                c.budgetSec, c.label, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 11 criteria PASS\n");
  return failures ? 1 : 0;
}
