#include "mga/filtration.hpp"

#include <algorithm>
#include <set>

namespace mga {

namespace {

std::string monoTag(const std::string& base, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

ClosedFormEntry cyclicClosedForm(unsigned n, unsigned k) {
  if (n < 1) fail(Err::BadParameters, "cyclic closed form needs n >= 1");
  const unsigned full = 1u << n, half = full / 2;
  ClosedFormEntry e;
  e.k = k;
  for (unsigned i = 0; i < full; ++i) {
    ClosedFormComponent c;
    c.tag = i == 0 ? "1" : monoTag("U", i);
    c.mono = {i};
    c.aExp = static_cast<int>(k) - static_cast<int>(i);
    if (i >= half) {
      c.hasTwoPart = true;
      c.bExp = static_cast<int>(k) - static_cast<int>(i) - static_cast<int>(half);
    }
    e.comps.push_back(std::move(c));
  }
  return e;
}

ClosedFormEntry dihedralClosedForm(unsigned k) {
  ClosedFormEntry e;
  e.k = k;
  auto omega = [](unsigned s, unsigned t, unsigned i) { return s + t + 2 * i; };
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 2; ++t)
      for (unsigned i = 0; i < 2; ++i) {
        ClosedFormComponent c;
        c.tag = monoTag("U", s) + monoTag("V", t) + monoTag("W", i);
        if (c.tag.empty()) c.tag = "1";
        c.mono = {s, t, i};
        c.aExp = static_cast<int>(k) - static_cast<int>(omega(s, t, i));
        e.comps.push_back(std::move(c));
      }
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned t = 0; t < 2; ++t)
      for (unsigned i = 0; i < 2; ++i) {
        ClosedFormComponent c;
        c.tag = monoTag("U", s) + monoTag("V", t) + monoTag("W", i + 2);
        c.mono = {s, t, i + 2};
        c.aExp = static_cast<int>(k) - 4 - static_cast<int>(omega(s, t, i));
        c.hasTwoPart = true;
        c.bExp = static_cast<int>(k) - 8 - static_cast<int>(omega(s, t, i));
        e.comps.push_back(std::move(c));
      }
  return e;
}

std::vector<RingElem> componentIdeal(const ClosedFormComponent& c, const CoefRing& s) {
  const auto base = s.idealPower(c.aExp > 0 ? static_cast<unsigned>(c.aExp) : 0);
  if (!c.hasTwoPart) return base;
  const auto extra = s.idealPower(c.bExp > 0 ? static_cast<unsigned>(c.bExp) : 0);
  const RingElem two = s.fromInt(2);
  std::set<std::size_t> idx;
  std::vector<RingElem> out;
  for (const auto& x : base)
    for (const auto& y : extra) {
      const RingElem v = s.add(x, s.mul(two, y));
      if (idx.insert(s.indexOf(v)).second) out.push_back(v);
    }
  std::sort(out.begin(), out.end(),
            [&](const RingElem& a, const RingElem& b) { return s.indexOf(a) < s.indexOf(b); });
  return out;
}

HowellModule materialize(const ClosedFormEntry& e, const GroupAlgebra& alg) {
  const PcGroup& g = alg.group();
  const CoefRing& s = alg.ring();
  const bool cyclicShape = e.comps.size() == g.order() && g.ngens() == 1;
  const bool dihedralShape = e.comps.size() == 16 && g.order() == 16 && g.ngens() == 3;
  if (!cyclicShape && !dihedralShape)
    fail(Err::RingMismatch, "closed form does not match the algebra's group");

  std::vector<AlgebraElement> monomials;
  if (cyclicShape) {
    const AlgebraElement u1 = alg.groupMinusOne(g.generator(0));
    AlgebraElement cur = alg.one();
    for (const auto& c : e.comps) {
      (void)c;
      monomials.push_back(cur);
      cur = alg.mul(cur, u1);
    }
  } else {
    const AlgebraElement U = alg.groupMinusOne(g.generator(0));
    const AlgebraElement V = alg.groupMinusOne(g.generator(1));
    const AlgebraElement W = alg.groupMinusOne(g.generator(2));
    for (const auto& c : e.comps) {
      AlgebraElement m = alg.one();
      for (unsigned i = 0; i < c.mono[0]; ++i) m = alg.mul(m, U);
      for (unsigned i = 0; i < c.mono[1]; ++i) m = alg.mul(m, V);
      for (unsigned i = 0; i < c.mono[2]; ++i) m = alg.mul(m, W);
      monomials.push_back(std::move(m));
    }
  }

  HowellBuilder b(alg.dim(), s.modulus());
  for (std::size_t ci = 0; ci < e.comps.size(); ++ci) {
    for (const RingElem& rho : componentIdeal(e.comps[ci], s)) {
      if (rho.isZero()) continue;
      b.insert(alg.scale(rho, monomials[ci]).v);
    }
  }
  return b.finalize();
}

JenningsData jenningsSeries(unsigned p, const PcGroup& g) {
  if (g.order() > 1 && g.prime() != p) fail(Err::CharMismatch, "field characteristic must match the group prime");
  // lower central series until it stabilizes at the trivial subgroup
  std::vector<Subgroup> gammas{fullSubgroup(g)};
  while (gammas.back().order() > 1)
    gammas.push_back(lowerCentral(g, static_cast<unsigned>(gammas.size() + 1)));

  JenningsData out;
  out.series.push_back(fullSubgroup(g));
  unsigned n = 2;
  while (out.series.back().order() > 1) {
    std::vector<ElemIdx> gens;
    for (unsigned i = 1; i <= n; ++i) {
      if (i > gammas.size()) break;
      const Subgroup& gi = gammas[std::min<std::size_t>(i, gammas.size()) - 1];
      if (gi.order() == 1) continue;
      unsigned j = 0;
      unsigned long long pj = 1;
      while (static_cast<unsigned long long>(i) * pj < n) {
        pj *= p;
        ++j;
      }
      const Subgroup pw = agemoOf(gi, j);
      gens.insert(gens.end(), pw.elems().begin(), pw.elems().end());
    }
    out.series.push_back(closure(g, std::move(gens)));
    ++n;
    if (n > 4096) fail(Err::DepthExceeded, "Jennings series did not terminate");
  }
  for (std::size_t i = 0; i + 1 < out.series.size(); ++i) {
    const std::size_t q = out.series[i].order() / out.series[i + 1].order();
    unsigned lg = 0;
    for (std::size_t v = q; v > 1; v /= p) ++lg;
    out.gradedLogDims.push_back(lg);
  }
  return out;
}

Subgroup dimensionSubgroup(const CoefRing& s, const PcGroup& g, unsigned n) {
  if (g.order() > (1u << 10)) fail(Err::TooLarge, "dimension subgroups are limited to order 2^10");
  GroupAlgebra alg(s, g);
  IdealFiltration d = deltaPowers(alg, n);
  std::vector<ElemIdx> members;
  for (ElemIdx x = 0; x < g.order(); ++x)
    if (d.memberAt(alg.groupMinusOne(x), n)) members.push_back(x);
  return Subgroup(g, members, members);
}

JenningsData dimensionSubgroupsByMembership(const CoefRing& s, const PcGroup& g, unsigned cap) {
  if (g.order() > (1u << 10)) fail(Err::TooLarge, "dimension subgroups are limited to order 2^10");
  GroupAlgebra alg(s, g);
  IdealFiltration d = deltaPowersUntilZero(alg, cap);
  JenningsData out;
  unsigned n = 1;
  while (true) {
    if (n > d.depth()) fail(Err::DepthExceeded, "filtration shallower than the dimension series");
    std::vector<ElemIdx> members;
    for (ElemIdx x = 0; x < g.order(); ++x)
      if (d.memberAt(alg.groupMinusOne(x), n)) members.push_back(x);
    out.series.emplace_back(g, members, members);
    if (members.size() == 1) break;
    ++n;
  }
  const unsigned p = g.prime() ? g.prime() : 2;
  for (std::size_t i = 0; i + 1 < out.series.size(); ++i) {
    const std::size_t q = out.series[i].order() / out.series[i + 1].order();
    unsigned lg = 0;
    for (std::size_t v = q; v > 1; v /= p) ++lg;
    out.gradedLogDims.push_back(lg);
  }
  return out;
}

RelAugReport relAugQuotientDims(const CoefRing& s, const PcGroup& g) {
  RelAugReport r;
  GroupAlgebra alg(s, g);
  IdealFiltration th = thetaPowers(alg, 2);
  r.thetaQuotient = th.at(1).quotientSizeOver(th.at(2));
  r.nQuotient = s.idealPower(1).size() / s.idealPower(2).size();

  const ResidueField f = s.residueField();
  const unsigned q = f.size();
  auto logQ = [&](unsigned long long v, bool& ok) {
    unsigned d = 0;
    while (v > 1) {
      if (v % q) {
        ok = false;
        return 0u;
      }
      v /= q;
      ++d;
    }
    return d;
  };
  bool ok = true;
  r.fDim = logQ(r.thetaQuotient, ok);
  r.nDim = logQ(r.nQuotient, ok);

  // independent route over the residue field as a coefficient ring
  const auto fr = f.asCoefRing();
  GroupAlgebra algF(fr.field, g);
  IdealFiltration dF = deltaPowers(algF, 2);
  r.deltaFDim = logQ(dF.at(1).quotientSizeOver(dF.at(2)), ok);

  r.match = ok && r.fDim == r.nDim + r.deltaFDim;
  return r;
}

}  // namespace mga
