#include "mga/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mga {

namespace {

struct Frac {
  long long num = 0, den = 1;

  void add(long long n, long long d) {
    num = num * d + n * den;
    den *= d;
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

unsigned long long eulerPhi(unsigned long long n) {
  unsigned long long out = n, x = n;
  for (unsigned long long p = 2; p * p <= x; ++p)
    if (x % p == 0) {
      out -= out / p;
      while (x % p == 0) x /= p;
    }
  if (x > 1) out -= out / x;
  return out;
}

std::vector<ElemIdx> cyclicElems(const PcGroup& g, ElemIdx x) {
  std::vector<ElemIdx> s{g.identity()};
  ElemIdx cur = x;
  while (cur != g.identity()) {
    s.push_back(cur);
    cur = g.multiply(cur, x);
  }
  std::sort(s.begin(), s.end());
  return s;
}

struct CyclicSubgroups {
  std::vector<std::vector<ElemIdx>> subs;          // sorted element lists
  std::vector<ElemIdx> subGen;                     // one generator per subgroup
  std::map<std::vector<ElemIdx>, std::size_t> id;  // canonical list -> index
  std::vector<std::size_t> subOf;                  // generator element -> subgroup index
};

CyclicSubgroups enumerateCyclic(const PcGroup& g) {
  if (g.order() > PcGroup::kMaxOrder) fail(Err::TooLarge, "census machinery is limited to order 2^13");
  CyclicSubgroups out;
  out.subOf.resize(g.order());
  for (ElemIdx x = 0; x < g.order(); ++x) {
    auto s = cyclicElems(g, x);
    auto [it, fresh] = out.id.try_emplace(std::move(s), out.subs.size());
    if (fresh) {
      out.subs.push_back(it->first);
      out.subGen.push_back(x);
    }
    out.subOf[x] = it->second;
  }
  return out;
}

std::size_t orbitCount(const PcGroup& g, const CyclicSubgroups& cs) {
  std::vector<ElemIdx> inv(g.order());
  for (ElemIdx x = 0; x < g.order(); ++x) inv[x] = g.inverse(x);
  std::vector<ElemIdx> gens;
  for (unsigned i = 0; i < g.ngens(); ++i) gens.push_back(g.generator(i));
  std::vector<bool> seen(cs.subs.size(), false);
  std::size_t orbits = 0;
  for (std::size_t s0 = 0; s0 < cs.subs.size(); ++s0) {
    if (seen[s0]) continue;
    ++orbits;
    std::vector<std::size_t> frontier{s0};
    seen[s0] = true;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (const std::size_t si : frontier)
        for (const ElemIdx h : gens) {
          // the conjugate subgroup is generated by the conjugated generator
          const ElemIdx cg = g.multiply(g.multiply(inv[h], cs.subGen[si]), h);
          const std::size_t ci = cs.subOf[cg];
          if (!seen[ci]) {
            seen[ci] = true;
            next.push_back(ci);
          }
        }
      frontier = std::move(next);
    }
  }
  return orbits;
}

unsigned long long weightedCount(const PcGroup& g, const CyclicSubgroups& cs) {
  std::vector<ElemIdx> inv(g.order());
  for (ElemIdx x = 0; x < g.order(); ++x) inv[x] = g.inverse(x);
  // normalizer size per distinct cyclic subgroup; h normalizes <x> iff x^h
  // generates the same subgroup
  std::vector<unsigned long long> normalizerSize(cs.subs.size(), 0);
  for (std::size_t si = 0; si < cs.subs.size(); ++si) {
    const ElemIdx gen = cs.subGen[si];
    unsigned long long count = 0;
    for (ElemIdx h = 0; h < g.order(); ++h) {
      const ElemIdx cg = g.multiply(g.multiply(inv[h], gen), h);
      if (cs.subOf[cg] == si) ++count;
    }
    normalizerSize[si] = count;
  }
  Frac total;
  for (ElemIdx x = 0; x < g.order(); ++x) {
    const unsigned long long index = g.order() / normalizerSize[cs.subOf[x]];
    total.add(1, static_cast<long long>(index * eulerPhi(g.orderOf(x))));
  }
  if (total.den != 1) fail(Err::BadParameters, "weighted cyclic-subgroup count is not integral");
  return static_cast<unsigned long long>(total.num);
}

}  // namespace

unsigned long long countCyclicSubgroupClasses(const PcGroup& gamma) {
  const CyclicSubgroups cs = enumerateCyclic(gamma);
  const std::size_t brute = orbitCount(gamma, cs);
  const unsigned long long weighted = weightedCount(gamma, cs);
  if (brute != weighted)
    fail(Err::ValidationError, "orbit count and weighted count disagree for " + gamma.name());
  return brute;
}

unsigned long long tothClosedForm(unsigned p, unsigned n, unsigned m, unsigned l) {
  if (!(n >= m && m >= l)) fail(Err::BadParameters, "closed form requires n >= m >= l >= 0");
  auto pw = [&](unsigned e) {
    unsigned long long r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p;
    return r;
  };
  // geometric sums keep everything integral:
  // (p^a - 1)/(p - 1) and (p^{2a} - 1)/(p^2 - 1)
  unsigned long long geo1 = 0, geo2 = 0;
  for (unsigned i = 0; i < m - l; ++i) geo1 += pw(i);
  for (unsigned i = 0; i < l; ++i) geo2 += pw(2 * i);
  return static_cast<unsigned long long>(n - m) * pw(m + l) + (pw(2 * l + 1) + pw(2 * l)) * geo1 +
         (static_cast<unsigned long long>(p) * p + p + 1) * geo2 + 1;
}

CsDifference csDifference(unsigned n, unsigned m, unsigned l) {
  if (!(n > m && m > l && l >= 2)) fail(Err::BadParameters, "requires n > m > l >= 2");
  CsDifference out;
  const PcGroup g = familyG(n, m, l);
  const PcGroup h = familyH(n, m, l);
  out.csG = countCyclicSubgroupClasses(g);
  out.csH = countCyclicSubgroupClasses(h);
  out.brute = static_cast<long long>(out.csH) - static_cast<long long>(out.csG);
  out.formula = static_cast<long long>(n - m) * (1LL << (m - 1)) * ((1LL << (l - 1)) - 1);
  out.agree = out.brute == out.formula;
  return out;
}

NormalityReport normalityCharacterization(const PcGroup& gamma) {
  NormalityReport rep;
  rep.groupId = gamma.name();
  const Subgroup gp = derived(gamma);
  const Subgroup cg = centralizer(gamma, gp);
  const Subgroup z = center(gamma);
  const Subgroup om = omegaRel(gamma, gp);

  std::set<std::vector<ElemIdx>> seen;
  rep.holds = true;
  for (const ElemIdx x : cg.elems()) {
    auto elems = cyclicElems(gamma, x);
    if (!seen.insert(elems).second) continue;
    Subgroup k(gamma, elems, {x});
    const bool normal = isNormal(gamma, k);
    const bool inZ = z.containsSubgroup(k);
    const bool inOm = om.containsSubgroup(k);
    if (normal != (inZ || inOm)) {
      rep.holds = false;
      rep.witness = "generator element index " + std::to_string(x);
      break;
    }
  }
  rep.cyclicSubgroupsChecked = seen.size();
  return rep;
}

CensusResult wedderburnCounts(const PcGroup& gamma) {
  CensusResult r;
  r.groupId = gamma.name();
  r.csCount = countCyclicSubgroupClasses(gamma);
  r.rationalComponents = r.csCount;

  // element conjugacy classes
  std::vector<ElemIdx> inv(gamma.order());
  for (ElemIdx x = 0; x < gamma.order(); ++x) inv[x] = gamma.inverse(x);
  std::vector<ElemIdx> gens;
  for (unsigned i = 0; i < gamma.ngens(); ++i) gens.push_back(gamma.generator(i));
  std::vector<bool> seen(gamma.order(), false);
  unsigned long long classes = 0;
  for (ElemIdx x = 0; x < gamma.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    std::vector<ElemIdx> frontier{x};
    seen[x] = true;
    while (!frontier.empty()) {
      std::vector<ElemIdx> next;
      for (const ElemIdx y : frontier)
        for (const ElemIdx h : gens) {
          const ElemIdx c = gamma.multiply(gamma.multiply(inv[h], y), h);
          if (!seen[c]) {
            seen[c] = true;
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
  }
  r.classCount = classes;
  r.complexComponents = classes;

  // degree profile needs C_Gamma(Gamma') abelian of index 2
  const Subgroup gp = derived(gamma);
  const Subgroup cg = centralizer(gamma, gp);
  if (gamma.order() > 1 && cg.order() * 2 == gamma.order() && isAbelian(cg)) {
    r.degreeProfileKnown = true;
    r.degreeOneCount = gamma.order() / gp.order();
    r.degreeTwoCount = (gamma.order() - r.degreeOneCount) / 4;
  }
  return r;
}

}  // namespace mga
