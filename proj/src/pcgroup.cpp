#include "mga/pcgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace mga {

namespace {

bool isPrimePowerOf(unsigned n, unsigned p) {
  if (n < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned smallestPrimeDivisor(unsigned n) {
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

}  // namespace

PcGroup::PcGroup(PcPresentation pres) : pres_(std::move(pres)) {
  const unsigned r = pres_.ngens();
  if (pres_.powerRhs.size() != r || pres_.conjRhs.size() != r)
    fail(Err::BadParameters, "presentation relation tables have wrong shape");
  order_ = 1;
  for (unsigned i = 0; i < r; ++i) {
    const unsigned o = pres_.relOrders[i];
    if (o < 2) fail(Err::BadParameters, "relative orders must be at least 2");
    if (order_ > (1u << 22) / o) fail(Err::TooLarge, "group order exceeds 2^22");
    order_ *= o;
  }
  if (r > 0) {
    prime_ = smallestPrimeDivisor(pres_.relOrders[0]);
    for (unsigned i = 0; i < r; ++i)
      if (!isPrimePowerOf(pres_.relOrders[i], prime_))
        fail(Err::BadParameters, "relative orders must be powers of one prime");
  }
  radix_.assign(r, 1);
  for (unsigned i = r; i-- > 1;) radix_[i - 1] = radix_[i] * pres_.relOrders[i];

  auto checkWord = [&](const ExpVec& w, unsigned minIdx) {
    if (w.size() != r) fail(Err::BadParameters, "relation word has wrong length");
    for (unsigned j = 0; j < r; ++j) {
      if (w[j] >= pres_.relOrders[j]) fail(Err::BadParameters, "relation word is not in normal form");
      if (j <= minIdx && w[j]) fail(Err::BadParameters, "relation word must involve later generators only");
    }
  };
  for (unsigned i = 0; i < r; ++i) {
    checkWord(pres_.powerRhs[i], i);
    if (pres_.conjRhs[i].size() != r)
      fail(Err::BadParameters, "presentation relation tables have wrong shape");
    for (unsigned j = i + 1; j < r; ++j) checkWord(pres_.conjRhs[i][j], i);
  }

  // multiplication tables pay off for nonabelian groups (orbit computations,
  // algebra products); abelian collection is already O(r) per product
  bool trivialConj = true;
  for (unsigned i = 0; i < r && trivialConj; ++i)
    for (unsigned j = i + 1; j < r && trivialConj; ++j)
      for (unsigned t = 0; t < r; ++t)
        if (pres_.conjRhs[i][j][t] != (t == j ? 1u : 0u)) {
          trivialConj = false;
          break;
        }
  if (order_ <= (trivialConj ? (1u << 10) : kTableLimit)) {
    // columns for right multiplication by each generator come straight from
    // collection; the rest of the table unfolds h = h_pred * g_j digit by
    // digit (checkConsistency re-verifies table rows against raw collection)
    std::vector<std::vector<ElemIdx>> col(r, std::vector<ElemIdx>(order_));
    for (unsigned i = 0; i < r; ++i)
      for (ElemIdx x = 0; x < order_; ++x) col[i][x] = idx(mulGenPower(expvec(x), i, 1));
    std::vector<unsigned> lastGen(order_, 0);
    for (ElemIdx h = 1; h < order_; ++h) {
      std::size_t v = h;
      for (unsigned i = 0; i < r; ++i) {
        if (v / radix_[i]) lastGen[h] = i;
        v %= radix_[i];
      }
    }
    table_.resize(order_ * order_);
    for (ElemIdx x = 0; x < order_; ++x) {
      ElemIdx* row = &table_[static_cast<std::size_t>(x) * order_];
      row[0] = x;
      for (ElemIdx h = 1; h < order_; ++h) {
        const unsigned j = lastGen[h];
        row[h] = col[j][row[h - radix_[j]]];
      }
    }
  }
}

ElemIdx PcGroup::generator(unsigned i) const {
  if (i >= ngens()) fail(Err::OutOfRange, "generator index out of range");
  return static_cast<ElemIdx>(radix_[i]);
}

ElemIdx PcGroup::idx(const ExpVec& e) const {
  std::size_t v = 0;
  for (unsigned i = 0; i < ngens(); ++i) v += e[i] * radix_[i];
  return static_cast<ElemIdx>(v);
}

ExpVec PcGroup::expvec(ElemIdx g) const {
  ExpVec e(ngens(), 0);
  std::size_t v = g;
  for (unsigned i = 0; i < ngens(); ++i) {
    e[i] = static_cast<unsigned>(v / radix_[i]);
    v %= radix_[i];
  }
  return e;
}

ExpVec PcGroup::mulVec(const ExpVec& a, const ExpVec& b) const {
  ExpVec res = a;
  for (unsigned i = 0; i < ngens(); ++i)
    if (b[i]) res = mulGenPower(std::move(res), i, b[i]);
  return res;
}

ExpVec PcGroup::mulGenPower(ExpVec u, unsigned i, unsigned e) const {
  const unsigned r = ngens();
  bool tailZero = true;
  for (unsigned j = i + 1; j < r; ++j)
    if (u[j]) {
      tailZero = false;
      break;
    }
  if (tailZero) {
    const unsigned o = pres_.relOrders[i];
    const unsigned total = u[i] + e;
    u[i] = total % o;
    ExpVec res = std::move(u);
    for (unsigned t = 0; t < total / o; ++t) res = mulVec(res, pres_.powerRhs[i]);
    return res;
  }
  ExpVec head = u;
  ExpVec tail(r, 0);
  bool trivialAction = true;
  for (unsigned j = i + 1; j < r; ++j) {
    tail[j] = u[j];
    head[j] = 0;
    if (u[j] && trivialAction) {
      const ExpVec& cw = pres_.conjRhs[i][j];
      for (unsigned t = 0; t < r; ++t)
        if (cw[t] != (t == j ? 1u : 0u)) {
          trivialAction = false;
          break;
        }
    }
  }
  ExpVec conjTail = tail;
  if (!trivialAction)
    for (unsigned t = 0; t < e; ++t) conjTail = conjugateTailByGen(conjTail, i);
  return mulVec(mulGenPower(std::move(head), i, e), conjTail);
}

ExpVec PcGroup::conjugateTailByGen(const ExpVec& tail, unsigned i) const {
  const unsigned r = ngens();
  ExpVec res(r, 0);
  for (unsigned j = i + 1; j < r; ++j) {
    if (!tail[j]) continue;
    res = mulVec(res, powVec(pres_.conjRhs[i][j], tail[j]));
  }
  return res;
}

ExpVec PcGroup::powVec(const ExpVec& w, unsigned e) const {
  ExpVec res(ngens(), 0);
  ExpVec base = w;
  while (e) {
    if (e & 1) res = mulVec(res, base);
    e >>= 1;
    if (e) base = mulVec(base, base);
  }
  return res;
}

ElemIdx PcGroup::multiplyNoTable(ElemIdx g, ElemIdx h) const {
  return idx(mulVec(expvec(g), expvec(h)));
}

ElemIdx PcGroup::multiply(ElemIdx g, ElemIdx h) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(g) * order_ + h];
  return multiplyNoTable(g, h);
}

ElemIdx PcGroup::power(ElemIdx g, long long k) const {
  const unsigned ord = orderOf(g);
  long long r = k % ord;
  if (r < 0) r += ord;
  ElemIdx res = identity(), base = g;
  unsigned long long e = static_cast<unsigned long long>(r);
  while (e) {
    if (e & 1) res = multiply(res, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return res;
}

unsigned PcGroup::orderOf(ElemIdx g) const {
  if (g == identity()) return 1;
  // p-group: order of g is p^k
  unsigned ord = 1;
  ElemIdx cur = g;
  while (cur != identity()) {
    ElemIdx next = cur;
    for (unsigned t = 1; t < prime_; ++t) next = multiply(next, cur);
    cur = next;
    ord *= prime_;
  }
  return ord;
}

ElemIdx PcGroup::inverse(ElemIdx g) const {
  if (g == identity()) return g;
  ElemIdx res = identity(), cur = g;
  const unsigned ord = orderOf(g);
  // g^{ord-1}
  unsigned e = ord - 1;
  while (e) {
    if (e & 1) res = multiply(res, cur);
    e >>= 1;
    if (e) cur = multiply(cur, cur);
  }
  return res;
}

ElemIdx PcGroup::conjugate(ElemIdx g, ElemIdx h) const {
  return multiply(multiply(inverse(h), g), h);
}

ElemIdx PcGroup::commutator(ElemIdx g, ElemIdx h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

bool PcGroup::checkConsistency(std::size_t randomTriples) const {
  const std::size_t n = order_;
  // identity neutrality under collection
  for (ElemIdx g = 0; g < std::min<std::size_t>(n, 4096); ++g) {
    if (multiplyNoTable(identity(), g) != g) return false;
    if (multiplyNoTable(g, identity()) != g) return false;
  }
  // the unfolded table must agree with raw collection
  if (!table_.empty()) {
    std::mt19937_64 trng(0xBADA55);
    const std::size_t pairs = std::min<std::size_t>(n * n, 4096);
    for (std::size_t t = 0; t < pairs; ++t) {
      const ElemIdx g = static_cast<ElemIdx>(trng() % n);
      const ElemIdx h = static_cast<ElemIdx>(trng() % n);
      if (table_[static_cast<std::size_t>(g) * n + h] != multiplyNoTable(g, h)) return false;
    }
  }
  if (n <= (1u << 9) && !table_.empty()) {
    for (ElemIdx g = 0; g < n; ++g)
      for (ElemIdx h = 0; h < n; ++h) {
        const ElemIdx gh = table_[static_cast<std::size_t>(g) * n + h];
        for (ElemIdx k = 0; k < n; ++k)
          if (table_[static_cast<std::size_t>(gh) * n + k] !=
              table_[static_cast<std::size_t>(g) * n + table_[static_cast<std::size_t>(h) * n + k]])
            return false;
      }
    return true;
  }
  // generator-pair schedule: (g, gen_i, gen_j) triples for all g
  for (ElemIdx g = 0; g < std::min<std::size_t>(n, 4096); ++g)
    for (unsigned i = 0; i < ngens(); ++i)
      for (unsigned j = 0; j < ngens(); ++j) {
        const ElemIdx a = generator(i), b = generator(j);
        if (multiply(multiply(g, a), b) != multiply(g, multiply(a, b))) return false;
      }
  std::mt19937_64 rng(0xC0FFEE);
  for (std::size_t t = 0; t < randomTriples; ++t) {
    const ElemIdx g = static_cast<ElemIdx>(rng() % n);
    const ElemIdx h = static_cast<ElemIdx>(rng() % n);
    const ElemIdx k = static_cast<ElemIdx>(rng() % n);
    if (multiply(multiply(g, h), k) != multiply(g, multiply(h, k))) return false;
  }
  return true;
}

Subgroup::Subgroup(const PcGroup& g, std::vector<ElemIdx> sortedElems, std::vector<ElemIdx> gens)
    : group_(&g), elems_(std::move(sortedElems)), gens_(std::move(gens)) {}

bool Subgroup::contains(ElemIdx g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool Subgroup::containsSubgroup(const Subgroup& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

Subgroup closure(const PcGroup& g, std::vector<ElemIdx> gens) {
  if (g.order() > PcGroup::kMaxOrder) fail(Err::TooLarge, "subgroup machinery is limited to order 2^13");
  std::vector<bool> in(g.order(), false);
  std::vector<ElemIdx> members{g.identity()};
  in[g.identity()] = true;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const ElemIdx s : gens) {
      const ElemIdx y = g.multiply(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members), std::move(gens));
}

Subgroup trivialSubgroup(const PcGroup& g) { return Subgroup(g, {g.identity()}, {}); }

Subgroup fullSubgroup(const PcGroup& g) {
  if (g.order() > PcGroup::kMaxOrder) fail(Err::TooLarge, "subgroup machinery is limited to order 2^13");
  std::vector<ElemIdx> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<ElemIdx> gens;
  for (unsigned i = 0; i < g.ngens(); ++i) gens.push_back(g.generator(i));
  return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup center(const PcGroup& g) {
  if (g.order() > PcGroup::kMaxOrder) fail(Err::TooLarge, "subgroup machinery is limited to order 2^13");
  std::vector<ElemIdx> out;
  for (ElemIdx x = 0; x < g.order(); ++x) {
    bool central = true;
    for (unsigned i = 0; i < g.ngens() && central; ++i) {
      const ElemIdx s = g.generator(i);
      central = g.multiply(x, s) == g.multiply(s, x);
    }
    if (central) out.push_back(x);
  }
  return Subgroup(g, out, out);
}

Subgroup derived(const PcGroup& g) {
  if (g.order() > PcGroup::kMaxOrder) fail(Err::TooLarge, "subgroup machinery is limited to order 2^13");
  std::set<ElemIdx> gens;
  for (ElemIdx x = 0; x < g.order(); ++x)
    for (unsigned i = 0; i < g.ngens(); ++i) gens.insert(g.commutator(x, g.generator(i)));
  // commutators with generators normally generate gamma_2 for nilpotent groups,
  // but take the full closure under conjugation to be exact
  Subgroup d = closure(g, std::vector<ElemIdx>(gens.begin(), gens.end()));
  while (true) {
    std::set<ElemIdx> more;
    for (const ElemIdx s : d.elems())
      for (unsigned i = 0; i < g.ngens(); ++i) {
        const ElemIdx c = g.conjugate(s, g.generator(i));
        if (!d.contains(c)) more.insert(c);
      }
    if (more.empty()) break;
    std::vector<ElemIdx> ng = d.elems();
    ng.insert(ng.end(), more.begin(), more.end());
    d = closure(g, ng);
  }
  return d;
}

Subgroup lowerCentral(const PcGroup& g, unsigned n) {
  if (n < 1) fail(Err::BadParameters, "lower central series starts at 1");
  Subgroup cur = fullSubgroup(g);
  for (unsigned k = 2; k <= n; ++k) {
    std::set<ElemIdx> gens;
    for (const ElemIdx s : cur.elems())
      for (ElemIdx x = 0; x < g.order(); ++x) gens.insert(g.commutator(s, x));
    cur = closure(g, std::vector<ElemIdx>(gens.begin(), gens.end()));
    if (cur.order() == 1) break;
  }
  return cur;
}

Subgroup omegaRel(const PcGroup& g, const Subgroup& n) {
  std::vector<ElemIdx> gens;
  for (ElemIdx x = 0; x < g.order(); ++x)
    if (n.contains(g.power(x, g.prime()))) gens.push_back(x);
  return closure(g, std::move(gens));
}

Subgroup omegaK(const PcGroup& g, unsigned k) {
  unsigned long long pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= g.prime();
  std::vector<ElemIdx> gens;
  for (ElemIdx x = 0; x < g.order(); ++x)
    if (g.orderOf(x) <= pk) gens.push_back(x);
  return closure(g, std::move(gens));
}

Subgroup agemo(const PcGroup& g, unsigned k) {
  unsigned long long pk = 1;
  for (unsigned i = 0; i < k; ++i) pk *= g.prime();
  std::vector<ElemIdx> gens;
  for (ElemIdx x = 0; x < g.order(); ++x) gens.push_back(g.power(x, static_cast<long long>(pk)));
  return closure(g, std::move(gens));
}

Subgroup agemoOf(const Subgroup& k, unsigned j) {
  const PcGroup& g = k.group();
  unsigned long long pj = 1;
  for (unsigned i = 0; i < j; ++i) pj *= g.prime();
  std::vector<ElemIdx> gens;
  for (const ElemIdx s : k.elems()) gens.push_back(g.power(s, static_cast<long long>(pj)));
  return closure(g, std::move(gens));
}

Subgroup frattini(const PcGroup& g) {
  // for a finite p-group, Phi(G) = G^p G'
  Subgroup d = derived(g);
  Subgroup a = agemo(g, 1);
  std::vector<ElemIdx> gens = d.elems();
  gens.insert(gens.end(), a.elems().begin(), a.elems().end());
  return closure(g, std::move(gens));
}

Subgroup centralizer(const PcGroup& g, const Subgroup& k) {
  std::vector<ElemIdx> out;
  for (ElemIdx x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (const ElemIdx s : k.gens().empty() ? k.elems() : k.gens()) {
      if (g.multiply(x, s) != g.multiply(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.push_back(x);
  }
  return Subgroup(g, out, out);
}

Subgroup normalizer(const PcGroup& g, const Subgroup& k) {
  const auto& gens = k.gens().empty() ? k.elems() : k.gens();
  std::vector<ElemIdx> out;
  for (ElemIdx x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (const ElemIdx s : gens)
      if (!k.contains(g.conjugate(s, x))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(x);
  }
  return Subgroup(g, out, out);
}

bool isNormal(const PcGroup& g, const Subgroup& k) {
  for (const ElemIdx s : k.gens().empty() ? k.elems() : k.gens())
    for (unsigned i = 0; i < g.ngens(); ++i)
      if (!k.contains(g.conjugate(s, g.generator(i)))) return false;
  return true;
}

bool isAbelian(const Subgroup& k) {
  const PcGroup& g = k.group();
  for (const ElemIdx a : k.elems())
    for (const ElemIdx b : k.elems()) {
      if (b > a) break;
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
    }
  return true;
}

std::vector<unsigned long long> abelianInvariants(const Subgroup& k) {
  if (!isAbelian(k)) fail(Err::NotAbelian, "abelian invariants require an abelian subgroup");
  const PcGroup& g = k.group();
  const std::size_t n = k.order();
  if (n == 1) return {};
  const unsigned p = g.prime();
  // N_j = #{x in K : x^{p^j} = 1} = p^{sum min(lambda_i, j)}
  std::vector<unsigned> s;  // s[j-1] = #{i : lambda_i >= j}
  std::size_t prev = 1;
  unsigned long long pj = 1;
  while (prev < n) {
    pj *= p;
    std::size_t count = 0;
    for (const ElemIdx x : k.elems())
      if (g.orderOf(x) <= pj) ++count;
    unsigned logRatio = 0;
    for (std::size_t r = count / prev; r > 1; r /= p) ++logRatio;
    s.push_back(logRatio);
    prev = count;
  }
  std::vector<unsigned long long> out;
  for (unsigned i = 0; i < s[0]; ++i) {
    unsigned e = 0;
    for (unsigned v : s)
      if (v > i) ++e;
    unsigned long long q = 1;
    for (unsigned t = 0; t < e; ++t) q *= p;
    out.push_back(q);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

QuotientResult quotientPresentation(const PcGroup& g, const Subgroup& n) {
  if (!isNormal(g, n)) fail(Err::NotNormal, "quotient requires a normal subgroup");
  const std::size_t ord = g.order();
  // cosets, canonical representative = minimal element index
  std::vector<std::uint32_t> cosetOf(ord, UINT32_MAX);
  std::vector<ElemIdx> reps;
  for (ElemIdx x = 0; x < ord; ++x) {
    if (cosetOf[x] != UINT32_MAX) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const ElemIdx s : n.elems()) cosetOf[g.multiply(x, s)] = id;
  }
  const std::size_t q = reps.size();
  auto qmul = [&](std::uint32_t a, std::uint32_t b) {
    return cosetOf[g.multiply(reps[a], reps[b])];
  };
  const unsigned p = q == 1 ? 2 : g.prime();
  auto qpow = [&](std::uint32_t a, unsigned e) {
    std::uint32_t r = cosetOf[g.identity()];
    for (unsigned i = 0; i < e; ++i) r = qmul(r, a);
    return r;
  };
  auto qinv = [&](std::uint32_t a) {
    const std::uint32_t e = cosetOf[g.identity()];
    std::uint32_t prev = e, cur = a;
    while (cur != e) {
      prev = cur;
      cur = qmul(cur, a);
    }
    return prev == e ? e : prev;
  };

  // ascending central composition chain of Q with factors of order p
  std::vector<std::uint32_t> genCosets;
  for (unsigned i = 0; i < g.ngens(); ++i) genCosets.push_back(cosetOf[g.generator(i)]);
  std::set<std::uint32_t> M{cosetOf[g.identity()]};
  std::vector<std::uint32_t> chainGens;  // bottom-up
  std::vector<std::set<std::uint32_t>> chainSets{M};
  while (M.size() < q) {
    std::uint32_t found = UINT32_MAX;
    for (std::uint32_t x = 0; x < q && found == UINT32_MAX; ++x) {
      if (M.count(x)) continue;
      if (!M.count(qpow(x, p))) continue;
      bool central = true;
      for (const std::uint32_t s : genCosets) {
        // [x, s] = x^-1 s^-1 x s must lie in M
        const std::uint32_t comm = qmul(qmul(qinv(x), qinv(s)), qmul(x, s));
        if (!M.count(comm)) {
          central = false;
          break;
        }
      }
      if (central) found = x;
    }
    if (found == UINT32_MAX) fail(Err::BadParameters, "could not refine a central series (not a p-group?)");
    chainGens.push_back(found);
    std::set<std::uint32_t> next;
    std::uint32_t xp = cosetOf[g.identity()];
    for (unsigned t = 0; t < p; ++t) {
      for (const std::uint32_t s : M) next.insert(qmul(xp, s));
      xp = qmul(xp, found);
    }
    M = std::move(next);
    chainSets.push_back(M);
  }

  // pc sequence top-down
  std::vector<std::uint32_t> pcSeq(chainGens.rbegin(), chainGens.rend());
  const unsigned s = static_cast<unsigned>(pcSeq.size());
  // chainSets[k] = subgroup generated by the bottom k chain generators, so the
  // subgroup generated by pcSeq[i..] is chainSets[s - i]
  auto express = [&](std::uint32_t y) {
    ExpVec e(s, 0);
    std::uint32_t cur = y;
    for (unsigned i = 0; i < s; ++i) {
      const auto& below = chainSets[s - i - 1];
      const std::uint32_t gi = pcSeq[i];
      const std::uint32_t giInv = qinv(gi);
      unsigned t = 0;
      while (!below.count(cur) && t < p) {
        cur = qmul(giInv, cur);
        ++t;
      }
      if (t == p && !below.count(cur))
        fail(Err::BadParameters, "failed to express a coset along the chain");
      e[i] = t;
    }
    return e;
  };

  PcPresentation pres;
  pres.relOrders.assign(s, p);
  pres.powerRhs.resize(s);
  pres.conjRhs.assign(s, std::vector<ExpVec>(s, ExpVec(s, 0)));
  for (unsigned i = 0; i < s; ++i) pres.powerRhs[i] = express(qpow(pcSeq[i], p));
  for (unsigned i = 0; i < s; ++i)
    for (unsigned j = i + 1; j < s; ++j) {
      const std::uint32_t conj = qmul(qmul(qinv(pcSeq[i]), pcSeq[j]), pcSeq[i]);
      pres.conjRhs[i][j] = express(conj);
    }
  pres.name = g.name() + "/N";
  auto quo = std::make_shared<PcGroup>(std::move(pres));
  std::vector<ElemIdx> proj(ord);
  std::vector<ElemIdx> byCoset(q);
  for (std::uint32_t c = 0; c < q; ++c) byCoset[c] = quo->idx(express(c));
  for (ElemIdx x = 0; x < ord; ++x) proj[x] = byCoset[cosetOf[x]];
  return {std::move(quo), std::move(proj)};
}

std::optional<std::vector<ElemIdx>> homByImages(const PcGroup& src, const PcGroup& dst,
                                                const std::vector<ElemIdx>& images) {
  const unsigned r = src.ngens();
  if (images.size() != r) fail(Err::BadParameters, "need one image per generator");
  auto applyWord = [&](const ExpVec& w) {
    ElemIdx res = dst.identity();
    for (unsigned i = 0; i < r; ++i)
      if (w[i]) res = dst.multiply(res, dst.power(images[i], w[i]));
    return res;
  };
  const auto& pres = src.presentation();
  for (unsigned i = 0; i < r; ++i)
    if (dst.power(images[i], pres.relOrders[i]) != applyWord(pres.powerRhs[i])) return std::nullopt;
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      if (dst.conjugate(images[j], images[i]) != applyWord(pres.conjRhs[i][j])) return std::nullopt;
  std::vector<ElemIdx> map(src.order());
  for (ElemIdx x = 0; x < src.order(); ++x) map[x] = applyWord(src.expvec(x));
  return map;
}

PcGroup familyG(unsigned n, unsigned m, unsigned l) {
  if (!(n > m && m > l && l >= 2)) fail(Err::BadParameters, "familyG requires n > m > l >= 2");
  PcPresentation p;
  const unsigned N = 1u << n, M = 1u << m, L = 1u << l;
  p.relOrders = {N, M, L};
  p.powerRhs = {ExpVec{0, 0, 0}, ExpVec{0, 0, 0}, ExpVec{0, 0, 0}};
  p.conjRhs.assign(3, std::vector<ExpVec>(3, ExpVec{0, 0, 0}));
  p.conjRhs[0][1] = {0, 1, 1};      // y^x = y z
  p.conjRhs[0][2] = {0, 0, L - 1};  // z^x = z^-1
  p.conjRhs[1][2] = {0, 0, L - 1};  // z^y = z^-1
  p.name = "G(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
  return PcGroup(std::move(p));
}

PcGroup familyH(unsigned n, unsigned m, unsigned l) {
  if (!(n > m && m > l && l >= 2)) fail(Err::BadParameters, "familyH requires n > m > l >= 2");
  // pc sequence (b, a, c): the power relation b^{2^m} = a^{2^m} then lands in
  // later generators as pc form requires
  PcPresentation p;
  const unsigned N = 1u << n, M = 1u << m, L = 1u << l;
  p.relOrders = {M, N, L};
  p.powerRhs = {ExpVec{0, M, 0}, ExpVec{0, 0, 0}, ExpVec{0, 0, 0}};
  p.conjRhs.assign(3, std::vector<ExpVec>(3, ExpVec{0, 0, 0}));
  p.conjRhs[0][1] = {0, 1, L - 1};  // a^b = a c^-1
  p.conjRhs[0][2] = {0, 0, L - 1};  // c^b = c^-1
  p.conjRhs[1][2] = {0, 0, L - 1};  // c^a = c^-1
  p.name = "H(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ")";
  return PcGroup(std::move(p));
}

PcGroup cyclic2(unsigned n) { return cyclicGroup(1u << n); }

PcGroup cyclicGroup(unsigned order) {
  PcPresentation p;
  p.name = "C" + std::to_string(order);
  if (order > 1) {
    p.relOrders = {order};
    p.powerRhs = {ExpVec{0}};
    p.conjRhs.assign(1, std::vector<ExpVec>(1, ExpVec{0}));
  }
  return PcGroup(std::move(p));
}

PcGroup dihedral16() {
  PcPresentation p;
  p.relOrders = {2, 2, 4};
  p.powerRhs = {ExpVec{0, 0, 0}, ExpVec{0, 0, 0}, ExpVec{0, 0, 0}};
  p.conjRhs.assign(3, std::vector<ExpVec>(3, ExpVec{0, 0, 0}));
  p.conjRhs[0][1] = {0, 1, 1};  // v^u = v w
  p.conjRhs[0][2] = {0, 0, 3};  // w^u = w^-1
  p.conjRhs[1][2] = {0, 0, 3};  // w^v = w^-1
  p.name = "D16";
  return PcGroup(std::move(p));
}

PcGroup abelianProduct(unsigned p, const std::vector<unsigned>& exps) {
  PcPresentation pres;
  std::string nm;
  for (const unsigned e : exps) {
    if (e == 0) continue;
    unsigned o = 1;
    for (unsigned i = 0; i < e; ++i) o *= p;
    pres.relOrders.push_back(o);
    nm += (nm.empty() ? "" : "x") + ("C" + std::to_string(o));
  }
  const unsigned r = static_cast<unsigned>(pres.relOrders.size());
  pres.powerRhs.assign(r, ExpVec(r, 0));
  pres.conjRhs.assign(r, std::vector<ExpVec>(r, ExpVec(r, 0)));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j) pres.conjRhs[i][j][j] = 1;  // g_j^{g_i} = g_j
  pres.name = nm.empty() ? "C1" : nm;
  return PcGroup(std::move(pres));
}

}  // namespace mga
