#include "mga/groupalg.hpp"

#include <algorithm>

namespace mga {

GroupAlgebra::GroupAlgebra(CoefRing ring, const PcGroup& grp)
    : ring_(std::move(ring)), grp_(&grp), dim_(grp.order() * ring_.degree()) {
  if (dim_ > 4096) fail(Err::TooLarge, "flattened algebra dimension exceeds 4096");
}

AlgebraElement GroupAlgebra::zero() const { return {this, ModVec(dim_, 0)}; }

AlgebraElement GroupAlgebra::one() const { return basis(grp_->identity()); }

AlgebraElement GroupAlgebra::basis(ElemIdx g) const {
  AlgebraElement x = zero();
  x.v[static_cast<std::size_t>(g) * ring_.degree()] = 1;
  return x;
}

AlgebraElement GroupAlgebra::groupMinusOne(ElemIdx g) const {
  AlgebraElement x = basis(g);
  return sub(x, one());
}

AlgebraElement GroupAlgebra::scalarElem(const RingElem& s) const {
  AlgebraElement x = zero();
  setCoeff(x, grp_->identity(), s);
  return x;
}

RingElem GroupAlgebra::coeffAt(const AlgebraElement& x, ElemIdx g) const {
  const unsigned e = ring_.degree();
  RingElem c = ring_.zero();
  std::copy_n(x.v.begin() + static_cast<std::ptrdiff_t>(g) * e, e, c.c.begin());
  return c;
}

void GroupAlgebra::setCoeff(AlgebraElement& x, ElemIdx g, const RingElem& c) const {
  const unsigned e = ring_.degree();
  std::copy_n(c.c.begin(), e, x.v.begin() + static_cast<std::ptrdiff_t>(g) * e);
}

void GroupAlgebra::requireSame(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.alg != y.alg || x.alg != this || x.v.size() != dim_ || y.v.size() != dim_)
    fail(Err::AlgebraMismatch, "operands belong to different algebras");
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  requireSame(x, y);
  AlgebraElement r = x;
  rowAxpy(r.v, y.v, 1, 0, ring_.modulus());
  return r;
}

AlgebraElement GroupAlgebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  requireSame(x, y);
  AlgebraElement r = x;
  rowAxpy(r.v, y.v, ring_.modulus() - 1, 0, ring_.modulus());
  return r;
}

AlgebraElement GroupAlgebra::neg(const AlgebraElement& x) const { return sub(zero(), x); }

AlgebraElement GroupAlgebra::scale(const RingElem& s, const AlgebraElement& x) const {
  const unsigned e = ring_.degree();
  AlgebraElement r = zero();
  for (std::size_t g = 0; g < grp_->order(); ++g) {
    const RingElem c = coeffAt(x, static_cast<ElemIdx>(g));
    if (!c.isZero()) setCoeff(r, static_cast<ElemIdx>(g), ring_.mul(s, c));
  }
  (void)e;
  return r;
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  requireSame(x, y);
  const unsigned e = ring_.degree();
  const std::size_t n = grp_->order();
  AlgebraElement r = zero();
  std::vector<ElemIdx> sx, sy;
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t off = g * e;
    for (unsigned i = 0; i < e; ++i)
      if (x.v[off + i]) {
        sx.push_back(static_cast<ElemIdx>(g));
        break;
      }
  }
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t off = g * e;
    for (unsigned i = 0; i < e; ++i)
      if (y.v[off + i]) {
        sy.push_back(static_cast<ElemIdx>(g));
        break;
      }
  }
  if (e == 1) {
    const unsigned m = ring_.modulus();
    for (const ElemIdx gx : sx) {
      const unsigned cx = x.v[gx];
      for (const ElemIdx gy : sy) {
        const ElemIdx k = grp_->multiply(gx, gy);
        r.v[k] = static_cast<std::uint8_t>((r.v[k] + cx * y.v[gy]) % m);
      }
    }
    return r;
  }
  for (const ElemIdx gx : sx) {
    const RingElem cx = coeffAt(x, gx);
    for (const ElemIdx gy : sy) {
      const ElemIdx k = grp_->multiply(gx, gy);
      setCoeff(r, k, ring_.add(coeffAt(r, k), ring_.mul(cx, coeffAt(y, gy))));
    }
  }
  return r;
}

AlgebraElement GroupAlgebra::power(const AlgebraElement& x, unsigned k) const {
  AlgebraElement r = one(), base = x;
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

AlgebraElement GroupAlgebra::lieCommutator(const AlgebraElement& x, const AlgebraElement& y) const {
  return sub(mul(x, y), mul(y, x));
}

AlgebraElement GroupAlgebra::inverseOnePlusNilpotent(const AlgebraElement& x) const {
  // (1+x)^-1 = 1 - x + x^2 - ...; terminates exactly once x^j = 0
  AlgebraElement acc = one();
  AlgebraElement term = x;
  for (std::size_t j = 1; j <= dim_ + 1; ++j) {
    if (term.isZero()) return acc;
    acc = (j % 2) ? sub(acc, term) : add(acc, term);
    term = mul(term, x);
  }
  fail(Err::BadParameters, "element is not nilpotent; no exact inverse by series");
}

RingElem GroupAlgebra::augmentation(const AlgebraElement& x) const {
  RingElem s = ring_.zero();
  for (std::size_t g = 0; g < grp_->order(); ++g)
    s = ring_.add(s, coeffAt(x, static_cast<ElemIdx>(g)));
  return s;
}

bool GroupAlgebra::isCentral(const AlgebraElement& x) const {
  // commuting with every generator suffices
  for (unsigned i = 0; i < grp_->ngens(); ++i) {
    const AlgebraElement g = basis(grp_->generator(i));
    if (mul(x, g) != mul(g, x)) return false;
  }
  return true;
}

HowellModule GroupAlgebra::centralSubmodule() const {
  const std::size_t n = grp_->order();
  const unsigned e = ring_.degree();
  std::vector<bool> seen(n, false);
  HowellBuilder b(dim_, ring_.modulus());
  for (ElemIdx g = 0; g < n; ++g) {
    if (seen[g]) continue;
    // conjugacy class of g
    std::vector<ElemIdx> orbit{g};
    seen[g] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (unsigned j = 0; j < grp_->ngens(); ++j) {
        const ElemIdx c = grp_->conjugate(orbit[i], grp_->generator(j));
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    for (unsigned i = 0; i < e; ++i) {
      ModVec row(dim_, 0);
      for (const ElemIdx h : orbit) row[static_cast<std::size_t>(h) * e + i] = 1;
      b.insert(std::move(row));
    }
  }
  return b.finalize();
}

HowellModule GroupAlgebra::deltaModule() const {
  const unsigned e = ring_.degree();
  HowellBuilder b(dim_, ring_.modulus());
  for (ElemIdx g = 1; g < grp_->order(); ++g)
    for (unsigned i = 0; i < e; ++i) {
      ModVec row(dim_, 0);
      row[static_cast<std::size_t>(g) * e + i] = 1;
      row[i] = static_cast<std::uint8_t>(ring_.modulus() - 1);
      b.insert(std::move(row));
    }
  return b.finalize();
}

HowellModule GroupAlgebra::kernelOfResidueMap() const {
  const unsigned e = ring_.degree();
  HowellBuilder b(dim_, ring_.modulus());
  for (const RingElem& nu : ring_.idealGens())
    for (unsigned i = 0; i < e; ++i) {
      // t^i * nu as a coefficient placed at every group element
      RingElem ti = ring_.zero();
      ti.c[i] = 1;
      const RingElem c = ring_.mul(ti, nu);
      if (c.isZero()) continue;
      for (ElemIdx g = 0; g < grp_->order(); ++g) {
        ModVec row(dim_, 0);
        std::copy_n(c.c.begin(), e, row.begin() + static_cast<std::ptrdiff_t>(g) * e);
        b.insert(std::move(row));
      }
    }
  return b.finalize();
}

IdealFiltration::IdealFiltration(const GroupAlgebra& alg, std::vector<HowellModule> powers)
    : alg_(&alg), powers_(std::move(powers)) {}

const HowellModule& IdealFiltration::at(unsigned k) const {
  if (k >= powers_.size()) fail(Err::RangeExceeded, "filtration depth exceeded");
  return powers_[k];
}

bool IdealFiltration::memberAt(const AlgebraElement& x, unsigned k) const {
  if (x.alg != alg_) fail(Err::AlgebraMismatch, "element belongs to a different algebra");
  return at(k).contains(x.v);
}

namespace {

// The successor ideal Theta^{k+1} = Theta^k * Theta.  As a right ideal Theta
// is generated by the scalar ideal generators and (g_i - 1) over the pc
// generators, so span{u*nu, u*(g_i - 1)} right-closed under the generator
// permutations is the whole product.  The closure worklist processes exactly
// the rows that changed a pivot slot; each slot changes O(log m) times, which
// keeps the number of insertions near the rank instead of rank * |G|.
HowellModule nextIdealPower(const GroupAlgebra& alg, const HowellModule& cur,
                            const std::vector<RingElem>& gens) {
  const PcGroup& G = alg.group();
  const CoefRing& S = alg.ring();
  const unsigned e = S.degree();
  const unsigned m = S.modulus();
  const std::size_t n = G.order();
  const std::size_t d = alg.dim();
  const unsigned r = G.ngens();

  std::vector<std::vector<ElemIdx>> genPerm(r, std::vector<ElemIdx>(n));
  for (unsigned i = 0; i < r; ++i)
    for (std::size_t g = 0; g < n; ++g)
      genPerm[i][g] = G.multiply(static_cast<ElemIdx>(g), G.generator(i));

  HowellBuilder b(d, m);
  std::vector<ModVec> worklist;
  ModVec cand(d);

  auto permuteInto = [&](const ModVec& u, const std::vector<ElemIdx>& perm, ModVec& out) {
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t src = g * e, dst = static_cast<std::size_t>(perm[g]) * e;
      for (unsigned i = 0; i < e; ++i) out[dst + i] = u[src + i];
    }
  };

  // seed: u * nu and u * (g_i - 1) over the current basis
  for (const RingElem& nu : gens) {
    for (const ModVec& u : cur.rows()) {
      std::fill(cand.begin(), cand.end(), 0);
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t off = g * e;
        if (e == 1) {
          cand[off] = static_cast<std::uint8_t>((u[off] * nu.c[0]) % m);
        } else {
          RingElem c = S.zero();
          std::copy_n(u.begin() + static_cast<std::ptrdiff_t>(off), e, c.c.begin());
          if (c.isZero()) continue;
          const RingElem prod = S.mul(c, nu);
          std::copy_n(prod.c.begin(), e, cand.begin() + static_cast<std::ptrdiff_t>(off));
        }
      }
      if (rowLead(cand) != npos) b.insertLogged(cand, &worklist);
    }
  }
  for (unsigned i = 0; i < r; ++i) {
    for (const ModVec& u : cur.rows()) {
      permuteInto(u, genPerm[i], cand);
      rowAxpy(cand, u, m - 1, 0, m);
      if (rowLead(cand) != npos) b.insertLogged(cand, &worklist);
    }
  }
  // close under right multiplication by the pc generators
  while (!worklist.empty()) {
    const ModVec row = std::move(worklist.back());
    worklist.pop_back();
    for (unsigned i = 0; i < r; ++i) {
      permuteInto(row, genPerm[i], cand);
      b.insertLogged(cand, &worklist);
    }
  }
  return b.finalize();
}

IdealFiltration buildFiltration(const GroupAlgebra& alg, unsigned maxExponent,
                                const std::vector<RingElem>& gens,
                                bool stopAtZero, unsigned cap) {
  std::vector<HowellModule> powers;
  powers.push_back(HowellModule::full(alg.dim(), alg.ring().modulus()));
  const unsigned limit = stopAtZero ? cap : maxExponent;
  for (unsigned k = 0; k < limit; ++k) {
    powers.push_back(nextIdealPower(alg, powers.back(), gens));
    if (stopAtZero && powers.back().rows().empty()) break;
  }
  if (stopAtZero && !powers.back().rows().empty())
    fail(Err::DepthExceeded, "ideal powers did not reach zero within the cap");
  return IdealFiltration(alg, std::move(powers));
}

}  // namespace

IdealFiltration thetaPowers(const GroupAlgebra& alg, unsigned maxExponent) {
  return buildFiltration(alg, maxExponent, alg.ring().idealGens(), false, 0);
}

IdealFiltration deltaPowers(const GroupAlgebra& alg, unsigned maxExponent) {
  return buildFiltration(alg, maxExponent, {}, false, 0);
}

IdealFiltration deltaPowersUntilZero(const GroupAlgebra& alg, unsigned cap) {
  return buildFiltration(alg, 0, {}, true, cap);
}

ResidueAlgebraMap::ResidueAlgebraMap(const GroupAlgebra& src)
    : src_(&src),
      field_(src.ring().residueField()),
      asRing_(field_.asCoefRing()),
      target_(asRing_.field, src.group()) {}

AlgebraElement ResidueAlgebraMap::apply(const AlgebraElement& x) const {
  if (x.alg != src_) fail(Err::RingMismatch, "element is not over the source ring");
  AlgebraElement out = target_.zero();
  for (ElemIdx g = 0; g < src_->group().order(); ++g) {
    const unsigned coset = field_.project(src_->coeffAt(x, g));
    target_.setCoeff(out, g, asRing_.image[coset]);
  }
  return out;
}

HowellModule ResidueAlgebraMap::preimage(const HowellModule& sub) const {
  if (sub.dim() != target_.dim()) fail(Err::DimensionMismatch, "module is not over FG");
  const unsigned eS = src_->ring().degree();
  const unsigned eF = target_.ring().degree();
  HowellBuilder b(src_->dim(), src_->ring().modulus());
  // lift each row coefficientwise via the canonical coset representatives
  for (const ModVec& r : sub.rows()) {
    ModVec lift(src_->dim(), 0);
    for (std::size_t g = 0; g < src_->group().order(); ++g) {
      RingElem cF = target_.ring().zero();
      std::copy_n(r.begin() + static_cast<std::ptrdiff_t>(g * eF), eF, cF.c.begin());
      // find the coset whose image equals cF
      unsigned coset = 0;
      bool found = false;
      for (unsigned f = 0; f < field_.size(); ++f)
        if (asRing_.image[f] == cF) {
          coset = f;
          found = true;
          break;
        }
      if (!found) fail(Err::RingMismatch, "row entry is not in the residue field image");
      const RingElem rep = field_.rep(coset);
      std::copy_n(rep.c.begin(), eS, lift.begin() + static_cast<std::ptrdiff_t>(g * eS));
    }
    b.insert(std::move(lift));
  }
  const HowellModule ker = src_->kernelOfResidueMap();
  for (const ModVec& r : ker.rows()) b.insert(r);
  return b.finalize();
}

AlgebraElement pushForward(const GroupAlgebra& src, const GroupAlgebra& dst,
                           const std::vector<ElemIdx>& elementMap, const AlgebraElement& x) {
  if (x.alg != &src) fail(Err::AlgebraMismatch, "element is not over the source algebra");
  if (!(src.ring() == dst.ring())) fail(Err::RingMismatch, "algebra map requires a common coefficient ring");
  if (elementMap.size() != src.group().order()) fail(Err::BadParameters, "element map has wrong size");
  AlgebraElement out = dst.zero();
  for (ElemIdx g = 0; g < src.group().order(); ++g) {
    const RingElem c = src.coeffAt(x, g);
    if (c.isZero()) continue;
    const ElemIdx h = elementMap[g];
    dst.setCoeff(out, h, dst.ring().add(dst.coeffAt(out, h), c));
  }
  return out;
}

}  // namespace mga
