#include <numeric>
#include <random>

#include "doctest.h"
#include "mga/pcgroup.hpp"
#include "oracles.hpp"

using namespace mga;

namespace {

ElemIdx powElem(const PcGroup& g, ElemIdx x, unsigned k) {
  ElemIdx cur = g.identity();
  for (unsigned i = 0; i < k; ++i) cur = g.multiply(cur, x);
  return cur;
}

std::vector<unsigned long long> invariants(const Subgroup& s) { return abelianInvariants(s); }

}  // namespace

TEST_CASE("familyG(4,3,2): order, relations, normal forms") {
  PcGroup g = familyG(4, 3, 2);
  CHECK(g.order() == 512);
  const ElemIdx x = g.generator(0), y = g.generator(1), z = g.generator(2);
  CHECK(g.orderOf(x) == 16);
  CHECK(g.orderOf(y) == 8);
  CHECK(g.orderOf(z) == 4);
  CHECK(g.commutator(y, x) == z);
  CHECK(g.conjugate(y, x) == g.multiply(y, z));
  // y*x = x y z
  CHECK(g.multiply(y, x) == g.idx({1, 1, 1}));
  // z*x = x z^{2^l-1}
  CHECK(g.multiply(z, x) == g.idx({1, 0, 3}));
  // (xy)^2 = x^2 y^2 z^{2^l-1}
  const ElemIdx xy = g.multiply(x, y);
  CHECK(g.multiply(xy, xy) == g.idx({2, 2, 3}));
  CHECK(g.checkConsistency());
}

TEST_CASE("familyH(4,3,2): order, relations, the shared power") {
  PcGroup h = familyH(4, 3, 2);
  CHECK(h.order() == 512);
  const ElemIdx b = h.generator(0), a = h.generator(1), c = h.generator(2);
  CHECK(h.orderOf(a) == 16);
  CHECK(h.orderOf(b) == 16);
  CHECK(h.orderOf(c) == 4);
  CHECK(h.commutator(b, a) == c);
  // b^8 = a^8 != 1 and (a^8)^2 = 1
  const ElemIdx b8 = powElem(h, b, 8), a8 = powElem(h, a, 8);
  CHECK(b8 == a8);
  CHECK(b8 != h.identity());
  CHECK(h.multiply(a8, a8) == h.identity());
  CHECK(h.commutator(c, a) == powElem(h, c, 2));  // c^-2 = c^2
  CHECK(h.checkConsistency());
}

TEST_CASE("bad family parameters are rejected") {
  CHECK_THROWS_AS((void)familyG(3, 3, 2), Error);
  CHECK_THROWS_AS((void)familyH(4, 2, 2), Error);
  CHECK_THROWS_AS((void)familyG(4, 3, 1), Error);
}

TEST_CASE("dihedral16 against the octagon permutation model") {
  PcGroup d = dihedral16();
  CHECK(d.order() == 16);
  const ElemIdx u = d.generator(0), v = d.generator(1), w = d.generator(2);
  const ElemIdx uv = d.multiply(u, v);
  CHECK(d.orderOf(uv) == 8);
  CHECK(d.multiply(uv, uv) == d.idx({0, 0, 3}));  // (uv)^2 = w^3
  CHECK(d.checkConsistency());

  oracles::DihedralPerm model;
  // normal form -> permutation is a bijective homomorphism
  std::set<std::array<int, 8>> perms;
  for (ElemIdx g = 0; g < 16; ++g) {
    const ExpVec e = d.expvec(g);
    perms.insert(model.word(e[0], e[1], e[2]));
  }
  CHECK(perms.size() == 16);
  for (ElemIdx g = 0; g < 16; ++g)
    for (ElemIdx k = 0; k < 16; ++k) {
      const ExpVec eg = d.expvec(g), ek = d.expvec(k), em = d.expvec(d.multiply(g, k));
      CHECK(oracles::DihedralPerm::compose(model.word(eg[0], eg[1], eg[2]),
                                           model.word(ek[0], ek[1], ek[2])) ==
            model.word(em[0], em[1], em[2]));
    }
  (void)v;
  (void)w;
}

TEST_CASE("collection agrees with naive word rewriting") {
  std::mt19937 rng(23);
  for (const PcGroup& g : {familyG(4, 3, 2), familyH(4, 3, 2), dihedral16(), cyclic2(4)}) {
    oracles::NaiveCollector naive(g.presentation());
    for (int t = 0; t < 60; ++t) {
      const ElemIdx a = static_cast<ElemIdx>(rng() % g.order());
      const ElemIdx b = static_cast<ElemIdx>(rng() % g.order());
      CHECK(g.multiply(a, b) == g.idx(naive.multiply(g.expvec(a), g.expvec(b))));
    }
  }
}

TEST_CASE("element identities over all of D16 and sampled G(4,3,2)") {
  std::mt19937 rng(29);
  for (const PcGroup& g : {dihedral16(), familyG(4, 3, 2)}) {
    const bool full = g.order() <= 16;
    const std::size_t trials = full ? g.order() * g.order() : 4000;
    for (std::size_t t = 0; t < trials; ++t) {
      const ElemIdx a = full ? static_cast<ElemIdx>(t / g.order()) : static_cast<ElemIdx>(rng() % g.order());
      const ElemIdx b = full ? static_cast<ElemIdx>(t % g.order()) : static_cast<ElemIdx>(rng() % g.order());
      // [a,b]^-1 = [b,a]
      CHECK(g.inverse(g.commutator(a, b)) == g.commutator(b, a));
      // a^b = a [a, b]
      CHECK(g.conjugate(a, b) == g.multiply(a, g.commutator(a, b)));
    }
    for (ElemIdx a = 0; a < std::min<std::size_t>(g.order(), 64); ++a) {
      const unsigned o = g.orderOf(a);
      CHECK(powElem(g, a, o) == g.identity());
      for (unsigned k = 1; k < o; ++k)
        CHECK(g.orderOf(powElem(g, a, k)) == o / std::gcd(o, k));
      CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    }
  }
}

TEST_CASE("subgroup invariants of G(4,3,2) and H(4,3,2)") {
  PcGroup g = familyG(4, 3, 2);
  PcGroup h = familyH(4, 3, 2);

  CHECK(invariants(center(g)) == std::vector<unsigned long long>{8, 4, 2});
  CHECK(invariants(center(h)) == std::vector<unsigned long long>{8, 4, 2});

  Subgroup gp = derived(g), hp = derived(h);
  CHECK(gp.order() == 4);
  CHECK(hp.order() == 4);
  CHECK(hp == closure(h, {h.generator(2)}));  // H' = <c>

  CHECK(invariants(centralizer(g, gp)) == std::vector<unsigned long long>{16, 4, 4});
  CHECK(invariants(centralizer(h, hp)) == std::vector<unsigned long long>{8, 8, 4});

  CHECK(invariants(omegaRel(g, gp)) == std::vector<unsigned long long>{4, 2, 2});
  CHECK(invariants(omegaRel(h, hp)) == std::vector<unsigned long long>{4, 2, 2});

  CHECK(invariants(trivialSubgroup(g)).empty());

  // gamma_2 = derived; Phi = G^2 G'
  CHECK(lowerCentral(g, 2) == gp);
  CHECK(lowerCentral(h, 2) == hp);
  Subgroup phi = frattini(g);
  CHECK(g.order() / phi.order() == 4);  // two minimal generators

  // x^2, y^2 central (and a^2, b^2 in H)
  const ElemIdx x2 = powElem(g, g.generator(0), 2), y2 = powElem(g, g.generator(1), 2);
  CHECK(center(g).contains(x2));
  CHECK(center(g).contains(y2));
  CHECK(center(h).contains(powElem(h, h.generator(0), 2)));
  CHECK(center(h).contains(powElem(h, h.generator(1), 2)));

  // Omega(G : N) contains N
  CHECK(omegaRel(g, gp).containsSubgroup(gp));
  CHECK(omegaRel(g, center(g)).containsSubgroup(center(g)));
}

TEST_CASE("quotients of H(4,3,2)") {
  PcGroup h = familyH(4, 3, 2);
  const ElemIdx b = h.generator(0), a = h.generator(1), c = h.generator(2);

  SUBCASE("H / <a^16, a^-1 b, c> is cyclic of order 16") {
    const ElemIdx a16 = powElem(h, a, 16);
    const ElemIdx ainvb = h.multiply(h.inverse(a), b);
    Subgroup n = closure(h, {a16, ainvb, c});
    CHECK(n.order() == 32);
    CHECK(isNormal(h, n));
    QuotientResult q = quotientPresentation(h, n);
    CHECK(q.quotient->order() == 16);
    CHECK(q.quotient->checkConsistency());
    CHECK(invariants(fullSubgroup(*q.quotient)) == std::vector<unsigned long long>{16});
    // projection is a homomorphism with kernel N
    std::mt19937 rng(31);
    for (int t = 0; t < 200; ++t) {
      const ElemIdx p = static_cast<ElemIdx>(rng() % h.order());
      const ElemIdx r = static_cast<ElemIdx>(rng() % h.order());
      CHECK(q.projection[h.multiply(p, r)] ==
            q.quotient->multiply(q.projection[p], q.projection[r]));
    }
    for (const ElemIdx s : n.elems()) CHECK(q.projection[s] == q.quotient->identity());
  }

  SUBCASE("H / <a^2, b^2, c^4> is the dihedral group of order 16") {
    Subgroup n = closure(h, {powElem(h, a, 2), powElem(h, b, 2), powElem(h, c, 4)});
    CHECK(n.order() == 32);
    PcGroup d = dihedral16();
    // pc generators of H are (b, a, c); send them to (v, u, w)
    auto hom = homByImages(h, d, {d.generator(1), d.generator(0), d.generator(2)});
    REQUIRE(hom.has_value());
    std::size_t kernel = 0;
    for (ElemIdx p = 0; p < h.order(); ++p)
      if ((*hom)[p] == d.identity()) {
        ++kernel;
        CHECK(n.contains(p));
      }
    CHECK(kernel == n.order());
    // surjective: image hits all 16 elements
    std::set<ElemIdx> image((*hom).begin(), (*hom).end());
    CHECK(image.size() == 16);
  }

  SUBCASE("G / G is trivial") {
    PcGroup g = familyG(4, 3, 2);
    QuotientResult q = quotientPresentation(g, fullSubgroup(g));
    CHECK(q.quotient->order() == 1);
    CHECK(q.projection[g.generator(0)] == q.quotient->identity());
  }

  SUBCASE("quotient by a non-normal subgroup is rejected") {
    // <b> is not normal in H
    Subgroup k = closure(h, {b});
    REQUIRE_FALSE(isNormal(h, k));
    CHECK_THROWS_AS((void)quotientPresentation(h, k), Error);
  }
}

TEST_CASE("consistency checking beyond the table regime") {
  PcGroup big = familyG(5, 3, 2);
  CHECK(big.order() == 1024);
  CHECK(big.checkConsistency(20000));
}

TEST_CASE("abelian products and the subgroup size guard") {
  PcGroup a = abelianProduct(2, {2, 1});
  CHECK(a.order() == 8);
  CHECK(invariants(fullSubgroup(a)) == std::vector<unsigned long long>{4, 2});
  PcGroup b3 = abelianProduct(3, {2, 1, 1});
  CHECK(b3.order() == 81);
  CHECK(b3.prime() == 3);
  CHECK(invariants(fullSubgroup(b3)) == std::vector<unsigned long long>{9, 3, 3});

  PcGroup huge = abelianProduct(2, {14});
  CHECK(huge.order() == 16384);
  CHECK_THROWS_AS((void)fullSubgroup(huge), Error);
}

TEST_CASE("abelianInvariants rejects nonabelian subgroups") {
  PcGroup d = dihedral16();
  CHECK_THROWS_AS((void)abelianInvariants(fullSubgroup(d)), Error);
}
