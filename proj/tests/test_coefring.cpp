#include <set>

#include "doctest.h"
#include "mga/coefring.hpp"
#include "oracles.hpp"

using mga::CoefRing;
using mga::Poly;
using mga::RingElem;

namespace {

std::set<std::size_t> idxSet(const CoefRing& r, const std::vector<RingElem>& xs) {
  std::set<std::size_t> s;
  for (const auto& x : xs) s.insert(r.indexOf(x));
  return s;
}

const Poly kT{0, 1};
const Poly kTSquared{0, 0, 1};
const Poly kTSquaredMinus2{-2, 0, 1};

}  // namespace

TEST_CASE("Z/4Z with n = (2): the canonical instance") {
  CoefRing s = CoefRing::make(4, kT, {Poly{2}});
  CHECK(s.size() == 4);
  CHECK(s.flags().idealIsMaximal);
  CHECK(s.flags().quotientChar == 2);
  CHECK(s.flags().twoInIdeal);
  CHECK_FALSE(s.flags().twoInIdealSquared);
  CHECK(idxSet(s, s.idealPower(1)) == std::set<std::size_t>{0, 2});
  CHECK(idxSet(s, s.idealPower(2)) == std::set<std::size_t>{0});
}

TEST_CASE("Z/4Z[t]/(t^2) with n = (2, t)") {
  CoefRing s = CoefRing::make(4, kTSquared, {Poly{2}, kT});
  CHECK(s.size() == 16);
  CHECK(s.flags().idealIsMaximal);
  CHECK(s.flags().quotientChar == 2);
  CHECK(s.flags().twoInIdeal);
  CHECK_FALSE(s.flags().twoInIdealSquared);
  // n^2 = (2t) = {0, 2t}
  const RingElem twoT = s.fromPoly(Poly{0, 2});
  CHECK(idxSet(s, s.idealPower(2)) == std::set<std::size_t>{0, s.indexOf(twoT)});
}

TEST_CASE("the excluded ring Z/4Z[t]/(t^2 - 2) with n = (t) has 2 in n^2") {
  CoefRing s = CoefRing::make(4, kTSquaredMinus2, {kT});
  CHECK(s.flags().idealIsMaximal);
  CHECK(s.flags().quotientChar == 2);
  CHECK(s.flags().twoInIdeal);
  CHECK(s.flags().twoInIdealSquared);  // 2 = t^2 in n^2
}

TEST_CASE("non-monic reducer is rejected") {
  CHECK_THROWS_AS((void)CoefRing::make(4, Poly{1, 2}, {}), mga::Error);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const CoefRing& s : {CoefRing::make(4, kT, {Poly{2}}),
                            CoefRing::make(4, kTSquared, {Poly{2}, kT}),
                            CoefRing::make(4, kTSquaredMinus2, {kT}),
                            CoefRing::make(4, Poly{1, 1, 1}, {Poly{2}}),
                            CoefRing::make(6, kT, {Poly{2}})}) {
    const std::size_t n = s.size();
    REQUIRE(n <= 256);
    for (std::size_t ia = 0; ia < n; ++ia) {
      const RingElem a = s.elementAt(ia);
      CHECK(s.mul(a, s.one()) == a);
      CHECK(s.add(a, s.zero()) == a);
      CHECK(s.add(a, s.neg(a)) == s.zero());
      for (std::size_t ib = 0; ib < n; ++ib) {
        const RingElem b = s.elementAt(ib);
        CHECK(s.add(a, b) == s.add(b, a));
        CHECK(s.mul(a, b) == s.mul(b, a));
        for (std::size_t ic = 0; ic < n; ++ic) {
          const RingElem c = s.elementAt(ic);
          CHECK(s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)));
          CHECK(s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("quotient map is a surjective ring homomorphism with kernel n") {
  for (const CoefRing& s : {CoefRing::make(4, kT, {Poly{2}}),
                            CoefRing::make(4, kTSquared, {Poly{2}, kT}),
                            CoefRing::make(4, Poly{1, 1, 1}, {Poly{2}})}) {
    const mga::ResidueField f = s.residueField();
    const auto n1 = idxSet(s, s.idealPower(1));
    std::set<unsigned> image;
    for (std::size_t ia = 0; ia < s.size(); ++ia) {
      const RingElem a = s.elementAt(ia);
      image.insert(f.project(a));
      CHECK((f.project(a) == 0) == (n1.count(ia) > 0));
      for (std::size_t ib = 0; ib < s.size(); ++ib) {
        const RingElem b = s.elementAt(ib);
        CHECK(f.project(s.add(a, b)) == f.add(f.project(a), f.project(b)));
        CHECK(f.project(s.mul(a, b)) == f.mul(f.project(a), f.project(b)));
      }
    }
    CHECK(image.size() == f.size());
  }
}

TEST_CASE("residue fields: F2 and F4, with explicit ring forms") {
  CoefRing s4 = CoefRing::make(4, kT, {Poly{2}});
  mga::ResidueField f2 = s4.residueField();
  CHECK(f2.size() == 2);
  CHECK(f2.charP() == 2);
  CHECK(f2.inv(1) == 1);

  CoefRing gr = CoefRing::make(4, Poly{1, 1, 1}, {Poly{2}});  // Z/4[t]/(t^2+t+1)
  mga::ResidueField f4 = gr.residueField();
  CHECK(f4.size() == 4);
  CHECK(f4.charP() == 2);
  for (unsigned a = 1; a < 4; ++a) CHECK(f4.mul(a, f4.inv(a)) == f4.project(gr.one()));

  const auto as = f4.asCoefRing();
  CHECK(as.field.modulus() == 2);
  CHECK(as.field.degree() == 2);
  // the coset -> ring map is an isomorphism
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(as.image[f4.add(a, b)] == as.field.add(as.image[a], as.image[b]));
      CHECK(as.image[f4.mul(a, b)] == as.field.mul(as.image[a], as.image[b]));
    }
}

TEST_CASE("p-adic valuation") {
  CHECK(mga::padicValuation(2, 28) == 2);
  CHECK(mga::padicValuation(2, 12870) == 1);
  CHECK(mga::padicValuation(3, 9) == 2);
  CHECK_THROWS_AS((void)mga::padicValuation(2, 0), mga::Error);
  // 12870 really is C(16, 8)
  oracles::BigNat c = oracles::binomialExact(16, 8);
  CHECK(c.modSmall(1000000) == 12870);
}

TEST_CASE("binomial valuation by Kummer carries") {
  CHECK(mga::binomialValuation(2, 3, 2) == 2);
  CHECK(mga::binomialValuation(2, 4, 8) == 1);
  // exact computation contradicts the displayed closed form (p-1)(n - nu(i))
  // at (3, 2, 1): the correct value is n - nu(i) = 2, not 4
  CHECK(mga::binomialValuation(3, 2, 1) == 2);
  CHECK(oracles::valuationOfBig(oracles::binomialExact(9, 1), 3) == 2);
  CHECK_THROWS_AS((void)mga::binomialValuation(2, 3, 0), mga::Error);
  CHECK_THROWS_AS((void)mga::binomialValuation(2, 3, 8), mga::Error);
}

TEST_CASE("Kummer matches n - nu_2(i) and exact binomials for p = 2") {
  for (unsigned n = 1; n <= 8; ++n) {
    const unsigned long long pn = 1ULL << n;
    for (unsigned long long i = 1; i < pn; ++i) {
      const unsigned v = mga::binomialValuation(2, n, i);
      CHECK(v == n - mga::padicValuation(2, i));
      CHECK(v == oracles::valuationOfBig(oracles::binomialExact(pn, i), 2));
    }
  }
}

TEST_CASE("Kummer matches exact binomials for odd p") {
  for (unsigned p : {3u, 5u}) {
    for (unsigned n = 1; n <= 3; ++n) {
      unsigned long long pn = 1;
      for (unsigned k = 0; k < n; ++k) pn *= p;
      for (unsigned long long i = 1; i < pn; ++i)
        CHECK(mga::binomialValuation(p, n, i) ==
              oracles::valuationOfBig(oracles::binomialExact(pn, i), p));
    }
  }
}

TEST_CASE("idealPower(0) is all of S") {
  CoefRing s = CoefRing::make(4, kTSquared, {Poly{2}, kT});
  CHECK(s.idealPower(0).size() == 16);
}
