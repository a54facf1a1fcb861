#pragma once

// Test-only oracles, independent of the library's implementation paths:
//  - exhaustive span enumeration over Z/mZ (against Howell spans)
//  - exact big-integer binomial coefficients (against Kummer carry counts)
//  - naive word rewriting on pc presentations (against collection)
//  - a permutation model of the dihedral group of order 16

#include <algorithm>
#include <cstdint>
#include <list>
#include <set>
#include <vector>

#include "mga/pcgroup.hpp"

namespace oracles {

using ModVec = std::vector<std::uint8_t>;

inline std::set<ModVec> spanSet(const std::vector<ModVec>& rows, std::size_t d, unsigned m) {
  std::set<ModVec> s;
  s.insert(ModVec(d, 0));
  std::vector<ModVec> frontier{ModVec(d, 0)};
  while (!frontier.empty()) {
    std::vector<ModVec> next;
    for (const auto& v : frontier)
      for (const auto& r : rows) {
        ModVec w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = static_cast<std::uint8_t>((v[i] + r[i]) % m);
        if (s.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return s;
}

// little-endian base-2^32 natural number, just enough for exact binomials
class BigNat {
 public:
  explicit BigNat(std::uint64_t v = 0) {
    while (v) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  void mulSmall(std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      const std::uint64_t t = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }

  // exact division by a small factor; caller guarantees divisibility
  void divSmall(std::uint64_t f) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / f);
      rem = cur % f;
    }
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::uint64_t modSmall(std::uint64_t f) const {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) rem = ((rem << 32) | limbs_[i]) % f;
    return rem;
  }

  bool isZero() const { return limbs_.empty(); }

 private:
  std::vector<std::uint32_t> limbs_;
};

// C(n, k) exactly, multiplicative formula with exact intermediate divisions
inline BigNat binomialExact(std::uint64_t n, std::uint64_t k) {
  BigNat c(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    c.mulSmall(n - i);
    c.divSmall(i + 1);
  }
  return c;
}

inline unsigned valuationOfBig(BigNat v, unsigned p) {
  unsigned out = 0;
  while (!v.isZero() && v.modSmall(p) == 0) {
    v.divSmall(p);
    ++out;
  }
  return out;
}

// Naive normal-form computation on a pc presentation: a word is a list of
// generator indices; rewrite the leftmost violation until none remains.
// Completely independent of the collection used by PcGroup.
class NaiveCollector {
 public:
  explicit NaiveCollector(const mga::PcPresentation& p) : p_(p) {}

  mga::ExpVec normalForm(std::vector<unsigned> word) const {
    std::list<unsigned> w(word.begin(), word.end());
    bool changed = true;
    while (changed) {
      changed = false;
      // exponent overflow: o_i consecutive copies of generator i
      for (auto it = w.begin(); it != w.end() && !changed;) {
        auto run = it;
        unsigned count = 0;
        const unsigned gi = *it;
        while (run != w.end() && *run == gi) {
          ++run;
          ++count;
        }
        if (count >= p_.relOrders[gi]) {
          auto erasedEnd = it;
          std::advance(erasedEnd, p_.relOrders[gi]);
          auto pos = w.erase(it, erasedEnd);
          for (unsigned j = p_.ngens(); j-- > 0;)
            for (unsigned t = 0; t < p_.powerRhs[gi][j]; ++t) pos = w.insert(pos, j);
          changed = true;
          break;
        }
        it = run;
      }
      if (changed) continue;
      // adjacency violation: g_j g_i with j > i becomes g_i (g_j^{g_i})
      for (auto it = w.begin(); it != w.end(); ++it) {
        auto nxt = std::next(it);
        if (nxt == w.end()) break;
        if (*it > *nxt) {
          const unsigned j = *it, i = *nxt;
          auto pos = w.erase(it, std::next(nxt));
          std::vector<unsigned> repl{i};
          for (unsigned g = 0; g < p_.ngens(); ++g)
            for (unsigned t = 0; t < p_.conjRhs[i][j][g]; ++t) repl.push_back(g);
          for (auto rit = repl.rbegin(); rit != repl.rend(); ++rit) pos = w.insert(pos, *rit);
          changed = true;
          break;
        }
      }
    }
    mga::ExpVec e(p_.ngens(), 0);
    for (const unsigned g : w) ++e[g];
    return e;
  }

  mga::ExpVec multiply(const mga::ExpVec& a, const mga::ExpVec& b) const {
    std::vector<unsigned> word;
    for (unsigned i = 0; i < p_.ngens(); ++i)
      for (unsigned t = 0; t < a[i]; ++t) word.push_back(i);
    for (unsigned i = 0; i < p_.ngens(); ++i)
      for (unsigned t = 0; t < b[i]; ++t) word.push_back(i);
    return normalForm(std::move(word));
  }

 private:
  mga::PcPresentation p_;
};

// Dihedral group of order 16 as symmetries of the octagon: u, v adjacent
// reflections, w = [v, u] a rotation of order 4.
struct DihedralPerm {
  using Perm = std::array<int, 8>;

  static Perm reflection(int a) {
    Perm p{};
    for (int x = 0; x < 8; ++x) p[static_cast<std::size_t>(x)] = ((a - x) % 8 + 8) % 8;
    return p;
  }
  static Perm compose(const Perm& p, const Perm& q) {  // apply p then q
    Perm r{};
    for (int x = 0; x < 8; ++x)
      r[static_cast<std::size_t>(x)] = q[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return r;
  }
  static Perm identity() {
    Perm p{};
    for (int x = 0; x < 8; ++x) p[static_cast<std::size_t>(x)] = x;
    return p;
  }
  static Perm inverse(const Perm& p) {
    Perm r{};
    for (int x = 0; x < 8; ++x) r[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])] = x;
    return r;
  }

  Perm u = reflection(0);
  Perm v = reflection(1);
  Perm w = compose(compose(inverse(v), inverse(u)), compose(v, u));  // [v, u]

  Perm word(unsigned s, unsigned t, unsigned k) const {
    Perm p = identity();
    for (unsigned i = 0; i < s; ++i) p = compose(p, u);
    for (unsigned i = 0; i < t; ++i) p = compose(p, v);
    for (unsigned i = 0; i < k; ++i) p = compose(p, w);
    return p;
  }
};

}  // namespace oracles
