#pragma once

// Canonical linear algebra over Z/mZ.
//
// Submodules of (Z/mZ)^d are represented by their Howell normal form: rows
// with strictly increasing leading indices, each pivot the minimal positive
// generator of its ideal in Z/mZ (a divisor of m), entries above a pivot
// reduced into [0, pivot), and the span closed under the Howell property
// (every span element with leading zeros is spanned by later rows).  Two
// submodules are equal iff their matrices are identical, which is what makes
// ideal-equality tests over non-domains like Z/4Z exact.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mga/error.hpp"

namespace mga {

using ModVec = std::vector<std::uint8_t>;

// dst[i] += s * src[i] (mod m) for i in [from, dst.size())
void rowAxpy(ModVec& dst, const ModVec& src, unsigned s, std::size_t from, unsigned m);
// v *= s (mod m)
void rowScale(ModVec& v, unsigned s, unsigned m);
// index of first nonzero entry, or npos
std::size_t rowLead(const ModVec& v, std::size_t from = 0);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// unit u (mod m) with u*a == gcd(a, m) (mod m); a in [1, m)
unsigned unitToMinimal(unsigned a, unsigned m);

class HowellModule {
 public:
  // zero module
  HowellModule(std::size_t dim, unsigned modulus);

  static HowellModule span(std::size_t dim, unsigned modulus, std::span<const ModVec> rows);
  static HowellModule full(std::size_t dim, unsigned modulus);

  std::size_t dim() const { return dim_; }
  unsigned modulus() const { return modulus_; }

  // canonical matrix, rows ordered by leading index
  const std::vector<ModVec>& rows() const { return rows_; }

  bool contains(const ModVec& v) const;
  bool containsModule(const HowellModule& other) const;

  HowellModule sum(const HowellModule& other) const;
  HowellModule intersect(const HowellModule& other) const;

  // |span|; throws TooLarge past 2^63
  unsigned long long size() const;
  // log_p |span| when m is a power of the prime p
  unsigned sizeLog(unsigned p) const;
  // |this| / |sub|; requires sub to be a submodule of *this
  unsigned long long quotientSizeOver(const HowellModule& sub) const;

  bool operator==(const HowellModule& other) const = default;

 private:
  std::size_t dim_;
  unsigned modulus_;
  std::vector<ModVec> rows_;

  friend class HowellBuilder;
};

// Incremental construction: insert vectors one at a time, keeping an
// echelonized working set; finalize() performs the Howell closure and
// above-pivot reduction that make the result canonical.
class HowellBuilder {
 public:
  HowellBuilder(std::size_t dim, unsigned modulus);

  void insert(ModVec v) { insertLogged(std::move(v), nullptr); }
  // as insert, but appends a copy of every row stored into a pivot slot
  // (fresh or replacement) to *log; lets callers close a span under an
  // action by processing exactly the rows that changed the module
  void insertLogged(ModVec v, std::vector<ModVec>* log);
  // number of pivot rows currently held
  std::size_t rank() const { return count_; }
  HowellModule finalize();

 private:
  std::size_t dim_;
  unsigned modulus_;
  std::vector<std::optional<ModVec>> pivot_;  // by leading column
  std::size_t count_ = 0;
};

}  // namespace mga
