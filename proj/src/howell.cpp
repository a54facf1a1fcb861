#include "mga/howell.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mga {

namespace {

unsigned gcdU(unsigned a, unsigned b) { return std::gcd(a, b); }

// extended gcd over the integers
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

void rowAxpy(ModVec& dst, const ModVec& src, unsigned s, std::size_t from, unsigned m) {
  s %= m;
  if (s == 0) return;
  const std::size_t n = dst.size();
  std::uint8_t* __restrict__ d = dst.data();
  const std::uint8_t* __restrict__ x = src.data();
  const std::uint8_t sb = static_cast<std::uint8_t>(s);
  if ((m & (m - 1)) == 0) {
    const std::uint8_t mask = static_cast<std::uint8_t>(m - 1);
    for (std::size_t i = from; i < n; ++i)
      d[i] = static_cast<std::uint8_t>((d[i] + sb * x[i]) & mask);
  } else {
    for (std::size_t i = from; i < n; ++i)
      d[i] = static_cast<std::uint8_t>((d[i] + s * x[i]) % m);
  }
}

void rowScale(ModVec& v, unsigned s, unsigned m) {
  s %= m;
  if (s == 1) return;
  if ((m & (m - 1)) == 0) {
    const std::uint8_t mask = static_cast<std::uint8_t>(m - 1);
    for (auto& x : v) x = static_cast<std::uint8_t>((s * x) & mask);
  } else {
    for (auto& x : v) x = static_cast<std::uint8_t>((s * x) % m);
  }
}

std::size_t rowLead(const ModVec& v, std::size_t from) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (v[i]) return i;
  return npos;
}

unsigned unitToMinimal(unsigned a, unsigned m) {
  const unsigned g = gcdU(a, m);
  const unsigned ag = a / g, mg = m / g;
  if (mg == 1) return 1;
  long long x, y;
  egcd(static_cast<long long>(ag % mg), static_cast<long long>(mg), x, y);
  unsigned u = static_cast<unsigned>(((x % static_cast<long long>(mg)) + mg) % mg);
  // adjust into a unit mod m (u is invertible mod m/g; add multiples of m/g)
  while (gcdU(u, m) != 1) u += mg;
  return u % m;
}

HowellModule::HowellModule(std::size_t dim, unsigned modulus) : dim_(dim), modulus_(modulus) {
  if (modulus < 2 || modulus > 255) fail(Err::BadParameters, "modulus must be in [2, 255]");
}

HowellModule HowellModule::span(std::size_t dim, unsigned modulus, std::span<const ModVec> rows) {
  HowellBuilder b(dim, modulus);
  for (const auto& r : rows) {
    if (r.size() != dim) fail(Err::DimensionMismatch, "row length does not match ambient dimension");
    b.insert(r);
  }
  return b.finalize();
}

HowellModule HowellModule::full(std::size_t dim, unsigned modulus) {
  HowellModule m(dim, modulus);
  m.rows_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ModVec r(dim, 0);
    r[i] = 1;
    m.rows_.push_back(std::move(r));
  }
  return m;
}

bool HowellModule::contains(const ModVec& v) const {
  if (v.size() != dim_) fail(Err::DimensionMismatch, "vector length does not match ambient dimension");
  ModVec w = v;
  for (auto& x : w) x = static_cast<std::uint8_t>(x % modulus_);
  std::size_t j = rowLead(w);
  std::size_t ri = 0;
  while (j != npos) {
    while (ri < rows_.size() && rowLead(rows_[ri]) < j) ++ri;
    if (ri == rows_.size() || rowLead(rows_[ri]) != j) return false;
    const ModVec& p = rows_[ri];
    if (w[j] % p[j]) return false;
    rowAxpy(w, p, modulus_ - w[j] / p[j] % modulus_, j, modulus_);
    j = rowLead(w, j);
  }
  return true;
}

bool HowellModule::containsModule(const HowellModule& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

HowellModule HowellModule::sum(const HowellModule& other) const {
  if (dim_ != other.dim_ || modulus_ != other.modulus_)
    fail(Err::DimensionMismatch, "module sum requires matching ambient modules");
  HowellBuilder b(dim_, modulus_);
  for (const auto& r : rows_) b.insert(r);
  for (const auto& r : other.rows_) b.insert(r);
  return b.finalize();
}

HowellModule HowellModule::intersect(const HowellModule& other) const {
  if (dim_ != other.dim_ || modulus_ != other.modulus_)
    fail(Err::DimensionMismatch, "module intersection requires matching ambient modules");
  // Zassenhaus: span{(r | r)} + span{(s | 0)}; rows with zero left block give
  // the intersection in the right block.
  HowellBuilder b(2 * dim_, modulus_);
  for (const auto& r : rows_) {
    ModVec v(2 * dim_, 0);
    std::copy(r.begin(), r.end(), v.begin());
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(dim_));
    b.insert(std::move(v));
  }
  for (const auto& s : other.rows_) {
    ModVec v(2 * dim_, 0);
    std::copy(s.begin(), s.end(), v.begin());
    b.insert(std::move(v));
  }
  HowellModule big = b.finalize();
  HowellBuilder out(dim_, modulus_);
  for (const auto& r : big.rows()) {
    if (rowLead(r) != npos && rowLead(r) < dim_) continue;
    out.insert(ModVec(r.begin() + static_cast<std::ptrdiff_t>(dim_), r.end()));
  }
  return out.finalize();
}

unsigned long long HowellModule::size() const {
  unsigned long long s = 1;
  for (const auto& r : rows_) {
    const unsigned long long f = modulus_ / gcdU(r[rowLead(r)], modulus_);
    if (s > (1ULL << 62) / f) fail(Err::TooLarge, "module size exceeds 2^63");
    s *= f;
  }
  return s;
}

unsigned HowellModule::sizeLog(unsigned p) const {
  unsigned total = 0;
  for (const auto& r : rows_) {
    unsigned f = modulus_ / gcdU(r[rowLead(r)], modulus_);
    while (f > 1) {
      if (f % p) fail(Err::BadParameters, "modulus is not a power of the given prime");
      f /= p;
      ++total;
    }
  }
  return total;
}

unsigned long long HowellModule::quotientSizeOver(const HowellModule& sub) const {
  if (!containsModule(sub)) fail(Err::NotASubmodule, "quotient requires a submodule");
  // factored sizes so that huge ambient modules stay exact
  std::array<unsigned, 256> num{}, den{};
  auto account = [&](const HowellModule& m, std::array<unsigned, 256>& acc) {
    for (const auto& r : m.rows()) {
      unsigned f = m.modulus() / gcdU(r[rowLead(r)], m.modulus());
      for (unsigned p = 2; f > 1; ++p)
        while (f % p == 0) {
          f /= p;
          ++acc[p];
        }
    }
  };
  account(*this, num);
  account(sub, den);
  unsigned long long q = 1;
  for (unsigned p = 2; p < 256; ++p) {
    if (den[p] > num[p]) fail(Err::NotASubmodule, "quotient size is not integral");
    for (unsigned i = den[p]; i < num[p]; ++i) {
      if (q > (1ULL << 62) / p) fail(Err::TooLarge, "quotient size exceeds 2^63");
      q *= p;
    }
  }
  return q;
}

HowellBuilder::HowellBuilder(std::size_t dim, unsigned modulus)
    : dim_(dim), modulus_(modulus), pivot_(dim) {
  if (modulus < 2 || modulus > 255) fail(Err::BadParameters, "modulus must be in [2, 255]");
}

void HowellBuilder::insertLogged(ModVec v, std::vector<ModVec>* log) {
  if (v.size() != dim_) fail(Err::DimensionMismatch, "row length does not match ambient dimension");
  const unsigned m = modulus_;
  for (auto& x : v) x = static_cast<std::uint8_t>(x % m);
  std::vector<ModVec> pending;
  pending.push_back(std::move(v));
  while (!pending.empty()) {
    ModVec w = std::move(pending.back());
    pending.pop_back();
    std::size_t j = rowLead(w);
    while (j != npos) {
      if (!pivot_[j]) {
        const unsigned g = gcdU(w[j], m);
        rowScale(w, unitToMinimal(w[j], m), m);
        if (g != 1) {
          ModVec ann = w;
          rowScale(ann, m / g, m);
          pending.push_back(std::move(ann));
        }
        if (log) log->push_back(w);
        pivot_[j] = std::move(w);
        ++count_;
        break;
      }
      ModVec& p = *pivot_[j];
      const unsigned a = p[j], bval = w[j];
      if (bval % a == 0) {
        rowAxpy(w, p, m - bval / a % m, j, m);
      } else {
        long long x, y;
        const long long g = egcd(a, bval, x, y);
        ModVec fresh(dim_, 0);
        rowAxpy(fresh, p, static_cast<unsigned>(((x % m) + m) % m), j, m);
        rowAxpy(fresh, w, static_cast<unsigned>(((y % m) + m) % m), j, m);
        rowScale(fresh, unitToMinimal(fresh[j], m), m);
        ModVec oldp = std::move(p);
        rowAxpy(oldp, fresh, m - static_cast<unsigned>(a / g) % m, j, m);
        rowAxpy(w, fresh, m - static_cast<unsigned>(bval / g) % m, j, m);
        const unsigned ng = fresh[j];
        if (log) log->push_back(fresh);
        pivot_[j] = std::move(fresh);
        if (ng != 1) {
          ModVec ann = *pivot_[j];
          rowScale(ann, m / ng, m);
          pending.push_back(std::move(ann));
        }
        pending.push_back(std::move(oldp));
      }
      j = rowLead(w, j);
    }
  }
}

HowellModule HowellBuilder::finalize() {
  const unsigned m = modulus_;
  // reduce above-pivot entries, sweeping pivot columns left to right
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!pivot_[j]) continue;
    const ModVec p = *pivot_[j];
    const unsigned pv = p[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (!pivot_[i]) continue;
      ModVec& r = *pivot_[i];
      const unsigned q = r[j] / pv;
      if (q) rowAxpy(r, p, m - q % m, j, m);
    }
  }
  HowellModule out(dim_, m);
  for (std::size_t j = 0; j < dim_; ++j)
    if (pivot_[j]) out.rows_.push_back(std::move(*pivot_[j]));
  pivot_.assign(dim_, std::nullopt);
  count_ = 0;
  return out;
}

}  // namespace mga
