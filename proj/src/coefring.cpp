#include "mga/coefring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace mga {

namespace {

long long modNorm(long long v, unsigned m) {
  long long r = v % static_cast<long long>(m);
  return r < 0 ? r + m : r;
}

std::string polyToString(const std::vector<std::uint8_t>& p, unsigned m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    unsigned c = p[i];
    if (!c && !(first && i == 0 && p.size() == 1)) continue;
    if (!first) os << "+";
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  (void)m;
  return os.str();
}

}  // namespace

CoefRing CoefRing::make(unsigned modulus, Poly reducer, std::vector<Poly> idealGens) {
  if (modulus < 2 || modulus > 255) fail(Err::BadParameters, "modulus must be in [2, 255]");
  while (reducer.size() > 1 && reducer.back() == 0) reducer.pop_back();
  if (reducer.size() < 2) fail(Err::BadParameters, "reducer must have degree >= 1");
  if (modNorm(reducer.back(), modulus) != 1)
    fail(Err::NonMonicReducer, "reducer polynomial must be monic modulo m");

  CoefRing r;
  r.m_ = modulus;
  r.e_ = static_cast<unsigned>(reducer.size() - 1);
  r.g_.resize(r.e_ + 1);
  for (std::size_t i = 0; i <= r.e_; ++i)
    r.g_[i] = static_cast<std::uint8_t>(modNorm(reducer[i], modulus));

  std::size_t sz = 1;
  for (unsigned i = 0; i < r.e_; ++i) {
    if (sz > 65536 / modulus) fail(Err::TooLarge, "ring has more than 65536 elements");
    sz *= modulus;
  }
  r.size_ = sz;

  // tPowers_[j] = t^{e+j} reduced mod g; products of reduced elements need
  // exponents up to 2e-2
  std::vector<std::uint8_t> base(r.e_, 0);  // t^e = -(g_0 + ... + g_{e-1} t^{e-1})
  for (unsigned i = 0; i < r.e_; ++i)
    base[i] = static_cast<std::uint8_t>(modNorm(-static_cast<long long>(r.g_[i]), modulus));
  std::vector<std::uint8_t> cur = base;
  r.tPowers_.push_back(cur);
  for (unsigned j = 1; j + 2 <= r.e_; ++j) {
    std::vector<std::uint8_t> nxt(r.e_, 0);
    const unsigned carry = cur[r.e_ - 1];
    for (unsigned i = r.e_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (carry)
      for (unsigned i = 0; i < r.e_; ++i)
        nxt[i] = static_cast<std::uint8_t>((nxt[i] + carry * base[i]) % modulus);
    cur = nxt;
    r.tPowers_.push_back(cur);
  }

  for (const auto& p : idealGens) r.idealGens_.push_back(r.fromPoly(p));
  r.computeFlags();

  std::ostringstream os;
  os << "Zmod:" << modulus;
  if (r.e_ > 1) os << "[t]/(" << polyToString(r.g_, modulus) << ")";
  if (!r.idealGens_.empty()) {
    os << ";n=";
    for (std::size_t i = 0; i < r.idealGens_.size(); ++i) {
      if (i) os << ",";
      os << polyToString(r.idealGens_[i].c, modulus);
    }
  }
  r.spec_ = os.str();
  return r;
}

RingElem CoefRing::fromInt(long long v) const {
  RingElem r = zero();
  r.c[0] = static_cast<std::uint8_t>(modNorm(v, m_));
  return r;
}

RingElem CoefRing::fromPoly(const Poly& p) const {
  // reduce mod g by repeated substitution of t^k, k >= e
  std::vector<long long> acc(e_, 0);
  std::vector<std::vector<std::uint8_t>> pw;  // t^k red for k >= e, extended on demand
  pw.assign(tPowers_.begin(), tPowers_.end());
  auto extend = [&](std::size_t k) {
    while (pw.size() < k - e_ + 1) {
      const auto& last = pw.back();
      std::vector<std::uint8_t> nxt(e_, 0);
      unsigned carry = last[e_ - 1];
      for (unsigned i = e_ - 1; i >= 1; --i) nxt[i] = last[i - 1];
      if (e_ >= 1) nxt[0] = 0;
      if (carry)
        for (unsigned i = 0; i < e_; ++i)
          nxt[i] = static_cast<std::uint8_t>((nxt[i] + carry * pw[0][i]) % m_);
      pw.push_back(nxt);
    }
  };
  for (std::size_t k = 0; k < p.size(); ++k) {
    const long long c = modNorm(p[k], m_);
    if (!c) continue;
    if (k < e_) {
      acc[k] += c;
    } else {
      extend(k);
      const auto& red = pw[k - e_];
      for (unsigned i = 0; i < e_; ++i) acc[i] += c * red[i];
    }
  }
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>(modNorm(acc[i], m_));
  return r;
}

RingElem CoefRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % m_);
  return r;
}

RingElem CoefRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i)
    r.c[i] = static_cast<std::uint8_t>((a.c[i] + m_ - b.c[i]) % m_);
  return r;
}

RingElem CoefRing::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem CoefRing::mul(const RingElem& a, const RingElem& b) const {
  if (e_ == 1) {
    RingElem r = zero();
    r.c[0] = static_cast<std::uint8_t>((a.c[0] * b.c[0]) % m_);
    return r;
  }
  std::vector<unsigned> acc(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; j < e_; ++j) acc[i + j] += a.c[i] * b.c[j];
  }
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>(acc[i] % m_);
  for (unsigned k = e_; k < 2 * e_ - 1; ++k) {
    const unsigned c = acc[k] % m_;
    if (!c) continue;
    const auto& red = tPowers_[k - e_];
    for (unsigned i = 0; i < e_; ++i)
      r.c[i] = static_cast<std::uint8_t>((r.c[i] + c * red[i]) % m_);
  }
  return r;
}

RingElem CoefRing::scale(long long k, const RingElem& a) const {
  const unsigned s = static_cast<unsigned>(modNorm(k, m_));
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i) r.c[i] = static_cast<std::uint8_t>((s * a.c[i]) % m_);
  return r;
}

std::size_t CoefRing::indexOf(const RingElem& a) const {
  std::size_t idx = 0;
  for (unsigned i = e_; i-- > 0;) idx = idx * m_ + a.c[i];
  return idx;
}

RingElem CoefRing::elementAt(std::size_t idx) const {
  RingElem r = zero();
  for (unsigned i = 0; i < e_; ++i) {
    r.c[i] = static_cast<std::uint8_t>(idx % m_);
    idx /= m_;
  }
  return r;
}

bool CoefRing::isUnit(const RingElem& a) const {
  const RingElem one = this->one();
  for (std::size_t i = 0; i < size_; ++i)
    if (mul(a, elementAt(i)) == one) return true;
  return false;
}

std::vector<std::size_t> CoefRing::idealClosure(std::vector<RingElem> gens) const {
  // ideal generated by gens: close {s*gen} under addition
  std::vector<bool> in(size_, false);
  std::vector<std::size_t> members;
  auto push = [&](std::size_t idx) {
    if (!in[idx]) {
      in[idx] = true;
      members.push_back(idx);
    }
  };
  push(indexOf(zero()));
  for (const auto& g : gens)
    for (std::size_t s = 0; s < size_; ++s) push(indexOf(mul(elementAt(s), g)));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      push(indexOf(add(elementAt(members[i]), elementAt(members[j]))));
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<RingElem> CoefRing::idealPower(unsigned k) const {
  std::vector<RingElem> gens = idealGens_;
  if (k == 0) {
    std::vector<RingElem> all;
    all.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) all.push_back(elementAt(i));
    return all;
  }
  // members of n^k: products of k generators, closed under S-multiples and sums
  std::vector<RingElem> cur = gens;
  for (unsigned step = 1; step < k; ++step) {
    std::vector<RingElem> nxt;
    for (const auto& a : cur)
      for (const auto& g : gens) nxt.push_back(mul(a, g));
    cur = std::move(nxt);
  }
  auto idxs = idealClosure(cur);
  std::vector<RingElem> out;
  out.reserve(idxs.size());
  for (auto i : idxs) out.push_back(elementAt(i));
  return out;
}

void CoefRing::computeFlags() {
  const auto nIdx = idealClosure(idealGens_);
  std::vector<bool> inN(size_, false);
  for (auto i : nIdx) inN[i] = true;

  // cosets of n
  std::vector<std::size_t> cosetOf(size_, static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < size_; ++i) {
    if (cosetOf[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = reps.size();
    reps.push_back(i);
    const RingElem base = elementAt(i);
    for (auto nu : nIdx) cosetOf[indexOf(add(base, elementAt(nu)))] = id;
  }
  const std::size_t q = reps.size();

  // quotient characteristic: additive order of the coset of 1
  {
    RingElem acc = zero();
    unsigned ord = 0;
    const std::size_t zeroCoset = cosetOf[indexOf(zero())];
    do {
      acc = add(acc, one());
      ++ord;
    } while (cosetOf[indexOf(acc)] != zeroCoset);
    flags_.quotientChar = ord;
  }

  // maximality: S/n is a field — no zero divisors, every nonzero coset invertible
  {
    bool maximal = q > 1;
    const std::size_t zeroCoset = cosetOf[indexOf(zero())];
    const std::size_t oneCoset = cosetOf[indexOf(one())];
    for (std::size_t a = 0; a < q && maximal; ++a) {
      if (cosetOf[reps[a]] == zeroCoset) continue;
      bool hasInv = false;
      for (std::size_t b = 0; b < q; ++b) {
        const std::size_t prod = cosetOf[indexOf(mul(elementAt(reps[a]), elementAt(reps[b])))];
        if (cosetOf[reps[b]] != zeroCoset && prod == zeroCoset) maximal = false;
        if (prod == oneCoset) hasInv = true;
      }
      if (!hasInv) maximal = false;
    }
    flags_.idealIsMaximal = maximal;
  }

  const RingElem two = fromInt(2);
  flags_.twoInIdeal = inN[indexOf(two)];
  {
    const auto n2 = idealPower(2);
    flags_.twoInIdealSquared =
        std::find(n2.begin(), n2.end(), two) != n2.end();
  }
}

ResidueField CoefRing::residueField() const {
  const auto nIdx = idealClosure(idealGens_);
  std::vector<std::size_t> cosetOf(size_, static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < size_; ++i) {
    if (cosetOf[i] != static_cast<std::size_t>(-1)) continue;
    reps.push_back(i);
    const RingElem base = elementAt(i);
    for (auto nu : nIdx) cosetOf[indexOf(add(base, elementAt(nu)))] = reps.size() - 1;
  }
  // reindex so coset 0 is the zero coset (minimal rep is element 0 already since
  // 0 has index 0 and is its own coset's minimal representative)
  return ResidueField(*this, std::move(cosetOf), static_cast<unsigned>(reps.size()));
}

ResidueField::ResidueField(const CoefRing& ring, std::vector<std::size_t> cosetOfElement,
                           unsigned q)
    : ring_(ring), cosetOf_(std::move(cosetOfElement)), q_(q) {
  reps_.resize(q_);
  std::vector<bool> seen(q_, false);
  for (std::size_t i = 0; i < cosetOf_.size(); ++i) {
    const std::size_t c = cosetOf_[i];
    if (!seen[c]) {
      seen[c] = true;
      reps_[c] = ring_.elementAt(i);
    }
  }
  addT_.resize(static_cast<std::size_t>(q_) * q_);
  mulT_.resize(static_cast<std::size_t>(q_) * q_);
  negT_.resize(q_);
  invT_.assign(q_, q_);
  for (unsigned a = 0; a < q_; ++a) {
    negT_[a] = project(ring_.neg(reps_[a]));
    for (unsigned b = 0; b < q_; ++b) {
      addT_[a * q_ + b] = project(ring_.add(reps_[a], reps_[b]));
      mulT_[a * q_ + b] = project(ring_.mul(reps_[a], reps_[b]));
    }
  }
  const unsigned oneF = project(ring_.one());
  for (unsigned a = 0; a < q_; ++a)
    for (unsigned b = 0; b < q_; ++b)
      if (mulT_[a * q_ + b] == oneF) invT_[a] = b;
  // characteristic
  unsigned c = 0, acc = 0;
  do {
    acc = add(acc, oneF);
    ++c;
  } while (acc != 0 && c <= q_);
  p_ = c;
}

unsigned ResidueField::project(const RingElem& a) const {
  return static_cast<unsigned>(cosetOf_[ring_.indexOf(a)]);
}

unsigned ResidueField::inv(unsigned a) const {
  if (a == 0 || invT_[a] >= q_) fail(Err::BadParameters, "element has no inverse");
  return invT_[a];
}

unsigned ResidueField::pow(unsigned a, unsigned long long k) const {
  unsigned r = project(ring_.one());
  unsigned base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

ResidueField::AsRing ResidueField::asCoefRing() const {
  const unsigned p = p_;
  unsigned f = 0;
  for (unsigned t = q_; t > 1; t /= p) ++f;
  if (q_ != [&] {
        unsigned s = 1;
        for (unsigned i = 0; i < f; ++i) s *= p;
        return s;
      }())
    fail(Err::BadParameters, "residue field size is not a power of its characteristic");

  if (f == 1) {
    CoefRing field = CoefRing::make(p, Poly{0, 1}, {});
    std::vector<RingElem> image(q_);
    // coset of k*1 maps to k
    unsigned acc = 0;
    const unsigned oneF = project(ring_.one());
    for (unsigned k = 0; k < p; ++k) {
      image[acc] = field.fromInt(k);
      acc = add(acc, oneF);
    }
    return {std::move(field), std::move(image)};
  }

  // find a coset theta whose powers 1, theta, ..., theta^{f-1} are F_p-independent,
  // i.e. a generator of F over its prime field; its minimal polynomial is the reducer
  const unsigned oneF = project(ring_.one());
  auto timesInt = [&](unsigned a, unsigned k) {
    unsigned r = 0;
    for (unsigned i = 0; i < k; ++i) r = add(r, a);
    return r;
  };
  for (unsigned theta = 1; theta < q_; ++theta) {
    std::vector<unsigned> pw(f + 1);
    pw[0] = oneF;
    for (unsigned i = 1; i <= f; ++i) pw[i] = mul(pw[i - 1], theta);
    // span of 1..theta^{f-1} over F_p must have size q
    std::set<unsigned> spanSet;
    std::vector<unsigned> coords(f, 0);
    std::vector<unsigned> order;  // span elements in coordinate order
    for (std::size_t n = 0; n < [&] {
           std::size_t s = 1;
           for (unsigned i = 0; i < f; ++i) s *= p;
           return s;
         }();
         ++n) {
      std::size_t rem = n;
      unsigned v = 0;
      for (unsigned i = 0; i < f; ++i) {
        v = add(v, timesInt(pw[i], static_cast<unsigned>(rem % p)));
        rem /= p;
      }
      spanSet.insert(v);
      order.push_back(v);
    }
    if (spanSet.size() != q_) continue;
    // coordinates: invert the span enumeration
    std::vector<std::vector<std::uint8_t>> coordOf(q_);
    for (std::size_t n = 0; n < order.size(); ++n) {
      std::size_t rem = n;
      std::vector<std::uint8_t> cs(f);
      for (unsigned i = 0; i < f; ++i) {
        cs[i] = static_cast<std::uint8_t>(rem % p);
        rem /= p;
      }
      coordOf[order[n]] = cs;
    }
    // minimal polynomial: theta^f = sum_i c_i theta^i  =>  h = t^f - sum c_i t^i
    const auto& top = coordOf[pw[f]];
    Poly h(f + 1, 0);
    h[f] = 1;
    for (unsigned i = 0; i < f; ++i) h[i] = -static_cast<long long>(top[i]);
    CoefRing field = CoefRing::make(p, h, {});
    std::vector<RingElem> image(q_);
    for (unsigned v = 0; v < q_; ++v) {
      RingElem r = field.zero();
      for (unsigned i = 0; i < f; ++i) r.c[i] = coordOf[v][i];
      image[v] = r;
    }
    return {std::move(field), std::move(image)};
  }
  fail(Err::BadParameters, "no primitive element found (quotient is not a field)");
}

unsigned padicValuation(unsigned p, unsigned long long x) {
  if (x == 0) fail(Err::ZeroInput, "valuation of 0 is infinite");
  if (p < 2) fail(Err::BadParameters, "p must be a prime >= 2");
  unsigned k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

unsigned binomialValuation(unsigned p, unsigned n, unsigned long long i) {
  if (p < 2 || n == 0) fail(Err::BadParameters, "need p >= 2, n >= 1");
  unsigned long long pn = 1;
  for (unsigned k = 0; k < n; ++k) {
    if (pn > (1ULL << 62) / p) fail(Err::OutOfRange, "p^n exceeds 2^63");
    pn *= p;
  }
  if (i == 0 || i >= pn) fail(Err::OutOfRange, "need 0 < i < p^n");
  // Kummer: nu_p(C(a+b, a)) = number of carries adding a and b in base p
  unsigned long long a = i, b = pn - i;
  unsigned carries = 0, carry = 0;
  while (a || b || carry) {
    const unsigned long long s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

}  // namespace mga
