#include <random>

#include "doctest.h"
#include "mga/howell.hpp"
#include "oracles.hpp"

using mga::HowellModule;
using mga::ModVec;

namespace {

HowellModule spanOf(std::size_t d, unsigned m, const std::vector<ModVec>& rows) {
  return HowellModule::span(d, m, rows);
}

std::set<ModVec> rowSet(const HowellModule& h) {
  return std::set<ModVec>(h.rows().begin(), h.rows().end());
}

}  // namespace

TEST_CASE("howell form of {(2,2),(0,2)} over Z/4") {
  const std::vector<ModVec> rows{{2, 2}, {0, 2}};
  HowellModule h = spanOf(2, 4, rows);
  CHECK(h.rows() == std::vector<ModVec>{{2, 0}, {0, 2}});
  CHECK(oracles::spanSet(rows, 2, 4) == oracles::spanSet(h.rows(), 2, 4));
  CHECK(h.contains({2, 2}));
  CHECK(h.size() == 4);
}

TEST_CASE("identity rows give the identity basis") {
  const std::vector<ModVec> rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  HowellModule h = spanOf(3, 4, rows);
  CHECK(h == HowellModule::full(3, 4));
  CHECK(h.size() == 64);
}

TEST_CASE("empty row set is the zero module") {
  HowellModule h = spanOf(3, 4, {});
  CHECK(h.rows().empty());
  CHECK(h.size() == 1);
  CHECK(h.contains({0, 0, 0}));
  CHECK_FALSE(h.contains({0, 2, 0}));
}

TEST_CASE("quotient size of full over diagonal span") {
  HowellModule full = HowellModule::full(2, 4);
  HowellModule sub = spanOf(2, 4, {{2, 0}, {0, 2}});
  CHECK(full.quotientSizeOver(sub) == 4);
  CHECK_THROWS_AS((void)sub.quotientSizeOver(full), mga::Error);
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS((void)spanOf(3, 4, {{1, 2}}), mga::Error);
  HowellModule h = spanOf(2, 4, {{1, 0}});
  CHECK_THROWS_AS((void)h.contains({1, 0, 0}), mga::Error);
}

TEST_CASE("span preservation and canonicity on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned m = std::vector<unsigned>{2, 3, 4, 6, 8, 9}[rng() % 6];
    const std::size_t d = 1 + rng() % 5;
    std::vector<ModVec> rows(rng() % 5, ModVec(d));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<std::uint8_t>(rng() % m);

    HowellModule h1 = spanOf(d, m, rows);
    const auto s1 = oracles::spanSet(rows, d, m);
    CHECK(s1 == oracles::spanSet(h1.rows(), d, m));
    CHECK(h1.size() == s1.size());
    for (const auto& v : s1) CHECK(h1.contains(v));

    std::shuffle(rows.begin(), rows.end(), rng);
    HowellModule h2 = spanOf(d, m, rows);
    CHECK(h1 == h2);
    // idempotence: rebuilding from the canonical rows changes nothing
    CHECK(spanOf(d, m, h1.rows()) == h1);
  }
}

TEST_CASE("module sum is commutative, associative, idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned m = 4;
    const std::size_t d = 3;
    auto randomModule = [&] {
      std::vector<ModVec> rows(1 + rng() % 3, ModVec(d));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<std::uint8_t>(rng() % m);
      return spanOf(d, m, rows);
    };
    HowellModule a = randomModule(), b = randomModule(), c = randomModule();
    CHECK(a.sum(b) == b.sum(a));
    CHECK(a.sum(b).sum(c) == a.sum(b.sum(c)));
    CHECK(a.sum(a) == a);
    CHECK(a.sum(b).containsModule(a));
  }
}

TEST_CASE("intersection agrees with exhaustive enumeration") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned m = std::vector<unsigned>{2, 4, 6}[rng() % 3];
    const std::size_t d = 1 + rng() % 4;
    auto randomRows = [&] {
      std::vector<ModVec> rows(1 + rng() % 3, ModVec(d));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<std::uint8_t>(rng() % m);
      return rows;
    };
    const auto ra = randomRows(), rb = randomRows();
    HowellModule a = spanOf(d, m, ra), b = spanOf(d, m, rb);
    const auto sa = oracles::spanSet(ra, d, m), sb = oracles::spanSet(rb, d, m);
    std::vector<ModVec> both;
    for (const auto& v : sa)
      if (sb.count(v)) both.push_back(v);
    CHECK(a.intersect(b) == spanOf(d, m, both));
  }
}

TEST_CASE("factored sizes handle huge ambient modules") {
  HowellModule full = HowellModule::full(512, 4);
  CHECK(full.sizeLog(2) == 1024);
  CHECK_THROWS_AS((void)full.size(), mga::Error);
  // quotient of two huge modules is still exact
  std::vector<ModVec> rows;
  for (std::size_t i = 1; i < 512; ++i) {
    ModVec r(512, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
  }
  ModVec two(512, 0);
  two[0] = 2;
  rows.push_back(two);
  HowellModule sub = spanOf(512, 4, rows);
  CHECK(full.quotientSizeOver(sub) == 2);
}

TEST_CASE("rows are canonical: pivots divide the modulus, entries above reduced") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned m = std::vector<unsigned>{4, 6, 8, 9, 12}[rng() % 5];
    const std::size_t d = 1 + rng() % 5;
    std::vector<ModVec> rows(1 + rng() % 4, ModVec(d));
    for (auto& r : rows)
      for (auto& x : r) x = static_cast<std::uint8_t>(rng() % m);
    HowellModule h = spanOf(d, m, rows);
    std::size_t prevLead = mga::npos;
    for (const auto& r : h.rows()) {
      const std::size_t j = mga::rowLead(r);
      if (prevLead != mga::npos) CHECK(j > prevLead);
      prevLead = j;
      CHECK(m % r[j] == 0);
      for (const auto& other : h.rows()) {
        if (&other == &r) break;
        CHECK(other[j] < r[j]);
      }
    }
  }
}
