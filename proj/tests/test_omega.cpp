#include <doctest.h>

#include <random>
#include <set>

#include "fintop/omega.hpp"

using namespace fintop;
using namespace fintop::omega;

namespace {

constexpr Nat kWindow = 64;

// Explicit view of a finite-or-cofinite set on [0, kWindow).
std::set<Nat> window(const FinCofSet& s) {
  std::set<Nat> out;
  for (Nat x = 0; x < kWindow; ++x)
    if (s.contains(x)) out.insert(x);
  return out;
}

FinCofSet random_set(std::mt19937_64& rng) {
  std::vector<Nat> pts;
  for (unsigned k = rng() % 6; k > 0; --k) pts.push_back(rng() % 20);
  return rng() % 2 ? FinCofSet::finite(pts) : FinCofSet::cofinite(pts);
}

}  // namespace

TEST_CASE("finite-cofinite sets") {
  CHECK((FinCofSet::all() & FinCofSet::finite({1, 2})) == FinCofSet::finite({1, 2}));
  CHECK(FinCofSet::finite({0}).complement() == FinCofSet::cofinite({0}));
  CHECK((FinCofSet::cofinite({1}) | FinCofSet::cofinite({2})) == FinCofSet::all());
  CHECK(FinCofSet::finite({3, 1, 3}).support() == std::vector<Nat>{1, 3});
  CHECK(FinCofSet::cofinite({4, 2}).str() == "{cofinite:[2,4]}");
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    FinCofSet a = random_set(rng), b = random_set(rng);
    std::set<Nat> wa = window(a), wb = window(b), u, n, c;
    std::set_union(wa.begin(), wa.end(), wb.begin(), wb.end(), std::inserter(u, u.end()));
    std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(), std::inserter(n, n.end()));
    for (Nat x = 0; x < kWindow; ++x)
      if (!wa.count(x)) c.insert(x);
    CHECK(window(a | b) == u);
    CHECK(window(a & b) == n);
    CHECK(window(a.complement()) == c);
    if (a.is_finite() || b.is_cofinite())
      CHECK(a.subset_of(b) == std::includes(wb.begin(), wb.end(), wa.begin(), wa.end()));
  }
}

TEST_CASE("open sets of symbolic prime spaces") {
  SymbolicPrimeSpace c = SymbolicPrimeSpace::c_omega();
  CHECK(is_open(c, FinCofSet::finite({5, 7}), false));
  CHECK(is_open(c, FinCofSet::cofinite({0, 1}), true));
  CHECK_FALSE(is_open(c, FinCofSet::finite({5}), true));
  SymbolicPrimeSpace p = SymbolicPrimeSpace::principal(FinCofSet::cofinite({0}));
  CHECK(is_open(p, FinCofSet::cofinite({0}), true));
  CHECK(is_open(p, FinCofSet::all(), true));
  CHECK_FALSE(is_open(p, FinCofSet::cofinite({1}), true));
  CHECK_THROWS_AS(SymbolicPrimeSpace::principal(FinCofSet::finite({1})), Error);
  CofiniteSpace cof;
  CHECK(is_open(cof, FinCofSet::cofinite({3})));
  CHECK(is_open(cof, FinCofSet::empty()));
  CHECK_FALSE(is_open(cof, FinCofSet::finite({3})));
}

TEST_CASE("filter comparison") {
  SymbolicPrimeSpace c = SymbolicPrimeSpace::c_omega();
  SymbolicPrimeSpace p0 = SymbolicPrimeSpace::principal(FinCofSet::cofinite({0}));
  SymbolicPrimeSpace whole = SymbolicPrimeSpace::principal(FinCofSet::all());
  CHECK(finer_than_sym(c, c));
  CHECK(finer_than_sym(p0, p0));
  CHECK(finer_than_sym(c, p0));
  CHECK_FALSE(finer_than_sym(p0, c));
  CHECK(finer_than_sym(c, whole));
  CHECK(finer_than_sym(p0, whole));
  CHECK_FALSE(finer_than_sym(whole, p0));
  CHECK(finer_than_sym(SymbolicPrimeSpace::principal(FinCofSet::cofinite({0, 1})), p0));
}

TEST_CASE("finite modification maps") {
  FiniteModMap id = FiniteModMap::identity();
  for (Nat x = 0; x < 20; ++x) CHECK(id(x) == x);
  FiniteModMap c = FiniteModMap::collapse(FinCofSet::finite({2, 5}), 9);
  CHECK(c(2) == 9);
  CHECK(c(5) == 9);
  CHECK(c(4) == 4);
  CHECK(c.preimage(FinCofSet::finite({9})) == FinCofSet::finite({2, 5, 9}));
  CHECK_THROWS_AS(FiniteModMap::collapse(FinCofSet::cofinite({1}), 0), Error);
  SymbolicPrimeSpace cw = SymbolicPrimeSpace::c_omega();
  CHECK(is_continuous_sym(id, cw, cw));
  CHECK(is_continuous_sym(id, CofiniteSpace{}, CofiniteSpace{}));
  // a constant image for ∗ that is isolated breaks continuity at ∗
  CHECK_FALSE(is_continuous_sym(FiniteModMap({}, 0, Nat{4}), cw, cw));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::map<Nat, Nat> tf, tg;
    for (unsigned k = rng() % 6; k > 0; --k) tf[rng() % 12] = rng() % 12;
    for (unsigned k = rng() % 6; k > 0; --k) tg[rng() % 12] = rng() % 12;
    FiniteModMap f(tf), g(tg);
    FiniteModMap gf = compose(g, f);
    for (Nat x = 0; x < kWindow; ++x) CHECK(gf(x) == g(f(x)));
    FinCofSet s = random_set(rng);
    std::set<Nat> pre;
    for (Nat x = 0; x < kWindow; ++x)
      if (s.contains(f(x))) pre.insert(x);
    CHECK(window(f.preimage(s)) == pre);
    bool cf = is_continuous_sym(f, CofiniteSpace{}, CofiniteSpace{});
    bool cg = is_continuous_sym(g, CofiniteSpace{}, CofiniteSpace{});
    if (cf && cg) CHECK(is_continuous_sym(gf, CofiniteSpace{}, CofiniteSpace{}));
  }
}

TEST_CASE("cofinite-space witness") {
  ExcofWitness w = excof_witness({3, 4}, 9, 0);
  CHECK(w.all());
  CHECK(w.f(0) == 0);
  CHECK(w.f(3) == 9);
  CHECK(w.f(4) == 9);
  CHECK(excof_witness({}, 1, 0).all());
  CHECK_THROWS_AS(excof_witness({3}, 3, 0), Error);
  CHECK_THROWS_AS(excof_witness({3}, 4, 4), Error);

  // independent window check: f is injective off F, misses only u there,
  // and every fibre is finite
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    std::set<Nat> fs;
    for (unsigned k = rng() % 11; fs.size() < k;) fs.insert(rng() % 30);
    Nat u, b;
    do u = rng() % 30;
    while (fs.count(u));
    do b = rng() % 30;
    while (fs.count(b) || b == u);
    ExcofWitness e = excof_witness({fs.begin(), fs.end()}, u, b);
    CHECK(e.all());
    CHECK(e.f(b) == b);
    const Nat span = 200;
    std::map<Nat, unsigned> hits;
    for (Nat x = 0; x < 2 * span; ++x) {
      if (fs.count(x)) {
        CHECK(e.f(x) == u);
        continue;
      }
      ++hits[e.f(x)];
    }
    for (Nat y = 0; y < span; ++y) CHECK(hits[y] == (y == u ? 0u : 1u));
  }
}
