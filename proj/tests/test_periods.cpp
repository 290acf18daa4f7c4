#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>
#include <stdexcept>

#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/dynamics.hpp"
#include "pbbs/oracle.hpp"
#include "pbbs/periods.hpp"
#include "pbbs/scattering.hpp"

using namespace pbbs;
using detail::mz;

namespace {

Path bits_to_path(unsigned long idx, long long L) {
  Path p;
  for (long long k = 0; k < L; ++k)
    p += ((idx >> (L - 1 - k)) & 1) ? '2' : '1';
  return p;
}

}  // namespace

TEST_CASE("rational lcm folds numerators of reduced fractions") {
  using periods::lcm_rationals;
  CHECK(lcm_rationals({}) == 1);
  CHECK(lcm_rationals({mpq_class(mz(15), mz(2)), mpq_class(mz(10), mz(3))}) == 30);
  CHECK(lcm_rationals({mpq_class(mz(25), mz(2)), mpq_class(mz(25), mz(2))}) == 25);
  CHECK_THROWS_AS(lcm_rationals({mpq_class(0)}), std::invalid_argument);
}

TEST_CASE("generic periods of the two worked tables") {
  const std::vector<long long> m47{1, 2, 0, 1}, m48{1, 2, 1, 1};
  const std::vector<long long> want47{23, 345, 3105, 621};
  const std::vector<long long> want48{25, 375, 875, 2625};
  for (long long l = 1; l <= 4; ++l) {
    CHECK(periods::generic_period(m47, 23, l) == mz(want47[l - 1]));
    CHECK(periods::generic_period(m48, 25, l) == mz(want48[l - 1]));
  }
}

TEST_CASE("periods of the 13-cell trace state under the first three flows") {
  const Path p = "2221111221121";
  CHECK(periods::fundamental_period(p, 1) == 13);
  CHECK(periods::fundamental_period(p, 2) == 91);
  CHECK(periods::fundamental_period(p, 3) == 273);
  CHECK(oracle::brute_period(p, 1, 100000) == 13);
  CHECK(oracle::brute_period(p, 2, 100000) == 91);
  CHECK(oracle::brute_period(p, 3, 100000) == 273);
}

TEST_CASE("symmetry orders and periods of the 26-cell example") {
  const Path Q = "12112211122211121112211111";
  const auto a = scattering::direct(Q);
  // Descending block lengths 3, 2, 1 carry orders 1, 2, 2.
  CHECK(periods::symmetry_orders(a) == std::vector<long long>{1, 2, 2});
  CHECK(periods::generic_period(scattering::action(Q).m, 26, 3) == 260);
  CHECK(periods::fundamental_period(Q, 3) == 130);
  CHECK(scattering::fast_evolve(Q, 3, mz(130)) == Q);
  CHECK(scattering::fast_evolve(Q, 3, mz(65)) != Q);
}

TEST_CASE("symmetry orders divide both the multiplicity and the vacancy") {
  std::mt19937_64 rng(41);
  int covered = 0;
  while (covered < 200) {
    Path p;
    const long long L = 4 + static_cast<long long>(rng() % 11);
    for (long long k = 0; k < L; ++k) p += (rng() & 1) ? '2' : '1';
    if (weight(p) < 0) continue;
    const auto a = scattering::direct(p);
    if (a.blocks.empty()) continue;
    ++covered;
    const auto g = periods::symmetry_orders(a);
    REQUIRE(g.size() == a.blocks.size());
    const auto av = scattering::action_of(a);
    for (size_t i = 0; i < g.size(); ++i) {
      const long long m = static_cast<long long>(a.blocks[i].riggings.size());
      const long long pj = scattering::vacancy(av, a.blocks[i].len);
      CHECK(m % g[i] == 0);
      if (pj != 0)
        CHECK(pj % g[i] == 0);
    }
  }
}

TEST_CASE("formula periods equal brute iteration for every small state") {
  for (long long L = 2; L <= 8; ++L)
    for (unsigned long idx = 0; idx < (1ul << L); ++idx) {
      const Path p = bits_to_path(idx, L);
      if (std::abs(weight(p)) == L) continue;
      for (long long l = 1; l <= 4; ++l) {
        const long long bp = oracle::brute_period(p, l, 1000000);
        CHECK(periods::fundamental_period(p, l) == mz(bp));
        // The generic period is a multiple of every member's period.
        const mpz_class N =
            periods::generic_period(scattering::action(p).m, L, l);
        CHECK(N % mz(bp) == 0);
      }
    }
}

TEST_CASE("the state period divides the generic period with unit orders") {
  // When every block has trivial symmetry order the two periods agree.
  std::mt19937_64 rng(42);
  int covered = 0;
  while (covered < 200) {
    Path p;
    const long long L = 4 + static_cast<long long>(rng() % 7);
    for (long long k = 0; k < L; ++k) p += (rng() & 1) ? '2' : '1';
    if (std::abs(weight(p)) == L) continue;
    const auto a = scattering::direct(weight(p) >= 0 ? p : [&] {
      Path q = p;
      for (char& c : q) c = (c == '1') ? '2' : '1';
      return q;
    }());
    if (a.blocks.empty()) continue;
    ++covered;
    const auto g = periods::symmetry_orders(a);
    const long long l = 1 + static_cast<long long>(rng() % 4);
    const mpz_class N = periods::generic_period(scattering::action(p).m, L, l);
    const mpz_class Ns = periods::fundamental_period(p, l);
    CHECK(N % Ns == 0);
    if (std::all_of(g.begin(), g.end(), [](long long x) { return x == 1; }))
      CHECK(N == Ns);
  }
}

TEST_CASE("composite evolution periods match brute iteration") {
  const Path p = "2221111221121";
  {
    const periods::EvolutionWord w{{1, 1}, {2, 1}};
    Path q = p;
    long long n = 0;
    do {
      q = dynamics::evolve(dynamics::evolve(q, 1).next, 2).next;
      ++n;
    } while (q != p);
    CHECK(n == 91);
    CHECK(periods::fundamental_period_composite(p, w) == mz(n));
    CHECK(periods::generic_period_composite(scattering::action(p).m, 13, w) %
              mz(n) ==
          0);
  }
  {
    const periods::EvolutionWord w{{3, 2}, {1, -1}};
    Path q = p;
    long long n = 0;
    do {
      q = dynamics::evolve(dynamics::evolve(q, 3).next, 3).next;
      q = dynamics::evolve_inverse(q, 1);
      ++n;
    } while (q != p);
    CHECK(n == 273);
    CHECK(periods::fundamental_period_composite(p, w) == mz(n));
  }
}

TEST_CASE("composite periods on random states and words") {
  std::mt19937_64 rng(43);
  int covered = 0;
  while (covered < 40) {
    Path p;
    const long long L = 4 + static_cast<long long>(rng() % 7);
    for (long long k = 0; k < L; ++k) p += (rng() & 1) ? '2' : '1';
    if (std::abs(weight(p)) == L) continue;
    ++covered;
    periods::EvolutionWord w;
    const int parts = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < parts; ++i)
      w.push_back({1 + static_cast<long long>(rng() % 3),
                   (rng() & 1) ? 1LL : -1LL});
    const auto step = [&](Path q) {
      for (const auto& [cap, e] : w) {
        for (long long k = 0; k < e; ++k) q = dynamics::evolve(q, cap).next;
        for (long long k = 0; k > e; --k) q = dynamics::evolve_inverse(q, cap);
      }
      return q;
    };
    Path q = step(p);
    long long n = 1;
    while (q != p) {
      q = step(q);
      ++n;
      REQUIRE(n < 2000000);
    }
    CHECK(periods::fundamental_period_composite(p, w) == mz(n));
  }
}

TEST_CASE("cyclic orbit counts by necklace counting and by enumeration") {
  for (long long m = 1; m <= 8; ++m)
    for (long long p = 0; p + m <= 14; ++p)
      CHECK(periods::cyclic_orbit_count(p, m) ==
            periods::cyclic_orbit_count_brute(p, m));
}

TEST_CASE("orbit counts over all flows factor across blocks") {
  const auto c = oracle::census_serial(8, 4);
  for (const auto& e : c.entries) {
    const auto bo = oracle::brute_orbits(8, e.m, {1, 2, 3, 4});
    CHECK(periods::orbit_count_all_evolutions(e.m, 8) == mz(bo.orbit_count));
  }
  for (long long L = 2; L <= 9; ++L) {
    const auto cl = oracle::census_serial(L);
    std::vector<long long> all;
    for (long long l = 1; 2 * l <= L; ++l) all.push_back(l);
    if (all.empty()) all.push_back(1);
    for (const auto& e : cl.entries) {
      if (e.m.empty()) continue;
      const auto bo = oracle::brute_orbits(L, e.m, all);
      CHECK(periods::orbit_count_all_evolutions(e.m, L) == mz(bo.orbit_count));
    }
  }
}

TEST_CASE("orbit counts under a single flow") {
  CHECK(periods::orbit_count_single({0, 0, 0, 1}, 8, 1) == 1);
  CHECK(periods::orbit_count_single({4}, 8, 1) == 1);
  CHECK(periods::orbit_count_single({1, 0, 1}, 8, 3) == 16);
  // Against the union-find oracle across all small contents.
  for (long long L = 4; L <= 9; ++L) {
    const auto cl = oracle::census_serial(L);
    for (const auto& e : cl.entries) {
      if (e.m.empty()) continue;
      for (long long l = 1; l <= 3; ++l)
        CHECK(periods::orbit_count_single(e.m, L, l) ==
              mz(oracle::brute_orbits(L, e.m, {l}).orbit_count));
    }
  }
}

TEST_CASE("degenerate flows: zero weight at saturating capacity") {
  // At weight zero and capacity at least the longest row all replacement
  // determinants vanish; the period comes from the half-turn of the longest
  // block instead and is still verified against brute iteration.
  for (long long L = 4; L <= 8; L += 2)
    for (unsigned long idx = 0; idx < (1ul << L); ++idx) {
      const Path p = bits_to_path(idx, L);
      if (weight(p) != 0) continue;
      const auto a = scattering::direct(p);
      if (a.blocks.empty()) continue;
      const long long js = a.blocks.front().len;
      for (long long l = js; l <= js + 1; ++l) {
        const long long bp = oracle::brute_period(p, l, 1000000);
        CHECK(periods::fundamental_period(p, l) == mz(bp));
        const mpz_class N = periods::generic_period(scattering::action(p).m, L, l);
        CHECK(N % mz(bp) == 0);
        CHECK(scattering::fast_evolve(p, l, N) == p);
      }
    }
}
