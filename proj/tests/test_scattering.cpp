#include <doctest.h>

#include <random>
#include <set>
#include <vector>
#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "pbbs/bethe.hpp"
#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/dynamics.hpp"
#include "pbbs/path.hpp"
#include "pbbs/scattering.hpp"

using namespace pbbs;
using detail::mz;
using scattering::make_rep;

namespace {

Path bits_to_path(unsigned long idx, long long L) {
  Path p;
  for (long long k = 0; k < L; ++k)
    p += ((idx >> (L - 1 - k)) & 1) ? '2' : '1';
  return p;
}

Path random_path(std::mt19937_64& rng, long long L) {
  Path p;
  for (long long k = 0; k < L; ++k) p += (rng() & 1) ? '2' : '1';
  return p;
}

}  // namespace

TEST_CASE("cut point: minimal rotation producing a highest word") {
  const Path P = "2211221112122111221";
  const auto [d, hp] = scattering::decompose(P);
  CHECK(d == 2);
  CHECK(hp == rotate_left(P, 2));
  // All valid cut points of this state.  The trail-minimum construction
  // yields 2, 6 and 13; cut 7 sits on an ascending slope at the same
  // suffix-minimum level, so its rotation is highest as well.
  std::set<long long> valid;
  for (long long k = 0; k < 19; ++k)
    if (is_highest(rotate_left(P, k))) valid.insert(k);
  CHECK(valid == std::set<long long>{2, 6, 7, 13});
  for (long long k : {2, 6, 13}) CHECK(valid.count(k) == 1);

  const Path E = "2122112211221111222111122";
  CHECK(scattering::decompose(E).first == 4);
  std::set<long long> valid25;
  for (long long k = 0; k < 25; ++k)
    if (is_highest(rotate_left(E, k))) valid25.insert(k);
  CHECK(valid25 == std::set<long long>{4, 8, 12, 13, 19});

  CHECK(scattering::decompose("1111").first == 0);
  CHECK_THROWS_AS(scattering::decompose("1222"), std::invalid_argument);
}

TEST_CASE("cut point agrees with direct search on random states") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 400; ++it) {
    const Path p = random_path(rng, 2 + static_cast<long long>(rng() % 15));
    if (weight(p) < 0) continue;
    const auto [d, hp] = scattering::decompose(p);
    long long first = -1;
    for (long long k = 0; k < static_cast<long long>(p.size()); ++k)
      if (is_highest(rotate_left(p, k))) {
        first = k;
        break;
      }
    CHECK(d == first);
    CHECK(hp == rotate_left(p, d));
  }
}

TEST_CASE("direct transform of the 19-cell running example") {
  const auto a = scattering::direct("2211221112122111221");
  CHECK(a.L == 19);
  CHECK(a.offset == 2);
  REQUIRE(a.blocks.size() == 3);
  CHECK(a.blocks[0].len == 3);
  CHECK(a.blocks[0].riggings == std::vector<mpz_class>{mz(1)});
  CHECK(a.blocks[1].len == 2);
  CHECK(a.blocks[1].riggings == std::vector<mpz_class>{mz(0), mz(1)});
  CHECK(a.blocks[2].len == 1);
  CHECK(a.blocks[2].riggings == std::vector<mpz_class>{mz(4), mz(8)});
}

TEST_CASE("angle validation rejects malformed data") {
  CHECK_NOTHROW(scattering::validate_angle(
      make_rep(19, 2, {{3, {1}}, {2, {0, 1}}, {1, {4, 8}}})));
  // Too many boxes for the circle.
  CHECK_THROWS_AS(make_rep(5, 0, {{9, {0}}}), std::invalid_argument);
  // Window entries must be weakly increasing.
  CHECK_THROWS_AS(make_rep(19, 0, {{2, {3, 1}}}), std::invalid_argument);
  // Window span may not exceed the vacancy (p_1 = 15 here).
  CHECK_NOTHROW(make_rep(19, 0, {{1, {0, 15}}}));
  CHECK_THROWS_AS(make_rep(19, 0, {{1, {0, 16}}}), std::invalid_argument);
  // Block lengths must strictly decrease.
  CHECK_THROWS_AS(make_rep(19, 0, {{2, {0}}, {2, {1}}}), std::invalid_argument);
}

TEST_CASE("all cut points of a state yield the same angle class") {
  const auto A2 = make_rep(19, 2, {{3, {1}}, {2, {0, 1}}, {1, {4, 8}}});
  const auto A6 = make_rep(19, 6, {{3, {1}}, {2, {1, 3}}, {1, {2, 6}}});
  const auto A13 = make_rep(19, 13, {{3, {0}}, {2, {2, 3}}, {1, {3, 8}}});
  const auto inv = bethe::canonical_invariant(A2);
  CHECK(bethe::canonical_invariant(scattering::direct("2211221112122111221")) ==
        inv);
  CHECK(bethe::canonical_invariant(A6) == inv);
  CHECK(bethe::canonical_invariant(A13) == inv);
  // And all three recover the same state.
  CHECK(scattering::inverse(A2) == "2211221112122111221");
  CHECK(scattering::inverse(A6) == "2211221112122111221");
  CHECK(scattering::inverse(A13) == "2211221112122111221");
}

TEST_CASE("sliding a block relates the printed 25-cell representatives") {
  const Path E = "2122112211221111222111122";
  const auto A12 = make_rep(25, 12, {{4, {1}}, {3, {1}}, {2, {7, 7}}, {1, {10}}});
  const auto A19 = make_rep(25, 19, {{4, {0}}, {3, {3}}, {2, {4, 4}}, {1, {5}}});
  CHECK(is_highest(rotate_left(E, 12)));
  CHECK(is_highest(rotate_left(E, 19)));
  const auto s3 = scattering::slide(A12, 3, 1);
  CHECK(s3.offset == 12);  // the offset never moves under a slide
  REQUIRE(s3.blocks.size() == 4);
  for (size_t b = 0; b < 4; ++b) {
    REQUIRE(s3.blocks[b].riggings.size() == A19.blocks[b].riggings.size());
    for (size_t i = 0; i < s3.blocks[b].riggings.size(); ++i)
      CHECK(s3.blocks[b].riggings[i] + s3.offset ==
            A19.blocks[b].riggings[i] + A19.offset);
  }
  const auto inv = bethe::canonical_invariant(scattering::direct(E));
  CHECK(bethe::canonical_invariant(A12) == inv);
  CHECK(bethe::canonical_invariant(A19) == inv);
  CHECK(scattering::inverse(A12) == E);
  CHECK(scattering::inverse(A19) == E);
}

TEST_CASE("slides commute, compose additively, and preserve the class") {
  std::mt19937_64 rng(22);
  int covered = 0;
  while (covered < 150) {
    const Path p = random_path(rng, 6 + static_cast<long long>(rng() % 11));
    if (weight(p) < 0) continue;
    const auto a = scattering::direct(p);
    if (a.blocks.empty()) continue;
    ++covered;
    const auto pick = [&] {
      return a.blocks[rng() % a.blocks.size()].len;
    };
    const long long j = pick(), k = pick();
    const long long n = 1 + static_cast<long long>(rng() % 3);
    const auto jk = scattering::slide(scattering::slide(a, j, mz(n)), k, mz(1));
    const auto kj = scattering::slide(scattering::slide(a, k, mz(1)), j, mz(n));
    CHECK(jk.blocks == kj.blocks);
    CHECK(scattering::slide(scattering::slide(a, j, mz(1)), j, mz(n - 1)).blocks ==
          scattering::slide(a, j, mz(n)).blocks);
    CHECK(bethe::canonical_invariant(scattering::slide(a, j, mz(n))) ==
          bethe::canonical_invariant(a));
    CHECK(scattering::inverse(scattering::slide(a, j, mz(n))) == p);
  }
  CHECK_THROWS_AS(
      scattering::slide(make_rep(8, 0, {{2, {0}}}), 3, mz(1)), std::invalid_argument);
}

TEST_CASE("the product of full slides advances every window entry by L") {
  const auto a = scattering::direct("2122112211221111222111122");
  auto full = a;
  for (const auto& b : a.blocks)
    full = scattering::slide(
        full, b.len, mz(static_cast<long long>(b.riggings.size())));
  CHECK(full.offset == a.offset);
  for (size_t i = 0; i < a.blocks.size(); ++i)
    for (size_t j = 0; j < a.blocks[i].riggings.size(); ++j)
      CHECK(full.blocks[i].riggings[j] == a.blocks[i].riggings[j] + 25);
}

TEST_CASE("linearized evolution adds the clipped length and is additive") {
  const auto a = scattering::direct("2211221112122111221");
  const auto one = scattering::linear_evolve(a, 2, mz(1));
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    const long long step = std::min(a.blocks[i].len, 2LL);
    for (size_t j = 0; j < a.blocks[i].riggings.size(); ++j)
      CHECK(one.blocks[i].riggings[j] == a.blocks[i].riggings[j] + mz(step));
  }
  const auto big = scattering::linear_evolve(a, 2, mz(1000));
  const auto split = scattering::linear_evolve(
      scattering::linear_evolve(a, 2, mz(990)), 2, mz(10));
  CHECK(big.blocks == split.blocks);
  CHECK(big.offset == split.offset);
}

TEST_CASE("normalization lands the two long-time examples on frozen reps") {
  const Path P = "2211221112122111221";
  const auto n2 = scattering::normalize(
      scattering::linear_evolve(scattering::direct(P), 2, mz(1000)));
  const auto want2 = make_rep(19, 14, {{3, {1}}, {2, {0, 1}}, {1, {3, 7}}});
  CHECK(n2.offset == want2.offset);
  REQUIRE(n2.blocks.size() == 3);
  CHECK(n2.blocks[0].riggings == want2.blocks[0].riggings);
  CHECK(n2.blocks[1].riggings == want2.blocks[1].riggings);
  CHECK(n2.blocks[2].riggings == want2.blocks[2].riggings);

  const auto n3 = scattering::normalize(
      scattering::linear_evolve(scattering::direct(P), 3, mz(1000)));
  const auto want3 = make_rep(19, 6, {{3, {1}}, {2, {0, 2}}, {1, {0, 4}}});
  CHECK(n3.offset == want3.offset);
  CHECK(n3.blocks == want3.blocks);

  CHECK(bethe::canonical_invariant(n2) == bethe::canonical_invariant(want2));
  CHECK(bethe::canonical_invariant(n3) == bethe::canonical_invariant(want3));
}

TEST_CASE("normalization is idempotent and keeps riggings in range") {
  std::mt19937_64 rng(23);
  int covered = 0;
  while (covered < 200) {
    const Path p = random_path(rng, 4 + static_cast<long long>(rng() % 13));
    if (weight(p) < 0) continue;
    const auto a = scattering::direct(p);
    ++covered;
    const long long l = 1 + static_cast<long long>(rng() % 4);
    const long long t = static_cast<long long>(rng() % 2000) - 1000;
    const auto n = scattering::normalize(scattering::linear_evolve(a, l, mz(t)));
    CHECK(n.offset >= 0);
    CHECK(n.offset < mz(n.L));
    const auto av = scattering::action_of(n);
    for (const auto& b : n.blocks) {
      const long long vac = scattering::vacancy(av, b.len);
      for (const auto& r : b.riggings) {
        CHECK(r >= 0);
        CHECK(r <= mz(vac));
      }
    }
    const auto again = scattering::normalize(n);
    CHECK(again.offset == n.offset);
    CHECK(again.blocks == n.blocks);
  }
}

TEST_CASE("direct and inverse transforms are mutually inverse") {
  for (long long L = 1; L <= 10; ++L)
    for (unsigned long idx = 0; idx < (1ul << L); ++idx) {
      const Path p = bits_to_path(idx, L);
      if (weight(p) < 0) continue;
      CHECK(scattering::inverse(scattering::direct(p)) == p);
    }
}

TEST_CASE("the action variable ignores rotation and letter swap") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 300; ++it) {
    const Path p = random_path(rng, 2 + static_cast<long long>(rng() % 13));
    const auto av = scattering::action(p);
    CHECK(av.L == static_cast<long long>(p.size()));
    CHECK(scattering::action(rotate_left(p, static_cast<long long>(rng() % p.size()))).m ==
          av.m);
    Path swapped = p;
    for (char& c : swapped) c = (c == '1') ? '2' : '1';
    CHECK(scattering::action(swapped).m == av.m);
  }
}

TEST_CASE("closed-form evolution: frozen long-time values") {
  const Path P = "2211221112122111221";
  CHECK(scattering::fast_evolve(P, 2, mz(1000)) == "1211221112122211221");
  CHECK(scattering::fast_evolve(P, 3, mz(1000)) == "2112221211221112112");
}

TEST_CASE("closed-form evolution equals iteration, both time directions") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 200; ++it) {
    const long long L = 2 + static_cast<long long>(rng() % 15);
    const Path p = random_path(rng, L);
    if (std::abs(weight(p)) == L) {
      // Constant states are fixed by every evolution.
      CHECK(scattering::fast_evolve(p, 2, mz(5)) == p);
      continue;
    }
    const long long l = 1 + static_cast<long long>(rng() % 5);
    const long long t = static_cast<long long>(rng() % 40);
    Path q = p;
    for (long long k = 0; k < t; ++k) q = dynamics::evolve(q, l).next;
    CHECK(scattering::fast_evolve(p, l, mz(t)) == q);
    CHECK(scattering::fast_evolve(q, l, mz(-t)) == p);
  }
}

TEST_CASE("capacity-1 closed form is the cyclic shift") {
  std::mt19937_64 rng(26);
  for (int it = 0; it < 100; ++it) {
    const Path p = random_path(rng, 2 + static_cast<long long>(rng() % 9));
    const long long t = static_cast<long long>(rng() % 30);
    CHECK(scattering::fast_evolve(p, 1, mz(t)) == rotate_right(p, t));
  }
}
