#include <doctest.h>

#include <random>
#include <vector>
#include <algorithm>
#include <map>
#include <stdexcept>

#include "pbbs/bethe.hpp"
#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/oracle.hpp"
#include "pbbs/scattering.hpp"

using namespace pbbs;
using detail::mz;

namespace {

// Independent determinant for cross-checking the fraction-free elimination:
// plain Gauss elimination over the rationals.
mpq_class det_rational(const bethe::IntMatrix& m) {
  const size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m[i][j]);
  mpq_class det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return mpq_class(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

mpz_class binom(long long n, long long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

}  // namespace

TEST_CASE("string system of the 26-cell example") {
  // Rows of length 1,1,2,2,3 on a 26-cell circle.
  const auto sys = bethe::build({2, 2, 1}, 26);
  CHECK(sys.lengths == std::vector<long long>{1, 2, 3});
  CHECK(sys.p == std::vector<long long>{16, 10, 8});
  CHECK(sys.det_f == 4160);
  // Column replacement by the capacity-3 speed vector.
  std::vector<mpz_class> col;
  for (const long long len : sys.lengths) col.push_back(mz(std::min(len, 3LL)));
  const std::vector<long long> want{80, 288, 704};
  for (size_t j = 0; j < 3; ++j)
    CHECK(bethe::det_with_column(sys.F, j, col) == mz(want[j]));
}

TEST_CASE("string system identities hold for random contents") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 200; ++it) {
    std::vector<long long> m(1 + rng() % 4, 0);
    long long boxes = 0;
    for (size_t j = 0; j < m.size(); ++j) {
      m[j] = static_cast<long long>(rng() % 3);
      boxes += static_cast<long long>(j + 1) * m[j];
    }
    if (boxes == 0) continue;
    const long long L = 2 * boxes + static_cast<long long>(rng() % 10);
    // build() itself asserts: row sums of F equal L, det F factors over the
    // vacancies, and det A carries the remaining (p+m)^(m-1) factors.
    const auto sys = bethe::build(m, L);
    CHECK(sys.det_f > 0);
    CHECK(det_rational(sys.F) == mpq_class(sys.det_f));
    CHECK(det_rational(sys.A) == mpq_class(sys.det_a));
  }
}

TEST_CASE("fraction-free determinant matches rational elimination") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 200; ++it) {
    const size_t n = 1 + rng() % 5;
    bethe::IntMatrix m(n, std::vector<mpz_class>(n));
    for (auto& row : m)
      for (auto& x : row) x = mz(static_cast<long long>(rng() % 21) - 10);
    CHECK(mpq_class(bethe::det_bareiss(m)) == det_rational(m));
  }
  CHECK(bethe::det_bareiss({}) == 1);
  CHECK(bethe::det_bareiss({{mz(0), mz(1)}, {mz(0), mz(2)}}) == 0);
}

TEST_CASE("class sizes of the 8-cell half-filled table") {
  CHECK(bethe::omega_count({4}, 8) == 2);
  CHECK(bethe::omega_count({2, 1}, 8) == 24);
  CHECK(bethe::omega_count({0, 2}, 8) == 4);
  CHECK(bethe::omega_count({1, 0, 1}, 8) == 32);
  CHECK(bethe::omega_count({0, 0, 0, 1}, 8) == 8);
  CHECK(bethe::omega_count({}, 8) == 1);
}

TEST_CASE("class sizes complete the binomial count") {
  for (long long L = 1; L <= 16; ++L)
    for (long long M = 0; 2 * M <= L; ++M) {
      mpz_class total = 0;
      // Enumerate contents as partitions of M.
      std::vector<long long> m;
      const auto rec = [&](auto&& self, long long left, long long maxpart) -> void {
        if (left == 0) {
          std::vector<long long> v = m;
          while (!v.empty() && v.back() == 0) v.pop_back();
          total += bethe::omega_count(v, L);
          return;
        }
        for (long long j = std::min(left, maxpart); j >= 1; --j) {
          if (static_cast<long long>(m.size()) < j) m.resize(j, 0);
          m[static_cast<size_t>(j - 1)] += 1;
          self(self, left - j, j);
          m[static_cast<size_t>(j - 1)] -= 1;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
      };
      rec(rec, M, M == 0 ? 1 : M);
      CHECK(total == binom(L, M));
    }
}

TEST_CASE("string centers solve the linear system they are built from") {
  std::mt19937_64 rng(33);
  int covered = 0;
  while (covered < 150) {
    Path p;
    const long long L = 4 + static_cast<long long>(rng() % 13);
    for (long long k = 0; k < L; ++k) p += (rng() & 1) ? '2' : '1';
    if (weight(p) < 0) continue;
    const auto a = scattering::direct(p);
    if (a.blocks.empty()) continue;
    ++covered;
    const auto roots = bethe::psi(a);
    const auto sys = bethe::build(scattering::action_of(a).m, a.L);
    REQUIRE(roots.lengths == sys.lengths);
    // Flatten the per-block centers in the row order of A (blocks ascending).
    std::vector<mpq_class> u;
    for (const auto& block : roots.roots)
      for (const auto& root : block) u.push_back(root);
    // Rebuild the right-hand side and multiply through A.
    std::vector<mpq_class> rhs;
    for (auto it = a.blocks.rbegin(); it != a.blocks.rend(); ++it) {
      const long long pj = scattering::vacancy(scattering::action_of(a), it->len);
      const long long mj = static_cast<long long>(it->riggings.size());
      for (long long i = 0; i < mj; ++i) {
        mpq_class c(mz(pj + mj + 1), mz(2));
        c.canonicalize();
        rhs.push_back(c + mpq_class(it->riggings[static_cast<size_t>(i)] + a.offset) +
                      mpq_class(mz(i)));
      }
    }
    REQUIRE(rhs.size() == u.size());
    REQUIRE(sys.A.size() == u.size());
    for (size_t r = 0; r < sys.A.size(); ++r) {
      mpq_class acc = 0;
      for (size_t c = 0; c < sys.A.size(); ++c)
        acc += mpq_class(sys.A[r][c]) * u[c];
      CHECK(acc == rhs[r]);
    }
  }
}

TEST_CASE("the canonical invariant identifies a state across representations") {
  const auto a = scattering::make_rep(19, 2, {{3, {1}}, {2, {0, 1}}, {1, {4, 8}}});
  const auto b = scattering::make_rep(19, 2, {{3, {1}}, {2, {0, 1}}, {1, {4, 7}}});
  CHECK(bethe::canonical_invariant(a) == bethe::canonical_invariant(a));
  CHECK(bethe::canonical_invariant(a) != bethe::canonical_invariant(b));
  // Every state with a given content gets its own invariant, and all
  // representations of one state (normalized or slid) agree on it.
  const auto c = oracle::census_serial(8);
  for (const auto& e : c.entries) {
    if (e.m != std::vector<long long>{2, 1}) continue;
    std::map<bethe::CanonicalInvariant, std::vector<Path>> classes;
    for (const auto& p : e.paths) {
      const auto rep = scattering::direct(p);
      const auto inv = bethe::canonical_invariant(rep);
      CHECK(bethe::canonical_invariant(scattering::normalize(rep)) == inv);
      CHECK(bethe::canonical_invariant(scattering::slide(rep, 2, mz(3))) == inv);
      classes[inv].push_back(p);
    }
    CHECK(classes.size() == e.paths.size());
    CHECK(classes.size() == 24);
  }
}

TEST_CASE("return phases: integrality detector") {
  const Path p = "2221111221121";
  const auto a = scattering::direct(p);
  CHECK(bethe::eigenvalue_is_root_of_unity(a, 2, mz(91)));
  CHECK_FALSE(bethe::eigenvalue_is_root_of_unity(a, 2, mz(1)));
  CHECK_FALSE(bethe::eigenvalue_is_root_of_unity(a, 2, mz(90)));
}
