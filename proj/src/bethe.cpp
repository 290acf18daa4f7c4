#include "pbbs/bethe.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbbs/detail/gmp_compat.hpp"

namespace pbbs::bethe {

namespace {

mpz_class binom(long long n, long long k) {
  if (n < 0 || k < 0) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Gauss-Jordan over the rationals.  The systems solved here are the string
// center matrices, which are provably nonsingular, so a missing pivot is an
// internal error rather than bad input.
std::vector<mpq_class> solve_rational(const IntMatrix& a,
                                      const std::vector<mpq_class>& rhs) {
  const size_t n = a.size();
  std::vector<std::vector<mpq_class>> aug(n);
  for (size_t i = 0; i < n; ++i) {
    aug[i].reserve(n + 1);
    for (size_t j = 0; j < n; ++j) aug[i].emplace_back(a[i][j]);
    aug[i].push_back(rhs[i]);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("string center matrix is singular");
    std::swap(aug[col], aug[piv]);
    const mpq_class inv = 1 / aug[col][col];
    for (size_t j = col; j <= n; ++j) aug[col][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const mpq_class factor = aug[i][col];
      for (size_t j = col; j <= n; ++j) aug[i][j] -= factor * aug[col][j];
    }
  }
  std::vector<mpq_class> u(n);
  for (size_t i = 0; i < n; ++i) u[i] = aug[i][n];
  return u;
}

mpq_class fractional_part(const mpq_class& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return q - mpq_class(fl);
}

}  // namespace

StringSystem build(const std::vector<long long>& m, long long L) {
  scattering::validate_action(scattering::ActionVariable{m, L});
  StringSystem sys;
  sys.m = m;
  sys.L = L;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] > 0) {
      const long long j = static_cast<long long>(k) + 1;
      sys.lengths.push_back(j);
      sys.p.push_back(kkr::vacancy(m, L, j));
    }
  }
  const size_t s = sys.lengths.size();

  sys.F.assign(s, std::vector<mpz_class>(s, 0));
  for (size_t a = 0; a < s; ++a)
    for (size_t b = 0; b < s; ++b) {
      sys.F[a][b] =
          detail::mz(2 * std::min(sys.lengths[a], sys.lengths[b]) *
                     m[static_cast<size_t>(sys.lengths[b] - 1)]);
      if (a == b) sys.F[a][b] += detail::mz(sys.p[a]);
    }
  sys.det_f = det_bareiss(sys.F);

  size_t dim = 0;
  for (size_t a = 0; a < s; ++a)
    dim += static_cast<size_t>(m[static_cast<size_t>(sys.lengths[a] - 1)]);
  sys.A.assign(dim, std::vector<mpz_class>(dim, 0));
  size_t row = 0;
  for (size_t a = 0; a < s; ++a) {
    const long long ma = m[static_cast<size_t>(sys.lengths[a] - 1)];
    for (long long alpha = 0; alpha < ma; ++alpha, ++row) {
      size_t col = 0;
      for (size_t b = 0; b < s; ++b) {
        const long long mb = m[static_cast<size_t>(sys.lengths[b] - 1)];
        for (long long beta = 0; beta < mb; ++beta, ++col) {
          mpz_class v = detail::mz(2 * std::min(sys.lengths[a], sys.lengths[b]));
          if (a == b) {
            v -= 1;
            if (alpha == beta) v += detail::mz(sys.p[a] + ma);
          }
          sys.A[row][col] = v;
        }
      }
    }
  }
  sys.det_a = det_bareiss(sys.A);

  // Two determinant identities pin the construction down: F has row sums L
  // and det F = L * p_1 * ... * p_{s-1}, and det A factors through det F.
  for (size_t a = 0; a < s; ++a) {
    mpz_class sum = 0;
    for (size_t b = 0; b < s; ++b) sum += sys.F[a][b];
    if (sum != detail::mz(L)) throw std::logic_error("block matrix row sum is not L");
  }
  mpz_class expect_f = detail::mz(L);
  for (size_t a = 0; a + 1 < s; ++a) expect_f *= detail::mz(sys.p[a]);
  if (s > 0 && sys.det_f != expect_f)
    throw std::logic_error("block determinant identity failed");
  mpz_class expect_a = sys.det_f;
  for (size_t a = 0; a < s; ++a) {
    const long long ma = m[static_cast<size_t>(sys.lengths[a] - 1)];
    for (long long i = 0; i + 1 < ma; ++i) expect_a *= detail::mz(sys.p[a] + ma);
  }
  if (sys.det_a != expect_a)
    throw std::logic_error("string center determinant identity failed");
  return sys;
}

mpz_class det_bareiss(IntMatrix mat) {
  const size_t n = mat.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k] == 0) {
      size_t r = k + 1;
      while (r < n && mat[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(mat[k], mat[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  return sign * mat[n - 1][n - 1];
}

mpz_class det_with_column(IntMatrix f, size_t col,
                          const std::vector<mpz_class>& column) {
  if (col >= f.size() || column.size() != f.size())
    throw std::invalid_argument("column replacement out of range");
  for (size_t i = 0; i < f.size(); ++i) f[i][col] = column[i];
  return det_bareiss(std::move(f));
}

mpz_class omega_count(const std::vector<long long>& m, long long L) {
  const StringSystem sys = build(m, L);
  const size_t s = sys.lengths.size();
  if (s == 0) return 1;

  mpq_class q1(sys.det_f);
  for (size_t a = 0; a < s; ++a) {
    const long long ma = sys.m[static_cast<size_t>(sys.lengths[a] - 1)];
    q1 *= make_q(binom(sys.p[a] + ma - 1, ma - 1), detail::mz(ma));
  }

  // Product form: the last (longest) factor degenerates to L / m_s when its
  // vacancy vanishes, which happens exactly for content filling half the
  // circle.
  mpq_class q2 =
      sys.p[s - 1] > 0
          ? make_q(detail::mz(L), detail::mz(sys.p[s - 1]))
          : make_q(detail::mz(L),
                   detail::mz(sys.m[static_cast<size_t>(sys.lengths[s - 1] - 1)]));
  for (size_t a = 0; a < s; ++a) {
    const long long ma = sys.m[static_cast<size_t>(sys.lengths[a] - 1)];
    if (a + 1 == s && sys.p[a] == 0) continue;
    q2 *= binom(sys.p[a] + ma - 1, ma);
  }

  if (q1 != q2) throw std::logic_error("state count forms disagree");
  if (q1.get_den() != 1)
    throw std::logic_error("state count is not an integer");
  return q1.get_num();
}

BetheRoots psi(const scattering::AngleRep& a) {
  scattering::validate_angle(a);
  const scattering::ActionVariable av = scattering::action_of(a);
  const StringSystem sys = build(av.m, av.L);

  // Both the matrix and the right-hand side run over blocks in ascending
  // length; angle blocks are stored longest first, so walk them backwards.
  std::vector<mpq_class> rhs;
  for (size_t b = a.blocks.size(); b-- > 0;) {
    const auto& blk = a.blocks[b];
    const long long p = scattering::vacancy(av, blk.len);
    const long long mj = static_cast<long long>(blk.riggings.size());
    const mpq_class c = make_q(detail::mz(p + mj + 1), 2);
    for (size_t i = 0; i < blk.riggings.size(); ++i)
      rhs.push_back(c + mpq_class(blk.riggings[i] + a.offset) +
                    static_cast<long>(i));
  }
  const std::vector<mpq_class> u = solve_rational(sys.A, rhs);

  BetheRoots out;
  out.lengths = sys.lengths;
  size_t at = 0;
  for (size_t a2 = 0; a2 < sys.lengths.size(); ++a2) {
    const size_t ma =
        static_cast<size_t>(av.m[static_cast<size_t>(sys.lengths[a2] - 1)]);
    out.roots.emplace_back(u.begin() + static_cast<long>(at),
                           u.begin() + static_cast<long>(at + ma));
    at += ma;
  }
  return out;
}

CanonicalInvariant canonical_invariant(const scattering::AngleRep& a) {
  const BetheRoots br = psi(a);
  CanonicalInvariant inv;
  for (size_t b = 0; b < br.lengths.size(); ++b) {
    std::vector<mpq_class> fracs;
    fracs.reserve(br.roots[b].size());
    for (const auto& u : br.roots[b]) fracs.push_back(fractional_part(u));
    std::sort(fracs.begin(), fracs.end());
    inv.emplace_back(br.lengths[b], std::move(fracs));
  }
  return inv;
}

bool eigenvalue_is_root_of_unity(const scattering::AngleRep& a, long long l,
                                 const mpz_class& N) {
  const BetheRoots br = psi(a);
  mpq_class total = 0;
  const mpq_class half = make_q(1, 2);
  for (size_t b = 0; b < br.lengths.size(); ++b) {
    const long long coeff = std::min(br.lengths[b], l);
    for (const auto& u : br.roots[b])
      total += mpq_class(detail::mz(coeff)) * (u + half);
  }
  const mpq_class scaled = mpq_class(N) * total;
  return scaled.get_den() == 1;
}

}  // namespace pbbs::bethe
