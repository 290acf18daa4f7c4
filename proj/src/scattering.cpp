#include "pbbs/scattering.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pbbs/bethe.hpp"
#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/dynamics.hpp"

namespace pbbs::scattering {

namespace {

Path letter_swap(const Path& p) {
  Path q = p;
  for (char& c : q) c = (c == '1') ? '2' : '1';
  return q;
}

// Floor-divides n by m > 0, returning quotient and remainder in [0, m).
std::pair<mpz_class, mpz_class> fdiv(const mpz_class& n, long long m) {
  mpz_class q, r;
  const mpz_class mm = detail::mz(m);
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), mm.get_mpz_t());
  return {q, r};
}

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw std::logic_error("integer unexpectedly exceeds machine range");
  return z.get_si();
}

// Entry of the quasi-periodic extension of a window at 1-based index i + n,
// where i is in [1, m] and n may be any integer.
mpz_class extended_entry(const AngleBlock& b, long long p, long long i,
                         const mpz_class& n) {
  const long long m = static_cast<long long>(b.riggings.size());
  auto [q, r] = fdiv(n, m);
  long long idx = i + to_ll(r);
  if (idx > m) {
    idx -= m;
    q += 1;
  }
  return b.riggings[static_cast<size_t>(idx - 1)] + q * detail::mz(p);
}

// Slide sigma_k^n acting on windows in place (offsets are never touched by
// slides).  k is given as an index into a.blocks.
void slide_in_place(AngleRep& a, size_t k_index, const mpz_class& n) {
  const ActionVariable av = action_of(a);
  const long long k = a.blocks[k_index].len;
  for (size_t b = 0; b < a.blocks.size(); ++b) {
    if (b == k_index) continue;
    const mpz_class add = detail::mz(2 * std::min(a.blocks[b].len, k)) * n;
    for (auto& j : a.blocks[b].riggings) j += add;
  }
  AngleBlock& blk = a.blocks[k_index];
  const long long p = vacancy(av, k);
  const long long m = static_cast<long long>(blk.riggings.size());
  std::vector<mpz_class> next(blk.riggings.size());
  const mpz_class add = detail::mz(2 * k) * n;
  for (long long i = 1; i <= m; ++i)
    next[static_cast<size_t>(i - 1)] = extended_entry(blk, p, i, n) + add;
  blk.riggings = std::move(next);
}

}  // namespace

void validate_action(const ActionVariable& a) {
  if (a.L < 1) throw std::invalid_argument("action variable needs L >= 1");
  long long M = 0;
  for (size_t k = 0; k < a.m.size(); ++k) {
    if (a.m[k] < 0) throw std::invalid_argument("multiplicities must be >= 0");
    M += (static_cast<long long>(k) + 1) * a.m[k];
  }
  if (2 * M > a.L)
    throw std::invalid_argument("content exceeds L/2 boxes");
}

long long vacancy(const ActionVariable& a, long long j) {
  return kkr::vacancy(a.m, a.L, j);
}

std::vector<long long> occupied_lengths(const ActionVariable& a) {
  std::vector<long long> H;
  for (size_t k = 0; k < a.m.size(); ++k)
    if (a.m[k] > 0) H.push_back(static_cast<long long>(k) + 1);
  return H;
}

AngleRep make_rep(
    long long L, long long offset,
    const std::vector<std::pair<long long, std::vector<long long>>>& blocks) {
  AngleRep a;
  a.L = L;
  a.offset = detail::mz(offset);
  for (const auto& [len, window] : blocks) {
    AngleBlock b;
    b.len = len;
    for (long long r : window) b.riggings.push_back(detail::mz(r));
    a.blocks.push_back(std::move(b));
  }
  validate_angle(a);
  return a;
}

ActionVariable action_of(const AngleRep& a) {
  ActionVariable av;
  av.L = a.L;
  for (const auto& b : a.blocks) {
    if (b.len < 1) throw std::invalid_argument("block length must be >= 1");
    if (av.m.size() < static_cast<size_t>(b.len))
      av.m.resize(static_cast<size_t>(b.len), 0);
    av.m[static_cast<size_t>(b.len - 1)] +=
        static_cast<long long>(b.riggings.size());
  }
  return av;
}

void validate_angle(const AngleRep& a) {
  const ActionVariable av = action_of(a);
  validate_action(av);
  for (size_t b = 0; b < a.blocks.size(); ++b) {
    const auto& blk = a.blocks[b];
    if (blk.riggings.empty())
      throw std::invalid_argument("angle block must hold at least one row");
    if (b > 0 && a.blocks[b - 1].len <= blk.len)
      throw std::invalid_argument("angle blocks must have distinct descending lengths");
    for (size_t i = 1; i < blk.riggings.size(); ++i)
      if (blk.riggings[i] < blk.riggings[i - 1])
        throw std::invalid_argument("rigging window must be weakly increasing");
    const long long p = vacancy(av, blk.len);
    if (blk.riggings.back() - blk.riggings.front() > detail::mz(p))
      throw std::invalid_argument("rigging window spans more than one quasi-period");
  }
}

std::pair<long long, Path> decompose(const Path& p) {
  require_valid_path(p);
  if (weight(p) < 0)
    throw std::invalid_argument(
        "decomposition needs nonnegative weight; letter-swap the state first");
  const long long L = static_cast<long long>(p.size());

  // Prefix sums of +1/-1 for letters 1/2.  The rotation by d is highest
  // exactly when every suffix prefix-sum stays above s[d] and the wrapped
  // part stays nonnegative; both tests are O(1) with min tables.
  std::vector<long long> s(static_cast<size_t>(L) + 1, 0);
  for (long long i = 1; i <= L; ++i)
    s[static_cast<size_t>(i)] = s[static_cast<size_t>(i - 1)] +
                                (p[static_cast<size_t>(i - 1)] == '1' ? 1 : -1);
  std::vector<long long> suffix_min(static_cast<size_t>(L) + 2,
                                    std::numeric_limits<long long>::max());
  for (long long i = L; i >= 0; --i)
    suffix_min[static_cast<size_t>(i)] =
        std::min(s[static_cast<size_t>(i)], suffix_min[static_cast<size_t>(i) + 1]);
  long long prefix_min = std::numeric_limits<long long>::max();
  for (long long d = 0; d < L; ++d) {
    if (d > 0) prefix_min = std::min(prefix_min, s[static_cast<size_t>(d)]);
    const bool tail_ok = suffix_min[static_cast<size_t>(d) + 1] >= s[static_cast<size_t>(d)];
    const bool wrap_ok =
        d == 0 || s[static_cast<size_t>(L)] - s[static_cast<size_t>(d)] + prefix_min >= 0;
    if (tail_ok && wrap_ok) return {d, rotate_left(p, d)};
  }
  throw std::logic_error("no highest rotation found for a state of weight >= 0");
}

ActionVariable action(const Path& p) {
  const Path q = weight(p) >= 0 ? p : letter_swap(p);
  const auto [d, plus] = decompose(q);
  (void)d;
  return ActionVariable{kkr::multiplicities(kkr::kkr_map(plus)),
                        static_cast<long long>(q.size())};
}

AngleRep slide(const AngleRep& a, long long k, const mpz_class& n) {
  validate_angle(a);
  AngleRep out = a;
  for (size_t b = 0; b < out.blocks.size(); ++b) {
    if (out.blocks[b].len == k) {
      slide_in_place(out, b, n);
      return out;
    }
  }
  throw std::invalid_argument("slide index must be an occurring row length");
}

AngleRep linear_evolve(const AngleRep& a, long long l, const mpz_class& t) {
  validate_angle(a);
  if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
  AngleRep out = a;
  for (auto& b : out.blocks) {
    const mpz_class add = detail::mz(std::min(b.len, l)) * t;
    for (auto& j : b.riggings) j += add;
  }
  return out;
}

AngleRep normalize(const AngleRep& a) {
  validate_angle(a);
  AngleRep work = a;

  if (!work.blocks.empty()) {
    const ActionVariable av = action_of(work);
    // Work on absolute entries: fold the offset into the windows.
    for (auto& b : work.blocks)
      for (auto& j : b.riggings) j += work.offset;
    work.offset = 0;

    // An offset d admits block j (meaning the block's riggings J - d land in
    // [0, p_j]) exactly when d lies in [last - p_j, first].  Slide each block
    // in turn, longest first, so that these intervals share a point: target
    // the current intersection's lower end v and advance the block to the
    // window whose interval straddles v.  Blocks after the first have p > 0,
    // so the crossing exponent exists and is found per residue class.
    const auto interval_of = [&](const AngleBlock& b) {
      const long long p = vacancy(av, b.len);
      return std::pair<mpz_class, mpz_class>(b.riggings.back() - detail::mz(p),
                                             b.riggings.front());
    };
    auto [lo, hi] = interval_of(work.blocks.front());
    for (size_t idx = 1; idx < work.blocks.size(); ++idx) {
      AngleBlock& blk = work.blocks[idx];
      const long long p = vacancy(av, blk.len);
      if (p <= 0)
        throw std::logic_error("non-longest block with vanishing vacancy");
      const long long m = static_cast<long long>(blk.riggings.size());
      const mpz_class v = lo;
      // Minimal n with extended entry at index n+1 at least v.
      bool have = false;
      mpz_class n_min;
      for (long long r = 0; r < m; ++r) {
        mpz_class q;
        mpz_class num = v - blk.riggings[static_cast<size_t>(r)];
        const mpz_class pp = detail::mz(p);
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
        mpz_class cand = q * detail::mz(m) + detail::mz(r);
        if (!have || cand < n_min) {
          n_min = cand;
          have = true;
        }
      }
      slide_in_place(work, idx, n_min);
      // The slide moved every processed block (all at least this length)
      // by the same 2 * len * n, so the intersection co-moves.
      const mpz_class shift = detail::mz(2 * blk.len) * n_min;
      lo += shift;
      hi += shift;
      auto [blo, bhi] = interval_of(blk);
      lo = std::max(lo, blo);
      hi = std::min(hi, bhi);
      if (lo > hi)
        throw std::logic_error("slide alignment lost the common offset interval");
    }

    work.offset = hi;  // the largest admissible offset zeroes some rigging
    for (auto& b : work.blocks) {
      const long long p = vacancy(av, b.len);
      for (auto& j : b.riggings) {
        j -= work.offset;
        if (j < 0 || j > detail::mz(p))
          throw std::logic_error("normalized rigging escaped [0, p]");
      }
    }
  }

  // The product of full slides over all blocks adds exactly L, fixing every
  // window; the offset may therefore be reduced modulo L.
  work.offset = fdiv(work.offset, work.L).second;
  validate_angle(work);
  if (!(bethe::canonical_invariant(work) == bethe::canonical_invariant(a)))
    throw std::logic_error("normalization changed the angle class");
  return work;
}

AngleRep direct(const Path& p) {
  const auto [d, plus] = decompose(p);
  const auto rc_blocks = kkr::blocks(kkr::kkr_map(plus));
  AngleRep out;
  out.L = static_cast<long long>(p.size());
  out.offset = detail::mz(d);
  for (const auto& b : rc_blocks) {
    AngleBlock ab;
    ab.len = b.len;
    for (long long r : b.riggings) ab.riggings.push_back(detail::mz(r));
    out.blocks.push_back(std::move(ab));
  }
  validate_angle(out);
  return out;
}

Path inverse(const AngleRep& a) {
  const AngleRep n = normalize(a);
  kkr::RiggedConfiguration rc;
  rc.L = n.L;
  for (const auto& b : n.blocks)
    for (const auto& j : b.riggings)
      rc.rows.push_back(kkr::RcRow{b.len, to_ll(j)});
  kkr::canonicalize(rc);
  return rotate_right(kkr::kkr_inverse(rc), to_ll(n.offset));
}

Path fast_evolve(const Path& p, long long l, const mpz_class& t) {
  require_valid_path(p);
  if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
  if (weight(p) < 0)
    return letter_swap(fast_evolve(letter_swap(p), l, t));
  return inverse(linear_evolve(direct(p), l, t));
}

}  // namespace pbbs::scattering
