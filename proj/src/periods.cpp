#include "pbbs/periods.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/kkr.hpp"
#include "pbbs/oracle.hpp"

namespace pbbs::periods {

namespace {

Path letter_swap(const Path& p) {
  Path q = p;
  for (char& c : q) c = (c == '1') ? '2' : '1';
  return q;
}

// Replacement column for the block system: entry per occupied length j is
// the exponent-weighted sum of min(j, l) over the evolution word.
std::vector<mpz_class> speed_column(const std::vector<long long>& lengths,
                                    const EvolutionWord& word) {
  std::vector<mpz_class> h(lengths.size(), 0);
  for (const auto& [l, beta] : word) {
    if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
    for (size_t a = 0; a < lengths.size(); ++a)
      h[a] += detail::mz(std::min(lengths[a], l)) * detail::mz(beta);
  }
  return h;
}

mpz_class period_from_dets(const bethe::StringSystem& sys,
                           const std::vector<mpz_class>& column,
                           const std::vector<long long>* divisors) {
  std::vector<mpq_class> ratios;
  for (size_t a = 0; a < sys.lengths.size(); ++a) {
    mpz_class det_a = bethe::det_with_column(sys.F, a, column);
    if (divisors != nullptr) det_a *= detail::mz((*divisors)[a]);
    if (det_a != 0) ratios.push_back(mpq_class(sys.det_f) / mpq_class(det_a));
  }
  return lcm_rationals(ratios);
}

// The degenerate regime: zero weight and capacity reaching the longest row.
// There the replacement determinants all vanish and the return time is set
// by the half-turn of the maximal strings instead.
bool is_degenerate(const bethe::StringSystem& sys, long long l) {
  return !sys.p.empty() && sys.p.back() == 0 && l >= sys.lengths.back();
}

mpz_class degenerate_period(const bethe::StringSystem& sys) {
  return detail::mz(2 * sys.m[static_cast<size_t>(sys.lengths.back() - 1)]);
}

// Cross-check of the degenerate value through the telescoping product form:
// when the final vacancy vanishes, the only finite term of the chain is
// p_{i_{t}} / (i_{t+1} - i_t) taken against the previous occupied length
// (or the circle length when there is only one block).
mpz_class degenerate_period_chain(const bethe::StringSystem& sys) {
  const size_t s = sys.lengths.size();
  const mpz_class prev_p =
      s >= 2 ? detail::mz(sys.p[s - 2]) : detail::mz(sys.L);
  const long long prev_len = s >= 2 ? sys.lengths[s - 2] : 0;
  const mpq_class term =
      mpq_class(prev_p) / mpq_class(detail::mz(sys.lengths.back() - prev_len));
  return lcm_rationals({term});
}

}  // namespace

mpz_class lcm_rationals(const std::vector<mpq_class>& rs) {
  mpz_class acc = 1;
  for (const auto& r : rs) {
    if (r == 0) throw std::invalid_argument("zero has no integer multiple");
    acc = lcm(acc, abs(r.get_num()));
  }
  return acc;
}

mpz_class generic_period(const std::vector<long long>& m, long long L,
                         long long l) {
  if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
  const bethe::StringSystem sys = bethe::build(m, L);
  const size_t s = sys.lengths.size();
  if (s == 0) return 1;
  if (is_degenerate(sys, l)) {
    const mpz_class n = degenerate_period(sys);
    if (degenerate_period_chain(sys) != n)
      throw std::logic_error("degenerate period forms disagree");
    return n;
  }

  const mpz_class n1 =
      period_from_dets(sys, speed_column(sys.lengths, {{l, 1}}), nullptr);

  // Second form: walk the chain i_0 = 0 < i_1 <= ... <= i_s of capped
  // lengths; each strict step contributes p_{i_{n+1}} p_{i_n} divided by the
  // step width times the final vacancy (with p_{i_0} = L).
  std::vector<long long> i_chain{0};
  for (long long len : sys.lengths) i_chain.push_back(std::min(len, l));
  const auto p_at = [&](long long i) {
    return detail::mz(i == 0 ? sys.L : kkr::vacancy(m, sys.L, i));
  };
  const mpz_class p_last = p_at(i_chain.back());
  std::vector<mpq_class> terms;
  for (size_t n = 0; n + 1 < i_chain.size(); ++n) {
    if (i_chain[n + 1] <= i_chain[n]) break;  // chain is flat from here on
    mpq_class t(p_at(i_chain[n + 1]) * p_at(i_chain[n]),
                detail::mz(i_chain[n + 1] - i_chain[n]) * p_last);
    t.canonicalize();
    terms.push_back(t);
  }
  const mpz_class n2 = lcm_rationals(terms);

  if (n1 != n2) throw std::logic_error("generic period forms disagree");
  return n1;
}

mpz_class generic_period_composite(const std::vector<long long>& m,
                                   long long L, const EvolutionWord& word) {
  const bethe::StringSystem sys = bethe::build(m, L);
  if (sys.lengths.empty()) return 1;
  return period_from_dets(sys, speed_column(sys.lengths, word), nullptr);
}

std::vector<long long> symmetry_orders(const scattering::AngleRep& a) {
  scattering::validate_angle(a);
  const scattering::ActionVariable av = scattering::action_of(a);
  std::vector<long long> out;
  for (const auto& blk : a.blocks) {
    const long long m = static_cast<long long>(blk.riggings.size());
    const long long p = scattering::vacancy(av, blk.len);
    const long long bound = std::gcd(m, p);  // gcd(m, 0) = m
    long long best = 1;
    for (long long g = bound; g >= 1; --g) {
      if (bound % g != 0) continue;
      const long long step = m / g;
      const long long jump = p / g;
      bool ok = true;
      for (long long i = 0; i < m && ok; ++i) {
        const long long i2 = i + step;
        const mpz_class diff =
            i2 < m ? mpz_class(blk.riggings[static_cast<size_t>(i2)] -
                               blk.riggings[static_cast<size_t>(i)])
                   : mpz_class(blk.riggings[static_cast<size_t>(i2 - m)] +
                               detail::mz(p) -
                               blk.riggings[static_cast<size_t>(i)]);
        ok = diff == detail::mz(jump);
      }
      if (ok) {
        best = g;
        break;
      }
    }
    out.push_back(best);
  }
  return out;
}

mpz_class fundamental_period(const Path& p, long long l) {
  require_valid_path(p);
  if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
  const Path q = weight(p) >= 0 ? p : letter_swap(p);
  const scattering::AngleRep a = scattering::direct(q);
  if (a.blocks.empty()) return 1;
  const scattering::ActionVariable av = scattering::action_of(a);
  const bethe::StringSystem sys = bethe::build(av.m, av.L);
  const std::vector<long long> g = symmetry_orders(a);

  if (is_degenerate(sys, l)) {
    // Blocks are stored longest first, so g.front() belongs to the maximal
    // strings; their half-turn shortens by the block's symmetry fold.
    const mpz_class n = degenerate_period(sys) / detail::mz(g.front());
    return n;
  }

  // g is parallel to the descending blocks; the system is ascending.
  std::vector<long long> divisors(g.rbegin(), g.rend());
  return period_from_dets(sys, speed_column(sys.lengths, {{l, 1}}), &divisors);
}

mpz_class fundamental_period_composite(const Path& p,
                                       const EvolutionWord& word) {
  require_valid_path(p);
  const Path q = weight(p) >= 0 ? p : letter_swap(p);
  const scattering::AngleRep a = scattering::direct(q);
  if (a.blocks.empty()) return 1;
  const scattering::ActionVariable av = scattering::action_of(a);
  const bethe::StringSystem sys = bethe::build(av.m, av.L);
  const std::vector<long long> g_desc = symmetry_orders(a);
  std::vector<long long> divisors(g_desc.rbegin(), g_desc.rend());
  return period_from_dets(sys, speed_column(sys.lengths, word), &divisors);
}

mpz_class cyclic_orbit_count(long long p, long long m) {
  if (p < 0 || m < 1)
    throw std::invalid_argument("need p >= 0 compositions into m >= 1 parts");
  // Burnside over Z/m: rotations with gcd d fix the compositions constant on
  // their m/d cycles, which exist only when m/d divides p.
  mpz_class total = 0;
  for (long long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const long long cycle = m / d;
    if (p % cycle != 0) continue;
    mpz_class phi = 0;
    for (long long k = 1; k <= cycle; ++k)
      if (std::gcd(k, cycle) == 1) ++phi;
    mpz_class fixed;
    mpz_bin_uiui(fixed.get_mpz_t(),
                 static_cast<unsigned long>(p / cycle + d - 1),
                 static_cast<unsigned long>(d - 1));
    total += phi * fixed;
  }
  mpz_class count;
  const mpz_class mm = detail::mz(m);
  mpz_divexact(count.get_mpz_t(), total.get_mpz_t(), mm.get_mpz_t());
  return count;
}

mpz_class cyclic_orbit_count_brute(long long p, long long m) {
  if (p < 0 || m < 1)
    throw std::invalid_argument("need p >= 0 compositions into m >= 1 parts");
  if (p + m > 24)
    throw std::invalid_argument("brute composition sweep guarded to p+m <= 24");
  std::vector<long long> parts(static_cast<size_t>(m), 0);
  parts[0] = p;
  long long orbits = 0;
  // Enumerate weak compositions in lexicographic order and count one per
  // orbit by keeping only rotation-minimal representatives.
  while (true) {
    std::vector<long long> best = parts;
    for (long long r = 1; r < m; ++r) {
      std::vector<long long> rot(parts.begin() + r, parts.end());
      rot.insert(rot.end(), parts.begin(), parts.begin() + r);
      if (rot < best) best = rot;
    }
    if (best == parts) ++orbits;

    // Next composition: move one unit from the first positive entry rightward.
    size_t i = 0;
    while (i + 1 < parts.size() && parts[i] == 0) ++i;
    if (i + 1 >= parts.size()) break;
    const long long head = parts[i];
    parts[i] = 0;
    parts[0] = head - 1;
    parts[i + 1] += 1;
  }
  return detail::mz(orbits);
}

mpz_class orbit_count_all_evolutions(const std::vector<long long>& m,
                                     long long L) {
  const bethe::StringSystem sys = bethe::build(m, L);
  mpz_class count = 1;
  for (size_t a = 0; a < sys.lengths.size(); ++a)
    count *= cyclic_orbit_count(
        sys.p[a], sys.m[static_cast<size_t>(sys.lengths[a] - 1)]);
  return count;
}

mpq_class orbit_count_single(const std::vector<long long>& m, long long L,
                             long long l) {
  const bethe::StringSystem sys = bethe::build(m, L);
  if (sys.lengths.empty()) return 1;
  bool generic = true;
  for (size_t a = 0; a < sys.lengths.size(); ++a) {
    const long long mj = sys.m[static_cast<size_t>(sys.lengths[a] - 1)];
    const long long gj = sys.p[a] == 0 ? mj : std::gcd(sys.p[a], mj);
    if (gj != 1) generic = false;
  }
  if (generic) {
    mpq_class count =
        mpq_class(bethe::omega_count(m, L)) / mpq_class(generic_period(m, L, l));
    if (count.get_den() != 1)
      throw std::logic_error("generic orbit count is not an integer");
    return count;
  }
  return mpq_class(detail::mz(oracle::brute_orbits(L, m, {l}).orbit_count));
}

}  // namespace pbbs::periods
