#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "pbbs/bethe.hpp"
#include "pbbs/path.hpp"
#include "pbbs/scattering.hpp"

// Closed-form return times.  The linearized flow moves angle coordinates at
// integer speeds, so the time for every coordinate to return to its class
// representative is an LCM of rationals built from the block matrix F; the
// per-state refinement divides out each block's internal symmetry order.
namespace pbbs::periods {

// A composite evolution: pairs (capacity, exponent), exponents may be
// negative.  The empty word is the identity map.
using EvolutionWord = std::vector<std::pair<long long, long long>>;

// Smallest positive integer N with N*r an integer for every r in rs.
// For r = a/b in lowest terms that constraint is N in |a|*Z, so the result
// is the LCM of the numerators.  Zero inputs are rejected.
mpz_class lcm_rationals(const std::vector<mpq_class>& rs);

// Generic return time of the capacity-l evolution on the classes with row
// content m: every state of that content returns after this many steps, and
// states with trivial symmetry return no sooner.  Two independent forms are
// evaluated and asserted equal; zero-weight content with l at least the
// longest row degenerates to 2 * m_{longest}.
mpz_class generic_period(const std::vector<long long>& m, long long L,
                         long long l);

// Same quantity for a composite evolution word (column vector of the block
// system replaced by the exponent-weighted sum of the single-capacity ones).
mpz_class generic_period_composite(const std::vector<long long>& m,
                                   long long L, const EvolutionWord& word);

// Largest g per block with J_{i + m_j/g} - J_i = p_j/g along the window's
// quasi-periodic extension; g divides gcd(m_j, p_j) (gcd(0, m) = m).  Result
// is parallel to a.blocks (lengths descending).  Slide- and offset-invariant.
std::vector<long long> symmetry_orders(const scattering::AngleRep& a);

// Exact minimal N >= 1 with T_l^N(p) = p, via the block determinants divided
// by the state's symmetry orders.
mpz_class fundamental_period(const Path& p, long long l);

mpz_class fundamental_period_composite(const Path& p,
                                       const EvolutionWord& word);

// Orbits of weak compositions of p into m cyclically ordered parts, counted
// by Burnside's lemma over the rotation group.
mpz_class cyclic_orbit_count(long long p, long long m);

// Same count by direct enumeration of compositions; cross-check oracle,
// guarded to p + m <= 24.
mpz_class cyclic_orbit_count_brute(long long p, long long m);

// Number of orbits on the weight >= 0 states of content m under the group
// generated by all evolutions: a product of cyclic composition counts.
mpz_class orbit_count_all_evolutions(const std::vector<long long>& m,
                                     long long L);

// Number of orbits under the single capacity-l evolution.  When every block
// satisfies gcd(p_j, m_j) = 1 this is the state count divided by the generic
// period; otherwise it is computed by brute enumeration (size-guarded).
mpq_class orbit_count_single(const std::vector<long long>& m, long long L,
                             long long l);

}  // namespace pbbs::periods
