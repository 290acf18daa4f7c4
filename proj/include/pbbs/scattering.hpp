#pragma once
//
// The inverse-scattering transform of the periodic box-ball system.
//
// Every state of nonnegative weight is a cyclic rotation of a highest state,
// and the bijection of pbbs/kkr.hpp turns that highest state into a Young
// diagram (the action variable: the soliton content, conserved by every
// evolution) plus riggings.  Riggings together with the rotation offset make
// an angle variable once they are read modulo two moves:
//
//   * quasi-periodicity: the rigging window of a block of m_j equal rows
//     repeats with period p_j (the vacancy number), so a window may be
//     re-based by whole periods;
//
//   * slides: the map sigma_k shifts block k's window by one step and adds
//     2 * min(j, k) to every block j.  Slides commute, and the product of
//     sigma_{j}^{m_j} over all blocks adds exactly L to everything.
//
// On these coordinates every evolution is linear: applying the capacity-l
// update t times adds t * min(j, l) to each length-j rigging.  This makes a
// t-step evolution computable in time independent of t: transform, add,
// normalize back to a representative with small riggings, and invert.
//

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "pbbs/kkr.hpp"
#include "pbbs/path.hpp"

namespace pbbs::scattering {

/// The action variable: row-length multiplicities m (index j-1 holds m_j)
/// over a ring of size L.  Valid when sum of j * m_j <= L / 2.
struct ActionVariable {
  std::vector<long long> m;
  long long L = 0;

  friend bool operator==(const ActionVariable&, const ActionVariable&) = default;
};

/// Throws std::invalid_argument unless a is a valid action variable.
void validate_action(const ActionVariable& a);

/// Vacancy number p_j for this content.
long long vacancy(const ActionVariable& a, long long j);

/// Distinct occurring row lengths, ascending.
std::vector<long long> occupied_lengths(const ActionVariable& a);

/// One block of an angle representative: the window of riggings of the
/// length-j rows, weakly increasing.  The window extends quasi-periodically
/// in both directions with period p_j.
struct AngleBlock {
  long long len = 0;
  std::vector<mpz_class> riggings;  ///< ascending window J_1 <= ... <= J_{m_j}
  friend bool operator==(const AngleBlock&, const AngleBlock&) = default;
};

/// A representative of an angle-variable class: offset d plus one rigging
/// window per block, blocks ordered by length descending.  The represented
/// element has absolute entries J + d; two representatives denote the same
/// angle variable exactly when related by slides and window re-basing, which
/// is what pbbs::bethe::canonical_invariant detects.
struct AngleRep {
  long long L = 0;
  mpz_class offset;
  std::vector<AngleBlock> blocks;
  friend bool operator==(const AngleRep&, const AngleRep&) = default;
};

/// Builds a representative from plain integers: blocks as (length, window)
/// pairs, longest first.  Validates the result.
AngleRep make_rep(
    long long L, long long offset,
    const std::vector<std::pair<long long, std::vector<long long>>>& blocks);

/// Action variable of an angle representative.
ActionVariable action_of(const AngleRep& a);

/// Throws std::invalid_argument unless the representative is structurally
/// sound: valid content, window sizes matching multiplicities, windows
/// weakly increasing and spanning at most one quasi-period.
void validate_angle(const AngleRep& a);

/// Splits a state of nonnegative weight as p = t1^d(p_plus) with p_plus
/// highest and d minimal in [0, L).  Throws std::invalid_argument when the
/// weight is negative (apply the letter swap first).
std::pair<long long, Path> decompose(const Path& p);

/// The soliton content of a state of either weight sign (negative-weight
/// states are letter-swapped first).  Conserved by every evolution and by
/// the extended Weyl action.
ActionVariable action(const Path& p);

/// The slide sigma_k applied n times (n may be negative): block k's window
/// advances n steps along its quasi-periodic extension and gains 2*k*n,
/// every other block j gains 2 * min(j, k) * n, the offset is untouched.
/// k must be an occurring row length.
AngleRep slide(const AngleRep& a, long long k, const mpz_class& n);

/// The linearized evolution: t steps of the capacity-l update add
/// t * min(j, l) to every length-j rigging.  Offset unchanged.
AngleRep linear_evolve(const AngleRep& a, long long l, const mpz_class& t);

/// Finds the equivalent representative whose windows sit inside [0, p_j]
/// with at least one rigging equal to 0, and whose offset lies in [0, L).
/// Blocks are slid into a common alignment from the longest down; class
/// preservation is asserted through the string-center invariant.
AngleRep normalize(const AngleRep& a);

/// The full forward transform of a state of nonnegative weight: decompose,
/// then map the highest part to its rigged configuration.
AngleRep direct(const Path& p);

/// The inverse transform: normalize, rebuild the highest path from the
/// configuration, then rotate by the offset.
Path inverse(const AngleRep& a);

/// T_l^t computed through the transform; cost independent of |t|.  Negative
/// t runs the inverse flow.  Negative-weight states are handled by
/// conjugating with the letter swap.
Path fast_evolve(const Path& p, long long l, const mpz_class& t);

}  // namespace pbbs::scattering
