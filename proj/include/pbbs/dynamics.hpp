#pragma once
//
// Time evolutions of the periodic box-ball system.
//
// A capacity-l carrier is threaded around the ring: at each cell the
// combinatorial R-matrix exchanges carrier and cell content.  Because the
// ring is periodic the carrier must come back to its initial value; the
// fixed-point value v_l exists for every state and is found by one priming
// pass.  The update T_l is the output of a second pass seeded with v_l, and
// the conserved energy E_l is the number of loading events along it.
//
// T_1 is the cyclic right shift, T_l saturates to a letter-swap map T_inf
// once l reaches the longest soliton, and every pair T_l, T_k commutes.
//

#include <string>

#include "pbbs/crystal.hpp"
#include "pbbs/path.hpp"

namespace pbbs::dynamics {

/// Converts a path string to a word of capacity-1 crystal elements.
crystal::TensorWord path_to_word(const Path& p);

/// Inverse of path_to_word; throws unless every factor has capacity 1.
Path word_to_path(const crystal::TensorWord& w);

struct EvolutionResult {
  Path next;                         ///< T_l applied to the input
  long long energy = 0;              ///< E_l, the count of loading events
  crystal::CrystalElement carrier;   ///< the fixed-point carrier v_l
};

/// The carrier value v_l for the state p: the result of passing the highest
/// element u_l (when weight(p) >= 0) or its letter swap (when weight(p) < 0)
/// through the whole ring once.
crystal::CrystalElement carrier(const Path& p, long long l);

/// One application of T_l together with its energy and carrier.  The carrier
/// exiting the second pass is asserted equal to v_l; a mismatch throws
/// std::logic_error since it can only indicate an implementation bug.
EvolutionResult evolve(const Path& p, long long l);

/// The cyclic right shift, i.e. T_1.
Path t1(const Path& p);

/// Inverse evolution: conjugate T_l by letter reversal.
Path evolve_inverse(const Path& p, long long l);

/// The saturated evolution: omega . s_0 for weight >= 0, omega . s_1 for
/// weight <= 0 (both reduce to the plain letter swap at weight 0).  Equals
/// evolve(p, l).next for every l at least the longest soliton length.
Path t_infinity(const Path& p);

/// Applies a word in the generators omega, s_0, s_1 to the path, one
/// character per generator, leftmost character first: 'w' is the letter swap
/// and '0'/'1' are the Weyl reflections.  weyl_on_path(p, "01w") computes
/// omega(s_1(s_0(p))).
Path weyl_on_path(const Path& p, const std::string& word);

}  // namespace pbbs::dynamics
