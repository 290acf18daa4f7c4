#pragma once
//
// Rigged configurations and the Kerov-Kirillov-Reshetikhin bijection.
//
// A rigged configuration over a ring of size L is a Young diagram, recorded
// as row lengths with multiplicities m_j, together with an integer rigging
// per row.  The vacancy number p_j = L - 2 * sum_k min(j,k) m_k bounds the
// riggings of length-j rows: 0 <= rigging <= p_j.  A row whose rigging
// attains p_j is called singular.
//
// The bijection maps highest paths to rigged configurations by scanning the
// path once: every ball either extends the longest singular row by a box or
// starts a new row, and the touched row is re-rigged to stay singular in the
// grown environment.  The inverse map removes boxes from shortest singular
// rows while shrinking the environment.  A closed piecewise-linear formula
// recovers the path directly from the data and serves as an independent
// oracle for the removal algorithm.
//

#include <cstdint>
#include <vector>

#include "pbbs/path.hpp"

namespace pbbs::kkr {

/// One row of a rigged configuration.
struct RcRow {
  long long len = 0;  ///< number of boxes, >= 1
  long long rig = 0;  ///< rigging, in [0, vacancy(len)]
  friend bool operator==(const RcRow&, const RcRow&) = default;
};

/// A rigged configuration with its ambient system size.  Rows are kept in
/// canonical order: length descending, rigging descending within a length.
/// Every function in this library returns configurations in canonical order.
struct RiggedConfiguration {
  long long L = 0;
  std::vector<RcRow> rows;
  friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
};

/// Restores canonical row order in place.
void canonicalize(RiggedConfiguration& rc);

/// Row-length multiplicities m_1..m_jmax as a dense vector (index j-1).
/// Empty for the empty configuration.
std::vector<long long> multiplicities(const RiggedConfiguration& rc);

/// Total box count M = sum of j * m_j.
long long box_count(const std::vector<long long>& m);

/// The vacancy number p_j = L - 2 * sum_k min(j,k) m_k.  Defined for every
/// j >= 0 (p_0 = L); weakly decreasing in j and constant past the longest row.
long long vacancy(const std::vector<long long>& m, long long L, long long j);
long long vacancy(const RiggedConfiguration& rc, long long j);

/// Throws std::invalid_argument unless rc is a valid rigged configuration:
/// L >= 1, 2M <= L, and every rigging within [0, p_len].
void validate_rc(const RiggedConfiguration& rc);

/// Rows of equal length grouped together, longest block first, riggings
/// exposed weakly increasing.
struct RcBlock {
  long long len = 0;
  std::vector<long long> riggings;  ///< ascending
};
std::vector<RcBlock> blocks(const RiggedConfiguration& rc);

/// The box-adding bijection on highest paths.  Throws std::invalid_argument
/// when p is not highest.
RiggedConfiguration kkr_map(const Path& p);

/// The box-removing inverse bijection.  Validates rc first.
Path kkr_inverse(const RiggedConfiguration& rc);

/// The same two maps with the tie among equally eligible singular rows
/// resolved at random instead of by canonical position.  The results agree
/// with the deterministic maps for every seed; the unit tests assert this
/// choice independence.
RiggedConfiguration kkr_map_randomized(const Path& p, unsigned long seed);
Path kkr_inverse_randomized(const RiggedConfiguration& rc, unsigned long seed);

/// Independent route to the inverse bijection: the letter at each position
/// comes from second differences of a tropical tau function, a maximum over
/// the 2^(#rows) row subsets.  Exponential in the row count; configurations
/// with more than 20 rows are rejected.
Path kkr_inverse_pwl(const RiggedConfiguration& rc);

/// The configuration of a concatenation of highest paths, computed without
/// touching the paths: rows of the left factor pass through unchanged, rows
/// of the right factor have their riggings shifted by
/// d - 2 * sum_k min(j,k) lm_k, where d and lm are the left factor's length
/// and multiplicities.
RiggedConfiguration concat_rc(const RiggedConfiguration& qrc,
                              const RiggedConfiguration& rrc);

/// Checks the carrier rigging shift law: when the highest element u_l is fed
/// through p padded with n trailing empty boxes, the emerging word has the
/// same configuration as p with every length-j rigging raised by min(l, j).
/// The padding must absorb the carrier completely (it must exit as u_l
/// again); otherwise std::invalid_argument is thrown.
bool carrier_rigging_shift_check(const Path& p, long long l, long long n);

}  // namespace pbbs::kkr
