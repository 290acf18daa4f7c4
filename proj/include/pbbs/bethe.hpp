#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "pbbs/scattering.hpp"

// Exact linear algebra behind the string center equations.  A state class is
// determined by the fractional parts of the string centers, which solve an
// integer linear system built from the row content; everything here is done
// in exact rational arithmetic so class comparisons are equalities, not
// tolerances.
namespace pbbs::bethe {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Row content of a circle of length L: occupied row lengths ascending, their
// vacancies, the small block matrix F, the full string-center matrix A, and
// both determinants.  F is s x s over occupied lengths; A is M' x M' with one
// row per (block, string) pair, blocks ascending, and couples strings inside
// a block through 2*min(j,j) - 1 while the diagonal carries p_j + m_j.
struct StringSystem {
  std::vector<long long> m;        // multiplicities m_1..m_K
  long long L = 0;
  std::vector<long long> lengths;  // occupied lengths, ascending
  std::vector<long long> p;        // vacancies of the occupied lengths
  IntMatrix F;
  IntMatrix A;
  mpz_class det_f;
  mpz_class det_a;
};

StringSystem build(const std::vector<long long>& m, long long L);

// Fraction-free determinant (Bareiss).  Consumes its argument.
mpz_class det_bareiss(IntMatrix mat);

// Determinant of F with one column replaced, used for the period formulas.
mpz_class det_with_column(IntMatrix f, size_t col,
                          const std::vector<mpz_class>& column);

// Number of states on the circle with the given row content, via the block
// determinant form; an equivalent product form is evaluated as a cross-check.
mpz_class omega_count(const std::vector<long long>& m, long long L);

// String centers of an angle representative: the exact rational solution u of
// A u = c + (rigging + offset) + (position within block), one value per row.
struct BetheRoots {
  std::vector<long long> lengths;             // ascending, matches blocks
  std::vector<std::vector<mpq_class>> roots;  // per block, window order
};

BetheRoots psi(const scattering::AngleRep& a);

// Per block, the sorted multiset of fractional parts of the string centers.
// Slides permute a block's centers and shift one by a whole unit, and adding
// L to the offset shifts every center by one, so this multiset is constant
// on a state's class while still separating distinct classes.
using CanonicalInvariant =
    std::vector<std::pair<long long, std::vector<mpq_class>>>;

CanonicalInvariant canonical_invariant(const scattering::AngleRep& a);

// Whether N * sum_j min(j, l) * (u_j + 1/2) is an integer, i.e. whether the
// phase picked up under the capacity-l evolution is an N-th root of unity.
bool eigenvalue_is_root_of_unity(const scattering::AngleRep& a, long long l,
                                 const mpz_class& N);

}  // namespace pbbs::bethe
