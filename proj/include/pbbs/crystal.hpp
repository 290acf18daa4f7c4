#pragma once
//
// Level-zero crystals of affine sl2 at the combinatorial (q = 0) point.
//
// The crystal B_l consists of the pairs x = (x1, x2) with x1 + x2 = l; the
// element is pictured as the weakly increasing tableau word 1^{x1} 2^{x2}.
// Two structures on these objects drive everything else in this library:
//
//   * the combinatorial R-matrix, the unique bijection B_l (x) B_k ->
//     B_k (x) B_l commuting with the Kashiwara operators.  It carries an
//     integer-valued energy H <= 0 which localizes the conserved quantities
//     of the box-ball dynamics;
//
//   * the signature rule, which extends the raising/lowering operators
//     e_i, f_i (i = 0, 1) from single elements to tensor words and yields
//     the extended Weyl group generators s_0, s_1 and the letter swap omega.
//
// Everything here is a total, pure function on immutable values.
//

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pbbs::crystal {

/// An element of B_l: x1 copies of letter 1 followed by x2 copies of
/// letter 2, with l = x1 + x2 >= 1.
struct CrystalElement {
  long long x1 = 0;
  long long x2 = 0;

  long long capacity() const { return x1 + x2; }
  friend bool operator==(const CrystalElement&, const CrystalElement&) = default;
};

/// The highest element u_l = (l, 0) of B_l.
CrystalElement highest_element(long long l);

/// Parses a tableau word such as "1122" into an element of B_4.
CrystalElement parse_element(const std::string& word);

/// Renders the element as its tableau word 1^{x1} 2^{x2}.
std::string to_string(const CrystalElement& x);

/// A tensor product of crystal elements, leftmost factor first.  Factors may
/// have arbitrary capacities.
using TensorWord = std::vector<CrystalElement>;

/// Renders a tensor word with "(x)" between factors, e.g. "11122(x)12".
std::string to_string(const TensorWord& w);

/// Image of x (x) y under the combinatorial R-matrix, written in the order
/// it is read: R(x (x) y) = y_tilde (x) x_tilde with y_tilde in B_k and
/// x_tilde in B_l.  energy_h is the value of the energy function H, always
/// in [-min(l, k), 0].
struct RMatrixOutput {
  CrystalElement y_tilde;
  CrystalElement x_tilde;
  long long energy_h = 0;
  friend bool operator==(const RMatrixOutput&, const RMatrixOutput&) = default;
};

/// The combinatorial R-matrix on B_l (x) B_k together with its energy.
///
/// With Q0 = min(x1, y2) and Q1 = min(x2, y1) the image components are
///   x~ = (x1 + Q1 - Q0, x2 + Q0 - Q1),
///   y~ = (y1 + Q0 - Q1, y2 + Q1 - Q0),
/// and H = -Q0.  On B_1 (x) B_1 this is the identity map.
RMatrixOutput combinatorial_r(const CrystalElement& x, const CrystalElement& y);

/// Number of times the raising operator e_i applies to the word (the count
/// of unpaired minus signs of the reduced i-signature).
long long epsilon(const TensorWord& word, int i);

/// Number of times the lowering operator f_i applies (unpaired plus signs).
long long phi(const TensorWord& word, int i);

/// Same counts for a single element: epsilon_1 = x2, phi_1 = x1,
/// epsilon_0 = x1, phi_0 = x2.
long long epsilon(const CrystalElement& x, int i);
long long phi(const CrystalElement& x, int i);

enum class KashiwaraOp { E, F };

/// Applies e_i or f_i to a tensor word by the signature rule: f_i lowers the
/// factor owning the leftmost unpaired plus, e_i raises the factor owning the
/// rightmost unpaired minus.  Returns std::nullopt (the crystal zero) when no
/// such sign exists.
std::optional<TensorWord> kashiwara(const TensorWord& word, KashiwaraOp op,
                                    int i);

/// The extended Weyl reflection s_i: the reduced i-signature -^a +^b becomes
/// -^b +^a.  An involution that negates the weight; fixes words of weight 0.
TensorWord weyl_s(const TensorWord& word, int i);

/// The letter swap omega, (x1, x2) -> (x2, x1) in every factor.  An
/// involution; conjugating by it exchanges the roles of the indices 0 and 1.
TensorWord omega(const TensorWord& word);
CrystalElement omega(const CrystalElement& x);

/// Weight of a word in units of the fundamental weight: sum of x1 - x2 over
/// the factors; equals phi_1 - epsilon_1 and epsilon_0 - phi_0.
long long word_weight(const TensorWord& word);

}  // namespace pbbs::crystal
