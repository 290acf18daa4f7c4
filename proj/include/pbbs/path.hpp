#pragma once
//
// Paths of the periodic box-ball system.
//
// A state of the system on a ring of L cells is a word over the alphabet
// {'1','2'}: letter 1 is an empty box, letter 2 is a ball.  We keep the
// representation as a plain std::string so states print, hash and compare
// with zero ceremony; every routine that consumes a Path validates it.
//

#include <string>

namespace pbbs {

/// A periodic box-ball state: a string over {'1','2'} of length L >= 1.
using Path = std::string;

/// True iff p is nonempty and contains only the letters '1' and '2'.
bool is_valid_path(const Path& p);

/// Throws std::invalid_argument when is_valid_path fails.
void require_valid_path(const Path& p);

/// Weight of the state: (#1 - #2), the net letter-1 surplus.
long long weight(const Path& p);

/// A path is highest when every prefix contains at least as many 1s as 2s.
/// Highest paths are exactly the states killed by the raising operator e_1.
bool is_highest(const Path& p);

/// Cyclic left rotation by d positions (d may be any integer; reduced mod L).
Path rotate_left(const Path& p, long long d);

/// Cyclic right rotation by d positions.
Path rotate_right(const Path& p, long long d);

/// Letter-reversal x_1...x_L -> x_L...x_1 (the involution used to invert
/// time evolutions).
Path reversed(const Path& p);

}  // namespace pbbs
