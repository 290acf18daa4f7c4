#include "pbbs/dynamics.hpp"

#include <stdexcept>

namespace pbbs::dynamics {

using crystal::CrystalElement;
using crystal::TensorWord;

namespace {

void require_capacity(long long l) {
  if (l < 1) throw std::invalid_argument("carrier capacity must be >= 1");
}

// One carrier step at a single cell.  Specializing the R-matrix to
// B_l (x) B_1 gives the familiar loading rules:
//   cell '2', carrier has room (x1 > 0):  pick the ball up, emit '1', H = -1;
//   cell '2', carrier full of balls:      pass through, H = 0;
//   cell '1', carrier holds a ball:       drop it, emit '2', H = 0;
//   cell '1', carrier empty of balls:     pass through, H = 0.
// Only the pick-up branch scores energy.
char carrier_step(CrystalElement& a, char cell, long long& h_sum) {
  if (cell == '2') {
    if (a.x1 > 0) {
      --a.x1;
      ++a.x2;
      --h_sum;
      return '1';
    }
    return '2';
  }
  if (a.x2 > 0) {
    ++a.x1;
    --a.x2;
    return '2';
  }
  return '1';
}

}  // namespace

TensorWord path_to_word(const Path& p) {
  require_valid_path(p);
  TensorWord w;
  w.reserve(p.size());
  for (char c : p) w.push_back(c == '1' ? CrystalElement{1, 0} : CrystalElement{0, 1});
  return w;
}

Path word_to_path(const TensorWord& w) {
  Path p;
  p.reserve(w.size());
  for (const auto& x : w) {
    if (x.capacity() != 1)
      throw std::invalid_argument("word has a factor of capacity != 1");
    p += (x.x1 == 1) ? '1' : '2';
  }
  require_valid_path(p);
  return p;
}

CrystalElement carrier(const Path& p, long long l) {
  require_valid_path(p);
  require_capacity(l);
  CrystalElement a = weight(p) >= 0 ? CrystalElement{l, 0} : CrystalElement{0, l};
  long long ignored = 0;
  for (char c : p) carrier_step(a, c, ignored);
  return a;
}

EvolutionResult evolve(const Path& p, long long l) {
  const CrystalElement v = carrier(p, l);
  EvolutionResult out;
  out.carrier = v;
  out.next.reserve(p.size());
  CrystalElement a = v;
  long long h_sum = 0;
  for (char c : p) out.next += carrier_step(a, c, h_sum);
  if (!(a == v))
    throw std::logic_error("carrier failed to return to its fixed point");
  out.energy = -h_sum;
  return out;
}

Path t1(const Path& p) {
  require_valid_path(p);
  return rotate_right(p, 1);
}

Path evolve_inverse(const Path& p, long long l) {
  return reversed(evolve(reversed(p), l).next);
}

Path t_infinity(const Path& p) {
  require_valid_path(p);
  TensorWord w = path_to_word(p);
  w = crystal::weyl_s(w, weight(p) >= 0 ? 0 : 1);
  return word_to_path(crystal::omega(w));
}

Path weyl_on_path(const Path& p, const std::string& word) {
  TensorWord w = path_to_word(p);
  for (char g : word) {
    switch (g) {
      case 'w': w = crystal::omega(w); break;
      case '0': w = crystal::weyl_s(w, 0); break;
      case '1': w = crystal::weyl_s(w, 1); break;
      default:
        throw std::invalid_argument("generator word may contain only w, 0, 1");
    }
  }
  return word_to_path(w);
}

}  // namespace pbbs::dynamics
