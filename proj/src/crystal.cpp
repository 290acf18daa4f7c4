#include "pbbs/crystal.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbbs::crystal {

namespace {

void require_element(const CrystalElement& x) {
  if (x.x1 < 0 || x.x2 < 0 || x.capacity() < 1)
    throw std::invalid_argument("crystal element needs x1, x2 >= 0 and x1 + x2 >= 1");
}

void require_word(const TensorWord& w) {
  if (w.empty()) throw std::invalid_argument("tensor word must be nonempty");
  for (const auto& x : w) require_element(x);
}

void require_index(int i) {
  if (i != 0 && i != 1)
    throw std::invalid_argument("crystal index must be 0 or 1");
}

// Single-element Kashiwara operators.  f_1 turns a letter 1 into a 2, e_1
// undoes it; the index-0 operators are the omega-conjugates.
std::optional<CrystalElement> apply_f(const CrystalElement& x, int i) {
  if (i == 1) {
    if (x.x1 == 0) return std::nullopt;
    return CrystalElement{x.x1 - 1, x.x2 + 1};
  }
  if (x.x2 == 0) return std::nullopt;
  return CrystalElement{x.x1 + 1, x.x2 - 1};
}

std::optional<CrystalElement> apply_e(const CrystalElement& x, int i) {
  if (i == 1) {
    if (x.x2 == 0) return std::nullopt;
    return CrystalElement{x.x1 + 1, x.x2 - 1};
  }
  if (x.x1 == 0) return std::nullopt;
  return CrystalElement{x.x1 - 1, x.x2 + 1};
}

// Reduced i-signature of a word.  Factor t contributes epsilon_i(t) minus
// signs followed by phi_i(t) plus signs; adjacent +- pairs cancel.  A single
// left-to-right pass with a stack of open plus signs performs every
// cancellation at once.  What survives is -^a +^b; we record the factor that
// owns each surviving sign, in reading order.
struct ReducedSignature {
  std::vector<size_t> minus;  // factor index per unpaired -, left to right
  std::vector<size_t> plus;   // factor index per unpaired +, left to right
};

ReducedSignature reduce_signature(const TensorWord& w, int i) {
  ReducedSignature sig;
  for (size_t t = 0; t < w.size(); ++t) {
    long long minuses = epsilon(w[t], i);
    for (long long r = 0; r < minuses; ++r) {
      if (!sig.plus.empty())
        sig.plus.pop_back();  // this minus pairs with the nearest open plus
      else
        sig.minus.push_back(t);
    }
    long long pluses = phi(w[t], i);
    for (long long r = 0; r < pluses; ++r) sig.plus.push_back(t);
  }
  return sig;
}

}  // namespace

CrystalElement highest_element(long long l) {
  if (l < 1) throw std::invalid_argument("capacity must be >= 1");
  return CrystalElement{l, 0};
}

CrystalElement parse_element(const std::string& word) {
  CrystalElement x{0, 0};
  for (char c : word) {
    if (c == '1') {
      if (x.x2 > 0)
        throw std::invalid_argument("tableau word must be weakly increasing: " + word);
      ++x.x1;
    } else if (c == '2') {
      ++x.x2;
    } else {
      throw std::invalid_argument("tableau word may contain only 1 and 2: " + word);
    }
  }
  require_element(x);
  return x;
}

std::string to_string(const CrystalElement& x) {
  return std::string(static_cast<size_t>(x.x1), '1') +
         std::string(static_cast<size_t>(x.x2), '2');
}

std::string to_string(const TensorWord& w) {
  std::string out;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) out += "(x)";
    out += to_string(w[t]);
  }
  return out;
}

RMatrixOutput combinatorial_r(const CrystalElement& x, const CrystalElement& y) {
  require_element(x);
  require_element(y);
  const long long q0 = std::min(x.x1, y.x2);
  const long long q1 = std::min(x.x2, y.x1);
  RMatrixOutput out;
  out.x_tilde = CrystalElement{x.x1 + q1 - q0, x.x2 + q0 - q1};
  out.y_tilde = CrystalElement{y.x1 + q0 - q1, y.x2 + q1 - q0};
  out.energy_h = -q0;
  return out;
}

long long epsilon(const CrystalElement& x, int i) {
  require_index(i);
  return i == 1 ? x.x2 : x.x1;
}

long long phi(const CrystalElement& x, int i) {
  require_index(i);
  return i == 1 ? x.x1 : x.x2;
}

long long epsilon(const TensorWord& word, int i) {
  require_word(word);
  require_index(i);
  return static_cast<long long>(reduce_signature(word, i).minus.size());
}

long long phi(const TensorWord& word, int i) {
  require_word(word);
  require_index(i);
  return static_cast<long long>(reduce_signature(word, i).plus.size());
}

std::optional<TensorWord> kashiwara(const TensorWord& word, KashiwaraOp op, int i) {
  require_word(word);
  require_index(i);
  const ReducedSignature sig = reduce_signature(word, i);
  TensorWord out = word;
  if (op == KashiwaraOp::F) {
    if (sig.plus.empty()) return std::nullopt;
    const size_t t = sig.plus.front();
    out[t] = *apply_f(out[t], i);
  } else {
    if (sig.minus.empty()) return std::nullopt;
    const size_t t = sig.minus.back();
    out[t] = *apply_e(out[t], i);
  }
  return out;
}

TensorWord weyl_s(const TensorWord& word, int i) {
  require_word(word);
  require_index(i);
  // Flipping one unpaired sign never creates a new +- pair, so the k-fold
  // power of f_i (resp. e_i) simply flips the first k unpaired pluses (resp.
  // the last k unpaired minuses) of the signature computed once up front.
  const ReducedSignature sig = reduce_signature(word, i);
  const long long a = static_cast<long long>(sig.minus.size());
  const long long b = static_cast<long long>(sig.plus.size());
  TensorWord out = word;
  if (b >= a) {
    for (long long r = 0; r < b - a; ++r) {
      const size_t t = sig.plus[static_cast<size_t>(r)];
      out[t] = *apply_f(out[t], i);
    }
  } else {
    for (long long r = 0; r < a - b; ++r) {
      const size_t t = sig.minus[sig.minus.size() - 1 - static_cast<size_t>(r)];
      out[t] = *apply_e(out[t], i);
    }
  }
  return out;
}

CrystalElement omega(const CrystalElement& x) { return CrystalElement{x.x2, x.x1}; }

TensorWord omega(const TensorWord& word) {
  require_word(word);
  TensorWord out = word;
  for (auto& x : out) x = omega(x);
  return out;
}

long long word_weight(const TensorWord& word) {
  require_word(word);
  long long w = 0;
  for (const auto& x : word) w += x.x1 - x.x2;
  return w;
}

}  // namespace pbbs::crystal
