#include "pbbs/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbbs {

bool is_valid_path(const Path& p) {
  if (p.empty()) return false;
  return std::all_of(p.begin(), p.end(),
                     [](char c) { return c == '1' || c == '2'; });
}

void require_valid_path(const Path& p) {
  if (!is_valid_path(p))
    throw std::invalid_argument(
        "path must be a nonempty string over the alphabet {1,2}, got \"" + p +
        "\"");
}

long long weight(const Path& p) {
  require_valid_path(p);
  long long w = 0;
  for (char c : p) w += (c == '1') ? 1 : -1;
  return w;
}

bool is_highest(const Path& p) {
  require_valid_path(p);
  long long excess = 0;
  for (char c : p) {
    excess += (c == '1') ? 1 : -1;
    if (excess < 0) return false;
  }
  return true;
}

Path rotate_left(const Path& p, long long d) {
  require_valid_path(p);
  const long long L = static_cast<long long>(p.size());
  long long r = ((d % L) + L) % L;
  return p.substr(static_cast<size_t>(r)) + p.substr(0, static_cast<size_t>(r));
}

Path rotate_right(const Path& p, long long d) { return rotate_left(p, -d); }

Path reversed(const Path& p) {
  require_valid_path(p);
  return Path(p.rbegin(), p.rend());
}

}  // namespace pbbs
