#include "pbbs/kkr.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace pbbs::kkr {

namespace {

// Canonical order: length descending, rigging descending.
bool row_before(const RcRow& a, const RcRow& b) {
  if (a.len != b.len) return a.len > b.len;
  return a.rig > b.rig;
}

long long min_sum(const std::vector<long long>& m, long long j) {
  long long s = 0;
  for (size_t k = 0; k < m.size(); ++k)
    s += std::min<long long>(j, static_cast<long long>(k) + 1) * m[k];
  return s;
}

std::vector<long long> row_multiplicities(const std::vector<RcRow>& rows) {
  long long jmax = 0;
  for (const auto& r : rows) jmax = std::max(jmax, r.len);
  std::vector<long long> m(static_cast<size_t>(jmax), 0);
  for (const auto& r : rows) ++m[static_cast<size_t>(r.len - 1)];
  return m;
}

// Vacancy of length j in an environment of env cells holding the given rows.
long long row_vacancy(const std::vector<RcRow>& rows, long long env, long long j) {
  long long s = 0;
  for (const auto& r : rows) s += std::min(j, r.len);
  return env - 2 * s;
}

using Picker = size_t (*)(size_t, std::mt19937_64*);

size_t pick_first(size_t, std::mt19937_64*) { return 0; }

size_t pick_random(size_t n, std::mt19937_64* rng) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(*rng);
}

// Forward bijection.  Scans the path once; each ball grows the longest
// singular row (or opens a new one) and the grown row is re-rigged to the
// vacancy of its new length in the enlarged environment, keeping it singular.
RiggedConfiguration kkr_map_impl(const Path& p, Picker pick, std::mt19937_64* rng) {
  if (!is_highest(p))
    throw std::invalid_argument("the path-to-configuration map needs a highest path");
  std::vector<RcRow> rows;
  const long long L = static_cast<long long>(p.size());
  for (long long n = 1; n <= L; ++n) {
    if (p[static_cast<size_t>(n - 1)] == '1') continue;
    // Candidates: singular rows of maximal length in the environment of the
    // first n-1 letters.  Rows tied here are identical (their rigging equals
    // the shared vacancy), so the pick cannot influence the result.
    long long best_len = 0;
    std::vector<size_t> candidates;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].rig != row_vacancy(rows, n - 1, rows[r].len)) continue;
      if (rows[r].len > best_len) {
        best_len = rows[r].len;
        candidates.clear();
      }
      if (rows[r].len == best_len) candidates.push_back(r);
    }
    if (candidates.empty()) {
      rows.push_back(RcRow{1, 0});
      rows.back().rig = row_vacancy(rows, n, 1);
    } else {
      RcRow& row = rows[candidates[pick(candidates.size(), rng)]];
      row.len += 1;
      row.rig = row_vacancy(rows, n, row.len);
    }
  }
  RiggedConfiguration rc{L, std::move(rows)};
  canonicalize(rc);
  return rc;
}

// Inverse bijection.  Walks the ring from the right edge inward; whenever a
// singular row exists, the rightmost unread cell holds a ball and a box is
// removed from the shortest singular row, which is then re-rigged to stay
// singular in the shrunken environment.
Path kkr_inverse_impl(const RiggedConfiguration& rc, Picker pick, std::mt19937_64* rng) {
  validate_rc(rc);
  std::vector<RcRow> rows = rc.rows;
  std::string out(static_cast<size_t>(rc.L), '1');
  for (long long n = rc.L; n >= 1; --n) {
    long long best_len = 0;
    std::vector<size_t> candidates;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].rig != row_vacancy(rows, n, rows[r].len)) continue;
      if (best_len == 0 || rows[r].len < best_len) {
        best_len = rows[r].len;
        candidates.clear();
      }
      if (rows[r].len == best_len) candidates.push_back(r);
    }
    if (candidates.empty()) continue;  // out[n-1] stays '1'
    out[static_cast<size_t>(n - 1)] = '2';
    const size_t r = candidates[pick(candidates.size(), rng)];
    if (rows[r].len == 1) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    } else {
      rows[r].len -= 1;
      rows[r].rig = row_vacancy(rows, n - 1, rows[r].len);
    }
  }
  if (!rows.empty())
    throw std::logic_error("box removal did not exhaust the configuration");
  if (!is_highest(out))
    throw std::logic_error("box removal produced a non-highest path");
  return out;
}

}  // namespace

void canonicalize(RiggedConfiguration& rc) {
  std::sort(rc.rows.begin(), rc.rows.end(), row_before);
}

std::vector<long long> multiplicities(const RiggedConfiguration& rc) {
  return row_multiplicities(rc.rows);
}

long long box_count(const std::vector<long long>& m) {
  long long M = 0;
  for (size_t k = 0; k < m.size(); ++k)
    M += (static_cast<long long>(k) + 1) * m[k];
  return M;
}

long long vacancy(const std::vector<long long>& m, long long L, long long j) {
  if (j < 0) throw std::invalid_argument("vacancy index must be >= 0");
  return L - 2 * min_sum(m, j);
}

long long vacancy(const RiggedConfiguration& rc, long long j) {
  return vacancy(multiplicities(rc), rc.L, j);
}

void validate_rc(const RiggedConfiguration& rc) {
  if (rc.L < 1) throw std::invalid_argument("configuration needs system size L >= 1");
  for (const auto& r : rc.rows)
    if (r.len < 1) throw std::invalid_argument("row length must be >= 1");
  const auto m = multiplicities(rc);
  if (2 * box_count(m) > rc.L)
    throw std::invalid_argument("configuration holds more than L/2 boxes");
  for (const auto& r : rc.rows) {
    const long long p = vacancy(m, rc.L, r.len);
    if (r.rig < 0 || r.rig > p)
      throw std::invalid_argument(
          "rigging " + std::to_string(r.rig) + " outside [0, " +
          std::to_string(p) + "] for row length " + std::to_string(r.len));
  }
}

std::vector<RcBlock> blocks(const RiggedConfiguration& rc) {
  RiggedConfiguration c = rc;
  canonicalize(c);
  std::vector<RcBlock> out;
  for (const auto& r : c.rows) {
    if (out.empty() || out.back().len != r.len)
      out.push_back(RcBlock{r.len, {}});
    out.back().riggings.push_back(r.rig);
  }
  for (auto& b : out) std::reverse(b.riggings.begin(), b.riggings.end());
  return out;
}

RiggedConfiguration kkr_map(const Path& p) {
  return kkr_map_impl(p, pick_first, nullptr);
}

Path kkr_inverse(const RiggedConfiguration& rc) {
  return kkr_inverse_impl(rc, pick_first, nullptr);
}

RiggedConfiguration kkr_map_randomized(const Path& p, unsigned long seed) {
  std::mt19937_64 rng(seed);
  return kkr_map_impl(p, pick_random, &rng);
}

Path kkr_inverse_randomized(const RiggedConfiguration& rc, unsigned long seed) {
  std::mt19937_64 rng(seed);
  return kkr_inverse_impl(rc, pick_random, &rng);
}

Path kkr_inverse_pwl(const RiggedConfiguration& rc) {
  validate_rc(rc);
  const size_t nrows = rc.rows.size();
  if (nrows > 20)
    throw std::invalid_argument("piecewise-linear route limited to 20 rows");
  const size_t nsub = size_t{1} << nrows;

  // tau_i(n) = max over row subsets S of (n * |S| + c_i(S)) where c_i(S)
  // collects the per-row terms (i - 2) * len - rig and the pairwise
  // penalties -2 * min(len, len').  Subset constants are built by peeling
  // the lowest set bit.
  std::vector<long long> c0(nsub, 0), c1(nsub, 0), cnt(nsub, 0);
  for (size_t s = 1; s < nsub; ++s) {
    const size_t low = s & (~s + 1);
    const size_t rest = s ^ low;
    size_t k = 0;
    while ((size_t{1} << k) != low) ++k;
    long long pair_penalty = 0;
    for (size_t j = 0; j < nrows; ++j)
      if (rest & (size_t{1} << j))
        pair_penalty += 2 * std::min(rc.rows[j].len, rc.rows[k].len);
    cnt[s] = cnt[rest] + 1;
    c0[s] = c0[rest] - 2 * rc.rows[k].len - rc.rows[k].rig - pair_penalty;
    c1[s] = c1[rest] - rc.rows[k].len - rc.rows[k].rig - pair_penalty;
  }
  const auto tau = [&](const std::vector<long long>& c, long long n) {
    long long best = 0;  // the empty subset
    for (size_t s = 1; s < nsub; ++s) best = std::max(best, n * cnt[s] + c[s]);
    return best;
  };

  Path out(static_cast<size_t>(rc.L), '1');
  long long t0_prev = tau(c0, 0), t1_prev = tau(c1, 0);
  for (long long n = 1; n <= rc.L; ++n) {
    const long long t0 = tau(c0, n), t1 = tau(c1, n);
    const long long x = (t1 - t1_prev) - (t0 - t0_prev);
    if (x != 0 && x != 1)
      throw std::logic_error("tau second difference outside {0,1}");
    if (x == 1) out[static_cast<size_t>(n - 1)] = '2';
    t0_prev = t0;
    t1_prev = t1;
  }
  return out;
}

RiggedConfiguration concat_rc(const RiggedConfiguration& qrc,
                              const RiggedConfiguration& rrc) {
  validate_rc(qrc);
  validate_rc(rrc);
  const auto lm = multiplicities(qrc);
  RiggedConfiguration out{qrc.L + rrc.L, qrc.rows};
  for (const auto& r : rrc.rows) {
    const long long shift = qrc.L - 2 * min_sum(lm, r.len);
    out.rows.push_back(RcRow{r.len, r.rig + shift});
  }
  canonicalize(out);
  validate_rc(out);
  return out;
}

bool carrier_rigging_shift_check(const Path& p, long long l, long long n) {
  if (!is_highest(p))
    throw std::invalid_argument("rigging shift law applies to highest paths");
  if (l < 1) throw std::invalid_argument("carrier capacity must be >= 1");
  if (n < 0) throw std::invalid_argument("padding must be >= 0");

  // Feed u_l through p followed by n empty boxes, collecting the output word.
  long long free_slots = l, held = 0;  // carrier contents (x1, x2)
  Path xi;
  xi.reserve(p.size() + static_cast<size_t>(n));
  const Path padded = p + Path(static_cast<size_t>(n), '1');
  for (char c : padded) {
    if (c == '2') {
      if (free_slots > 0) {
        --free_slots;
        ++held;
        xi += '1';
      } else {
        xi += '2';
      }
    } else {
      if (held > 0) {
        ++free_slots;
        --held;
        xi += '2';
      } else {
        xi += '1';
      }
    }
  }
  if (held != 0)
    throw std::invalid_argument("padding too short: carrier exits loaded");

  const auto base = blocks(kkr_map(p));
  const auto shifted = blocks(kkr_map(xi));
  if (base.size() != shifted.size()) return false;
  for (size_t b = 0; b < base.size(); ++b) {
    if (base[b].len != shifted[b].len) return false;
    if (base[b].riggings.size() != shifted[b].riggings.size()) return false;
    const long long delta = std::min(l, base[b].len);
    for (size_t i = 0; i < base[b].riggings.size(); ++i)
      if (shifted[b].riggings[i] != base[b].riggings[i] + delta) return false;
  }
  return true;
}

}  // namespace pbbs::kkr
