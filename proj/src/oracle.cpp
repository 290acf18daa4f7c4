#include "pbbs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "pbbs/dynamics.hpp"
#include "pbbs/scattering.hpp"

namespace pbbs::oracle {

namespace {

constexpr long long kCensusMaxL = 22;
constexpr long long kPathListMaxL = 14;

Path path_from_index(unsigned long long idx, long long L) {
  Path p(static_cast<size_t>(L), '1');
  for (long long pos = 0; pos < L; ++pos)
    if ((idx >> (L - 1 - pos)) & 1ULL) p[static_cast<size_t>(pos)] = '2';
  return p;
}

struct Accumulator {
  long long hat_count = 0;
  long long count = 0;
  std::vector<Path> paths;
  std::vector<Path> hat_paths;
};

using Partition = std::map<std::vector<long long>, Accumulator>;

// Classifies the index range [lo, hi); appending in index order keeps every
// stored list lexicographically sorted.
void classify_range(unsigned long long lo, unsigned long long hi, long long L,
                    std::optional<long long> M, bool store_paths,
                    Partition& out) {
  for (unsigned long long idx = lo; idx < hi; ++idx) {
    const long long twos = std::popcount(idx);
    const long long boxes = std::min(twos, L - twos);
    if (M && boxes != *M) continue;
    const Path p = path_from_index(idx, L);
    const std::vector<long long> m = content_from_energy(energy_vector(p));
    if (store_paths && scattering::action(p).m != m)
      throw std::logic_error("energy census disagrees with the bijection route");
    Accumulator& acc = out[m];
    acc.hat_count += 1;
    if (store_paths) acc.hat_paths.push_back(p);
    if (twos * 2 <= L) {
      acc.count += 1;
      if (store_paths) acc.paths.push_back(p);
    }
  }
}

Census pack(long long L, bool store_paths, Partition&& partition) {
  Census c;
  c.L = L;
  c.paths_stored = store_paths;
  for (auto& [m, acc] : partition) {
    CensusEntry e;
    e.m = m;
    e.hat_count = acc.hat_count;
    e.count = acc.count;
    e.paths = std::move(acc.paths);
    e.hat_paths = std::move(acc.hat_paths);
    c.entries.push_back(std::move(e));
  }
  // Order: total boxes, then longest row, then content lexicographically
  // descending (so fuller short-row profiles come first).
  std::stable_sort(c.entries.begin(), c.entries.end(),
                   [](const CensusEntry& a, const CensusEntry& b) {
                     const auto boxes = [](const CensusEntry& e) {
                       long long t = 0;
                       for (size_t k = 0; k < e.m.size(); ++k)
                         t += (static_cast<long long>(k) + 1) * e.m[k];
                       return t;
                     };
                     const long long ba = boxes(a), bb = boxes(b);
                     if (ba != bb) return ba < bb;
                     if (a.m.size() != b.m.size()) return a.m.size() < b.m.size();
                     return a.m > b.m;
                   });
  return c;
}

void check_census_args(long long L, const std::optional<long long>& M) {
  if (L < 1 || L > kCensusMaxL)
    throw std::invalid_argument("census is guarded to 1 <= L <= 22");
  if (M && (*M < 0 || 2 * *M > L))
    throw std::invalid_argument("box count must satisfy 0 <= 2M <= L");
}

}  // namespace

std::vector<long long> energy_vector(const Path& p) {
  require_valid_path(p);
  const long long K = static_cast<long long>(p.size()) / 2;
  std::vector<long long> E;
  E.reserve(static_cast<size_t>(K));
  for (long long l = 1; l <= K; ++l)
    E.push_back(dynamics::evolve(p, l).energy);
  return E;
}

std::vector<long long> content_from_energy(const std::vector<long long>& E) {
  const long long K = static_cast<long long>(E.size());
  std::vector<long long> m;
  for (long long l = 1; l <= K; ++l) {
    const long long prev = l >= 2 ? E[static_cast<size_t>(l - 2)] : 0;
    const long long next = l < K ? E[static_cast<size_t>(l)] : E.back();
    m.push_back(2 * E[static_cast<size_t>(l - 1)] - prev - next);
  }
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

Census census(long long L, std::optional<long long> M) {
  check_census_args(L, M);
  const bool store_paths = L <= kPathListMaxL;
  const unsigned long long total = 1ULL << L;

  // Fixed fan-out over index blocks: chunk boundaries depend only on L, so
  // the merged result is identical for any worker count.
  const unsigned long long chunks = L >= 8 ? 256 : 1;
  const unsigned long long step = total / chunks;
  std::vector<Partition> parts(chunks);
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const unsigned long long lo = static_cast<unsigned long long>(c) * step;
    const unsigned long long hi = c + 1 == static_cast<long long>(chunks)
                                      ? total
                                      : lo + step;
    classify_range(lo, hi, L, M, store_paths, parts[static_cast<size_t>(c)]);
  }

  Partition merged;
  for (auto& part : parts) {
    for (auto& [m, acc] : part) {
      Accumulator& dst = merged[m];
      dst.hat_count += acc.hat_count;
      dst.count += acc.count;
      dst.paths.insert(dst.paths.end(),
                       std::make_move_iterator(acc.paths.begin()),
                       std::make_move_iterator(acc.paths.end()));
      dst.hat_paths.insert(dst.hat_paths.end(),
                           std::make_move_iterator(acc.hat_paths.begin()),
                           std::make_move_iterator(acc.hat_paths.end()));
    }
  }
  return pack(L, store_paths, std::move(merged));
}

Census census_serial(long long L, std::optional<long long> M) {
  check_census_args(L, M);
  const bool store_paths = L <= kPathListMaxL;
  Partition partition;
  classify_range(0, 1ULL << L, L, M, store_paths, partition);
  return pack(L, store_paths, std::move(partition));
}

long long brute_period(const Path& p, long long l, long long cap) {
  require_valid_path(p);
  if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
  if (cap < 1) throw std::invalid_argument("iteration cap must be >= 1");
  Path q = p;
  for (long long n = 1; n <= cap; ++n) {
    q = dynamics::evolve(q, l).next;
    if (q == p) return n;
  }
  throw std::runtime_error("no return within the iteration cap");
}

OrbitSummary brute_orbits(long long L, const std::vector<long long>& m,
                          const std::vector<long long>& evolutions) {
  if (L < 1 || L > kPathListMaxL)
    throw std::invalid_argument("orbit enumeration is guarded to L <= 14");
  std::vector<long long> want = m;
  while (!want.empty() && want.back() == 0) want.pop_back();
  long long M = 0;
  for (size_t k = 0; k < want.size(); ++k)
    M += (static_cast<long long>(k) + 1) * want[k];

  const Census c = census_serial(L, M);
  const CensusEntry* entry = nullptr;
  for (const auto& e : c.entries)
    if (e.m == want) entry = &e;
  if (entry == nullptr)
    throw std::logic_error("no state realizes the requested content");

  const std::vector<Path>& paths = entry->paths;
  std::unordered_map<Path, size_t> index;
  for (size_t i = 0; i < paths.size(); ++i) index.emplace(paths[i], i);

  std::vector<size_t> parent(paths.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  const auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (size_t i = 0; i < paths.size(); ++i) {
    for (long long l : evolutions) {
      if (l < 1) throw std::invalid_argument("evolution capacity must be >= 1");
      const Path q = dynamics::evolve(paths[i], l).next;
      const auto it = index.find(q);
      if (it == index.end())
        throw std::logic_error("evolution left the content class");
      parent[find(i)] = find(it->second);
    }
  }

  std::map<size_t, long long> size_of;
  for (size_t i = 0; i < paths.size(); ++i) size_of[find(i)] += 1;
  OrbitSummary out;
  out.orbit_count = static_cast<long long>(size_of.size());
  for (const auto& [root, sz] : size_of) out.sizes.push_back(sz);
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

}  // namespace pbbs::oracle
