#pragma once

#include <optional>
#include <vector>

#include "pbbs/path.hpp"

// Brute-force ground truth at desk scale.  Everything here works by direct
// enumeration and iterated single-step evolution, deliberately avoiding the
// linearized machinery, so the two routes stay independent checks on each
// other.
namespace pbbs::oracle {

// Energies of the capacity-1..floor(L/2) evolutions.  Consecutive second
// differences of this vector recover the row content, which is how the
// census classifies states without running the bijection.
std::vector<long long> energy_vector(const Path& p);

// Row content from an energy vector: m_l = 2E_l - E_{l-1} - E_{l+1}, with
// E_0 = 0 and the vector continued as constant past its last entry.
// Trailing zero multiplicities are trimmed.
std::vector<long long> content_from_energy(const std::vector<long long>& E);

struct CensusEntry {
  std::vector<long long> m;        // row content, no trailing zeros
  long long hat_count = 0;         // states of any weight with this content
  long long count = 0;             // states of weight >= 0
  std::vector<Path> paths;         // weight >= 0 states, lexicographic
  std::vector<Path> hat_paths;     // all states, lexicographic

  bool operator==(const CensusEntry&) const = default;
};

struct Census {
  long long L = 0;
  bool paths_stored = false;       // lists filled only for L <= 14
  std::vector<CensusEntry> entries;

  bool operator==(const Census&) const = default;
};

// Classifies every length-L state (or only those with min(#1, #2) = M) by
// row content.  Entries are ordered by total box count, then by largest row
// length, then by content lexicographically descending.  Guarded to L <= 22.
Census census(long long L, std::optional<long long> M = std::nullopt);

// Single-threaded reference with the identical contract and output.
Census census_serial(long long L, std::optional<long long> M = std::nullopt);

// Minimal N <= cap with T_l^N(p) = p by iterating the carrier evolution.
// Exceeding the cap is reported as a runtime error, distinct from bad input.
long long brute_period(const Path& p, long long l, long long cap);

struct OrbitSummary {
  long long orbit_count = 0;
  std::vector<long long> sizes;    // ascending
};

// Union-find over the weight >= 0 states of content m under the listed
// capacities.  Guarded to L <= 14.
OrbitSummary brute_orbits(long long L, const std::vector<long long>& m,
                          const std::vector<long long>& evolutions);

}  // namespace pbbs::oracle
