// Command-line front end for the periodic box-ball toolkit: evolution,
// spacetime traces, the scattering transform and its inverse, closed-form
// periods, state counting, and oracle verification sweeps.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pbbs/bethe.hpp"
#include "pbbs/detail/gmp_compat.hpp"
#include "pbbs/dynamics.hpp"
#include "pbbs/kkr.hpp"
#include "pbbs/oracle.hpp"
#include "pbbs/path.hpp"
#include "pbbs/periods.hpp"
#include "pbbs/scattering.hpp"

namespace {

using nlohmann::json;
using namespace pbbs;

Path letter_swap(const Path& p) {
  Path q = p;
  for (char& c : q) c = (c == '1') ? '2' : '1';
  return q;
}

std::string spaced(const Path& p) {
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += p[i];
  }
  return out;
}

// Flattens an angle representative into the row-list JSON schema; rows are
// emitted longest first and, within a block, largest rigging first to match
// the canonical rigged-configuration order.
json angle_to_json(const scattering::AngleRep& a, bool flipped) {
  json rows = json::array();
  for (const auto& b : a.blocks)
    for (auto it = b.riggings.rbegin(); it != b.riggings.rend(); ++it)
      rows.push_back({{"len", b.len}, {"rig", it->get_si()}});
  json j{{"L", a.L}, {"d", a.offset.get_si()}, {"rows", rows}};
  if (flipped) j["omega"] = true;
  return j;
}

scattering::AngleRep angle_from_json(const json& j) {
  scattering::AngleRep a;
  a.L = j.at("L").get<long long>();
  a.offset = detail::mz(j.at("d").get<long long>());
  std::vector<std::pair<long long, long long>> rows;
  for (const auto& r : j.at("rows"))
    rows.emplace_back(r.at("len").get<long long>(), r.at("rig").get<long long>());
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second < y.second;
  });
  for (const auto& [len, rig] : rows) {
    if (a.blocks.empty() || a.blocks.back().len != len) {
      scattering::AngleBlock b;
      b.len = len;
      a.blocks.push_back(b);
    }
    a.blocks.back().riggings.push_back(detail::mz(rig));
  }
  scattering::validate_angle(a);
  return a;
}

// The diagram layout used throughout the examples: offset first, then one
// row per string with its vacancy number on the left and rigging on the
// right.
void print_pretty(const scattering::AngleRep& a) {
  const scattering::ActionVariable av = scattering::action_of(a);
  std::cout << "d = " << a.offset.get_str() << "\n";
  size_t vwidth = 1, bwidth = 1;
  for (const auto& b : a.blocks) {
    vwidth = std::max(
        vwidth, std::to_string(scattering::vacancy(av, b.len)).size());
    bwidth = std::max(bwidth, static_cast<size_t>(b.len));
  }
  for (const auto& b : a.blocks) {
    const std::string vac = std::to_string(scattering::vacancy(av, b.len));
    for (auto it = b.riggings.rbegin(); it != b.riggings.rend(); ++it) {
      std::cout << "  " << std::string(vwidth - vac.size(), ' ') << vac << "  "
                << std::string(static_cast<size_t>(b.len), '#')
                << std::string(bwidth - static_cast<size_t>(b.len), ' ')
                << "  " << it->get_str() << "\n";
    }
  }
}

std::vector<long long> content_of(const Path& p) {
  return scattering::action(p).m;
}

// All contents with the given box count, in table order: shorter maximal
// row first, then lexicographically descending.
std::vector<std::vector<long long>> contents_of_box_count(long long M) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> m;
  const auto rec = [&](auto&& self, long long left, long long maxpart) -> void {
    if (left == 0) {
      std::vector<long long> v = m;
      while (!v.empty() && v.back() == 0) v.pop_back();
      out.push_back(v);
      return;
    }
    for (long long j = std::min(left, maxpart); j >= 1; --j) {
      if (static_cast<long long>(m.size()) < j) m.resize(static_cast<size_t>(j), 0);
      m[static_cast<size_t>(j - 1)] += 1;
      self(self, left - j, j);
      m[static_cast<size_t>(j - 1)] -= 1;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
  };
  rec(rec, M, M == 0 ? 1 : M);
  std::sort(out.begin(), out.end(),
            [](const std::vector<long long>& a, const std::vector<long long>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a > b;
            });
  return out;
}

std::string content_str(const std::vector<long long>& m) {
  std::string s = "(";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + ")";
}

mpz_class binom(long long n, long long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

// ---------------------------------------------------------------------------
// verify suites: named oracle comparisons, reported as TAP lines.

using SuiteResult = std::vector<std::pair<std::string, bool>>;

Path random_path(std::mt19937_64& rng, long long L) {
  Path p;
  for (long long i = 0; i < L; ++i) p += (rng() & 1) ? '2' : '1';
  return p;
}

SuiteResult suite_crystal(long long L, unsigned long long seed) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  using crystal::CrystalElement;

  bool inv = true, eps = true;
  for (int it = 0; it < 500 && (inv || eps); ++it) {
    const long long cx = 1 + static_cast<long long>(rng() % 6);
    const long long cy = 1 + static_cast<long long>(rng() % 6);
    CrystalElement x{static_cast<long long>(rng() % (cx + 1)), 0};
    x.x2 = cx - x.x1;
    CrystalElement y{static_cast<long long>(rng() % (cy + 1)), 0};
    y.x2 = cy - y.x1;
    const auto once = crystal::combinatorial_r(x, y);
    const auto twice = crystal::combinatorial_r(once.y_tilde, once.x_tilde);
    if (!(twice.y_tilde == x && twice.x_tilde == y)) inv = false;
    if (twice.energy_h != once.energy_h) eps = false;
  }
  r.emplace_back("combinatorial R is an energy-preserving involution", inv && eps);

  bool yb = true;
  for (int it = 0; it < 1000 && yb; ++it) {
    std::vector<CrystalElement> w(3);
    std::vector<long long> deg(3);
    for (int k = 0; k < 3; ++k) {
      const long long c = 1 + static_cast<long long>(rng() % 6);
      w[k].x1 = static_cast<long long>(rng() % (c + 1));
      w[k].x2 = c - w[k].x1;
      deg[k] = static_cast<long long>(rng() % 9) - 4;
    }
    const auto apply = [](std::vector<CrystalElement> v, std::vector<long long> d,
                          int pos) {
      const auto out = crystal::combinatorial_r(v[pos], v[pos + 1]);
      v[pos] = out.y_tilde;
      v[pos + 1] = out.x_tilde;
      const long long a = d[pos], b = d[pos + 1];
      d[pos] = b + out.energy_h;
      d[pos + 1] = a - out.energy_h;
      return std::pair(v, d);
    };
    auto [v1, d1] = apply(w, deg, 1);
    std::tie(v1, d1) = apply(v1, d1, 0);
    std::tie(v1, d1) = apply(v1, d1, 1);
    auto [v2, d2] = apply(w, deg, 0);
    std::tie(v2, d2) = apply(v2, d2, 1);
    std::tie(v2, d2) = apply(v2, d2, 0);
    if (!(v1 == v2 && d1 == d2)) yb = false;
  }
  r.emplace_back("Yang-Baxter relation with degree tracking (1000 triples)", yb);

  bool ops = true;
  for (int it = 0; it < 300 && ops; ++it) {
    crystal::TensorWord w;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
      const long long c = 1 + static_cast<long long>(rng() % 4);
      CrystalElement x{static_cast<long long>(rng() % (c + 1)), 0};
      x.x2 = c - x.x1;
      w.push_back(x);
    }
    for (int i = 0; i <= 1 && ops; ++i) {
      // phi counts the applications of f before annihilation; same for
      // epsilon and e.
      long long nf = 0;
      auto cur = w;
      while (auto nxt = crystal::kashiwara(cur, crystal::KashiwaraOp::F, i)) {
        cur = *nxt;
        ++nf;
      }
      if (nf != crystal::phi(w, i)) ops = false;
      long long ne = 0;
      cur = w;
      while (auto nxt = crystal::kashiwara(cur, crystal::KashiwaraOp::E, i)) {
        cur = *nxt;
        ++ne;
      }
      if (ne != crystal::epsilon(w, i)) ops = false;
      if (crystal::weyl_s(crystal::weyl_s(w, i), i) != w) ops = false;
    }
  }
  r.emplace_back("ladder counts match epsilon/phi; reflections are involutions",
                 ops);

  (void)L;
  return r;
}

SuiteResult suite_kkr(long long L, unsigned long long seed) {
  SuiteResult r;
  const long long cap = std::min(L, 12LL);
  bool round = true, pwl = true;
  for (long long n = 1; n <= cap; ++n)
    for (unsigned long idx = 0; idx < (1ul << n); ++idx) {
      Path p;
      for (long long k = 0; k < n; ++k)
        p += ((idx >> (n - 1 - k)) & 1) ? '2' : '1';
      if (!is_highest(p)) continue;
      const auto rc = kkr::kkr_map(p);
      if (kkr::kkr_inverse(rc) != p) round = false;
      if (kkr::kkr_inverse_pwl(rc) != p) pwl = false;
    }
  r.emplace_back("bijection round trip on all highest states up to L=" +
                     std::to_string(cap),
                 round);
  r.emplace_back("piecewise-linear inverse agrees with the box-removal inverse",
                 pwl);

  std::mt19937_64 rng(seed);
  bool rand_ok = true;
  for (int it = 0; it < 300 && rand_ok; ++it) {
    Path p = random_path(rng, 2 + static_cast<long long>(rng() % 11));
    if (!is_highest(p)) continue;
    const auto rc = kkr::kkr_map(p);
    const auto rc2 = kkr::kkr_map_randomized(p, rng());
    if (rc.rows.size() != rc2.rows.size()) rand_ok = false;
    for (size_t i = 0; rand_ok && i < rc.rows.size(); ++i)
      rand_ok = rc.rows[i].len == rc2.rows[i].len &&
                rc.rows[i].rig == rc2.rows[i].rig;
    if (rand_ok) rand_ok = kkr::kkr_inverse_randomized(rc, rng()) == p;
  }
  r.emplace_back("singular-row tie-breaks do not affect the bijection", rand_ok);
  return r;
}

SuiteResult suite_linearization(long long L, unsigned long long seed) {
  SuiteResult r;
  const long long cap = std::min(L, 8LL);
  bool exh = true;
  for (long long n = 2; n <= cap; ++n)
    for (unsigned long idx = 0; idx < (1ul << n); ++idx) {
      Path p;
      for (long long k = 0; k < n; ++k)
        p += ((idx >> (n - 1 - k)) & 1) ? '2' : '1';
      if (std::abs(weight(p)) == n) continue;  // constant states stay put
      for (long long l = 1; l <= 3 && exh; ++l) {
        Path q = p;
        for (long long t = 1; t <= 6; ++t) {
          q = dynamics::evolve(q, l).next;
          if (scattering::fast_evolve(p, l, detail::mz(t)) != q) exh = false;
        }
      }
    }
  r.emplace_back("closed form equals iteration, exhaustive to L=" +
                     std::to_string(cap),
                 exh);

  std::mt19937_64 rng(seed);
  bool rand_ok = true, neg_ok = true;
  const long long span = std::max(1LL, std::min(L - 3, 17LL));
  for (int it = 0; it < 300; ++it) {
    const long long n = 4 + static_cast<long long>(rng() % span);
    Path p = random_path(rng, n);
    if (std::abs(weight(p)) == n) continue;
    const long long l = 1 + static_cast<long long>(rng() % 5);
    const long long t = static_cast<long long>(rng() % 51);
    Path q = p;
    for (long long k = 0; k < t; ++k) q = dynamics::evolve(q, l).next;
    if (scattering::fast_evolve(p, l, detail::mz(t)) != q) rand_ok = false;
    if (scattering::fast_evolve(q, l, detail::mz(-t)) != p) neg_ok = false;
  }
  r.emplace_back("closed form equals iteration, 300 random states", rand_ok);
  r.emplace_back("negative times invert the evolution", neg_ok);
  return r;
}

SuiteResult suite_periods(long long L, unsigned long long seed) {
  SuiteResult r;
  (void)seed;
  const long long cap = std::min(L, 8LL);
  bool fp = true, rt = true;
  for (long long n = 2; n <= cap; ++n)
    for (unsigned long idx = 0; idx < (1ul << n); ++idx) {
      Path p;
      for (long long k = 0; k < n; ++k)
        p += ((idx >> (n - 1 - k)) & 1) ? '2' : '1';
      if (std::abs(weight(p)) == n) continue;
      for (long long l = 1; l <= 4; ++l) {
        const long long bp = oracle::brute_period(p, l, 1000000);
        if (periods::fundamental_period(p, l).get_si() != bp) fp = false;
        const mpz_class N = periods::generic_period(content_of(p), n, l);
        if (scattering::fast_evolve(p, l, N) != p) rt = false;
      }
    }
  r.emplace_back("formula period equals brute iteration, exhaustive to L=" +
                     std::to_string(cap),
                 fp);
  r.emplace_back("every state returns after the generic period", rt);

  bool phase = true;
  for (long long n = 2; n <= cap; ++n) {
    const auto c = oracle::census_serial(n);
    for (const auto& e : c.entries)
      for (const auto& p : e.paths)
        for (long long l = 1; l <= 4 && phase; ++l)
          phase = bethe::eigenvalue_is_root_of_unity(
              scattering::direct(p), l, periods::generic_period(e.m, n, l));
  }
  r.emplace_back("return phases are roots of unity at the generic period",
                 phase);
  return r;
}

SuiteResult suite_counting(long long L, unsigned long long seed) {
  SuiteResult r;
  (void)seed;
  const long long cap = std::min(L, 12LL);
  const auto c = oracle::census(cap);
  const auto cs = oracle::census_serial(cap);
  r.emplace_back("parallel census equals the serial reference at L=" +
                     std::to_string(cap),
                 c == cs);

  bool counts = true;
  for (const auto& e : c.entries)
    if (mpz_class(detail::mz(e.count)) != bethe::omega_count(e.m, cap))
      counts = false;
  r.emplace_back("census class sizes match the determinant count", counts);

  bool sum = true;
  const long long scap = std::min(L, 16LL);
  for (long long n = 2; n <= scap; ++n)
    for (long long M = 0; 2 * M <= n; ++M) {
      mpz_class total = 0;
      for (const auto& m : contents_of_box_count(M))
        total += bethe::omega_count(m, n);
      if (total != binom(n, M)) sum = false;
    }
  r.emplace_back("completeness: counts sum to binomials up to L=" +
                     std::to_string(scap),
                 sum);

  bool orbits = true;
  const long long ocap = std::min(L, 10LL);
  const auto co = oracle::census_serial(ocap);
  std::vector<long long> all;
  for (long long l = 1; 2 * l <= ocap; ++l) all.push_back(l);
  for (const auto& e : co.entries) {
    if (e.m.empty()) continue;
    const auto bo = oracle::brute_orbits(ocap, e.m, all);
    if (periods::orbit_count_all_evolutions(e.m, ocap).get_si() !=
        bo.orbit_count)
      orbits = false;
  }
  r.emplace_back("orbit product formula matches union-find at L=" +
                     std::to_string(ocap),
                 orbits);
  return r;
}

int report(const SuiteResult& results) {
  std::cout << "1.." << results.size() << "\n";
  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].second) ++failures;
    std::cout << (results[i].second ? "ok " : "not ok ") << (i + 1) << " - "
              << results[i].first << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic box-ball system toolkit"};
  app.require_subcommand(1);

  std::string path_arg;
  std::string json_arg;
  std::string suite;
  long long l = 1, steps = 0, L = 8;
  long long M = -1;
  unsigned long long seed = 20260825ULL;
  bool fast = false, reduce = false, as_json = false, pretty = false;
  bool allow_omega = false;

  auto* evolve = app.add_subcommand("evolve", "advance a state t steps");
  evolve->add_option("--path", path_arg, "state over {1,2}")->required();
  evolve->add_option("--l", l, "carrier capacity")->required();
  evolve->add_option("--steps", steps, "time steps (may be negative)");
  evolve->add_flag("--fast", fast, "use the scattering closed form");
  evolve->add_flag("--reduce", reduce, "reduce steps modulo the generic period");
  evolve->add_flag("--json", as_json, "machine-readable output");

  auto* trace = app.add_subcommand("trace", "print a spacetime diagram");
  trace->add_option("--path", path_arg)->required();
  trace->add_option("--l", l)->required();
  trace->add_option("--steps", steps)->required();
  trace->add_flag("--json", as_json);

  auto* scatter = app.add_subcommand("scatter", "action-angle coordinates");
  scatter->add_option("--path", path_arg)->required();
  scatter->add_flag("--allow-omega", allow_omega,
                    "letter-swap negative-weight states first");
  scatter->add_flag("--pretty", pretty, "diagram layout instead of JSON");

  auto* unscatter = app.add_subcommand("unscatter", "state from coordinates");
  unscatter->add_option("--json", json_arg, "angle data (stdin when omitted)");

  auto* period = app.add_subcommand("period", "return time of a state");
  period->add_option("--path", path_arg)->required();
  period->add_option("--l", l)->required();
  bool fundamental = false, explain = false;
  period->add_flag("--fundamental", fundamental, "state period, not generic");
  period->add_flag("--explain", explain, "show determinants and LCM terms");
  period->add_flag("--json", as_json);

  auto* count = app.add_subcommand("count", "class sizes by content");
  count->add_option("--L", L, "circle length")->required();
  count->add_option("--M", M, "restrict to one box count");
  count->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "oracle comparison sweeps");
  verify
      ->add_option("--suite", suite,
                   "one of: crystal, kkr, linearization, periods, counting")
      ->required();
  verify->add_option("--L", L, "size budget for the sweeps");
  verify->add_option("--seed", seed, "seed for randomized sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(evolve)) {
      require_valid_path(path_arg);
      mpz_class t = detail::mz(steps);
      if (reduce) {
        const mpz_class N =
            periods::generic_period(content_of(path_arg),
                                    static_cast<long long>(path_arg.size()), l);
        mpz_class red;
        mpz_fdiv_r(red.get_mpz_t(), t.get_mpz_t(), N.get_mpz_t());
        t = red;
      }
      Path q;
      if (fast) {
        q = scattering::fast_evolve(path_arg, l, t);
      } else {
        if (!t.fits_slong_p())
          throw std::invalid_argument("step count too large to iterate; use --fast");
        const long long n = t.get_si();
        q = path_arg;
        for (long long k = 0; k < n; ++k) q = dynamics::evolve(q, l).next;
        for (long long k = 0; k > n; --k) q = dynamics::evolve_inverse(q, l);
      }
      if (as_json)
        std::cout << json{{"path", q}}.dump() << "\n";
      else
        std::cout << q << "\n";
    } else if (app.got_subcommand(trace)) {
      require_valid_path(path_arg);
      if (steps < 0) throw std::invalid_argument("trace needs steps >= 0");
      Path q = path_arg;
      json rows = json::array();
      for (long long t = 0; t <= steps; ++t) {
        if (as_json)
          rows.push_back(q);
        else
          std::cout << "t=" << t << ": " << spaced(q) << "\n";
        if (t < steps) q = dynamics::evolve(q, l).next;
      }
      if (as_json) std::cout << json{{"rows", rows}}.dump() << "\n";
    } else if (app.got_subcommand(scatter)) {
      require_valid_path(path_arg);
      Path q = path_arg;
      bool flipped = false;
      if (weight(q) < 0) {
        if (!allow_omega)
          throw std::invalid_argument(
              "negative weight; pass --allow-omega to letter-swap first");
        q = letter_swap(q);
        flipped = true;
      }
      const auto a = scattering::direct(q);
      if (pretty)
        print_pretty(a);
      else
        std::cout << angle_to_json(a, flipped).dump() << "\n";
    } else if (app.got_subcommand(unscatter)) {
      if (json_arg.empty())
        for (std::string line; std::getline(std::cin, line);) json_arg += line;
      json j;
      try {
        j = json::parse(json_arg);
      } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad angle JSON: ") + e.what());
      }
      scattering::AngleRep a;
      bool flipped = false;
      try {
        a = angle_from_json(j);
        flipped = j.value("omega", false);
      } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad angle JSON: ") + e.what());
      }
      Path p = scattering::inverse(a);
      if (flipped) p = letter_swap(p);
      std::cout << p << "\n";
    } else if (app.got_subcommand(period)) {
      require_valid_path(path_arg);
      const Path q = weight(path_arg) >= 0 ? path_arg : letter_swap(path_arg);
      const auto a = scattering::direct(q);
      const auto av = scattering::action_of(a);
      const auto sys = bethe::build(av.m, av.L);
      const mpz_class N = fundamental
                              ? periods::fundamental_period(path_arg, l)
                              : periods::generic_period(av.m, av.L, l);
      if (!explain && !as_json) {
        std::cout << N.get_str() << "\n";
      } else {
        const std::vector<long long> g_desc = periods::symmetry_orders(a);
        std::vector<long long> g(g_desc.rbegin(), g_desc.rend());
        json terms = json::array();
        std::vector<std::string> lines;
        for (size_t b = 0; b < sys.lengths.size(); ++b) {
          std::vector<mpz_class> col;
          for (size_t c = 0; c < sys.lengths.size(); ++c)
            col.push_back(detail::mz(std::min(sys.lengths[c], l)));
          mpz_class det = bethe::det_with_column(sys.F, b, col);
          if (fundamental) det *= detail::mz(g[b]);
          std::string ratio = "-";
          if (det != 0) {
            mpq_class t(sys.det_f, det);
            t.canonicalize();
            ratio = t.get_str();
          }
          terms.push_back({{"j", sys.lengths[b]},
                           {"det", det.get_str()},
                           {"g", g[b]},
                           {"ratio", ratio}});
          lines.push_back("j=" + std::to_string(sys.lengths[b]) +
                          ": det F[j]" + (fundamental ? "*g" : "") + " = " +
                          det.get_str() + "  ratio = " + ratio);
        }
        if (as_json) {
          std::cout << json{{"N", N.get_str()},
                            {"detF", sys.det_f.get_str()},
                            {"terms", terms}}
                           .dump()
                    << "\n";
        } else {
          std::cout << "content " << content_str(av.m) << "  L = " << av.L
                    << "  l = " << l << "\n";
          std::cout << "det F = " << sys.det_f.get_str() << "\n";
          for (const auto& line : lines) std::cout << line << "\n";
          std::cout << "N = " << N.get_str() << "\n";
        }
      }
    } else if (app.got_subcommand(count)) {
      if (L < 1) throw std::invalid_argument("need L >= 1");
      if (M >= 0 && 2 * M > L)
        throw std::invalid_argument("box count must satisfy 2M <= L");
      json tables = json::array();
      for (long long boxes = (M >= 0 ? M : 0); boxes <= (M >= 0 ? M : L / 2);
           ++boxes) {
        mpz_class total = 0;
        json entries = json::array();
        if (!as_json) std::cout << "L=" << L << " M=" << boxes << "\n";
        for (const auto& m : contents_of_box_count(boxes)) {
          const mpz_class omega = bethe::omega_count(m, L);
          total += omega;
          if (as_json)
            entries.push_back({{"m", m}, {"omega", omega.get_str()}});
          else
            std::cout << "  m=" << content_str(m) << "  count=" << omega.get_str()
                      << "\n";
        }
        const mpz_class expect = binom(L, boxes);
        if (total != expect)
          throw std::logic_error("completeness sum failed");
        if (as_json)
          tables.push_back({{"M", boxes},
                            {"entries", entries},
                            {"total", total.get_str()}});
        else
          std::cout << "  total=" << total.get_str()
                    << " binom=" << expect.get_str() << "\n";
      }
      if (as_json) std::cout << json{{"L", L}, {"tables", tables}}.dump() << "\n";
    } else if (app.got_subcommand(verify)) {
      SuiteResult results;
      if (suite == "crystal")
        results = suite_crystal(L, seed);
      else if (suite == "kkr")
        results = suite_kkr(L, seed);
      else if (suite == "linearization")
        results = suite_linearization(L, seed);
      else if (suite == "periods")
        results = suite_periods(L, seed);
      else if (suite == "counting")
        results = suite_counting(L, seed);
      else
        throw std::invalid_argument("unknown suite: " + suite);
      return report(results);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
