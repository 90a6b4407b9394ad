#include <mcb/moments.hpp>

#include <mcb/errors.hpp>
#include <mcb/graph.hpp>
#include <mcb/occupancy.hpp>
#include <mcb/rational.hpp>
#include <mcb/rng.hpp>
#include <mcb/workers.hpp>

#include <array>
#include <atomic>
#include <cmath>
#include <sstream>

namespace mcb {

namespace {

void check_query(const MomentQuery& q, int n_cap, int m_cap, bool need_even) {
  if (q.n < 1) throw domain_error("n must be at least 1");
  if (q.m < 0) throw domain_error("m must be nonnegative");
  if (q.zn < 0) throw domain_error("zn must be nonnegative");
  if (need_even && q.n % 2 != 0) {
    throw domain_error("n must be even for balanced counts");
  }
  if (q.n > n_cap || q.m > m_cap) {
    std::ostringstream os;
    os << "query (n=" << q.n << ", m=" << q.m << ") exceeds the exact-size "
       << "limits n <= " << n_cap << ", m <= " << m_cap;
    throw resource_error(os.str());
  }
}

// Shared inner sum of the first-moment formula at a fixed side split
// (n1, n2): over within-side edge counts (m1, m2 = M-Z-m1), the clone-slot
// multinomial, the per-side matching counts, vertex placements, and the
// two dominance-probability factors.
mpq_class first_moment_split(int n, int n1, int M, int Z,
                             const mpz_class& denom) {
  const int n2 = n - n1;
  const mpz_class facZ = factorial(static_cast<unsigned long>(Z));
  const mpz_class fac2M = factorial(static_cast<unsigned long>(2 * M));
  mpq_class total = 0;
  for (int m1 = 0; m1 + Z <= M; ++m1) {
    const int m2 = M - Z - m1;
    const int c1 = 2 * m1 + Z, c2 = 2 * m2 + Z;
    if (n1 == 0 && c1 > 0) continue;
    if (n2 == 0 && c2 > 0) continue;
    mpz_class ways = binomial(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(n1));
    ways *= fac2M /
            (factorial(static_cast<unsigned long>(2 * m1)) *
             factorial(static_cast<unsigned long>(2 * m2)) * facZ * facZ);
    ways *= upow(static_cast<unsigned long>(n1), static_cast<unsigned long>(c1));
    ways *= upow(static_cast<unsigned long>(n2), static_cast<unsigned long>(c2));
    ways *= facZ;  // pair the side-1 cross clones with the side-2 ones
    ways *= pair_count(static_cast<unsigned long>(2 * m1));
    ways *= pair_count(static_cast<unsigned long>(2 * m2));
    if (ways == 0) continue;
    mpq_class term(ways, denom);
    term *= k2_exact(n1, Z, 2 * m1);
    term *= k2_exact(n2, Z, 2 * m2);
    total += term;
  }
  return total;
}

}  // namespace

mpq_class first_moment_exact(const MomentQuery& q) {
  check_query(q, 12, 12, false);
  if (q.zn > q.m) return 0;
  const mpz_class denom =
      upow(static_cast<unsigned long>(q.n), static_cast<unsigned long>(2 * q.m)) *
      pair_count(static_cast<unsigned long>(2 * q.m));
  mpq_class total = 0;
  for (int n1 = 0; n1 <= q.n; ++n1) {
    total += first_moment_split(q.n, n1, q.m, q.zn, denom);
  }
  total.canonicalize();
  return total;
}

mpq_class first_moment_exact_balanced(const MomentQuery& q) {
  check_query(q, 12, 12, true);
  if (q.zn > q.m) return 0;
  const mpz_class denom =
      upow(static_cast<unsigned long>(q.n), static_cast<unsigned long>(2 * q.m)) *
      pair_count(static_cast<unsigned long>(2 * q.m));
  mpq_class total = first_moment_split(q.n, q.n / 2, q.m, q.zn, denom);
  total.canonicalize();
  return total;
}

mpq_class second_moment_exact(const MomentQuery& q) {
  check_query(q, 8, 8, true);
  if (q.zn > q.m) return 0;
  const int n = q.n, M = q.m, Z = q.zn, h = n / 2;
  const mpz_class denom =
      upow(static_cast<unsigned long>(n), static_cast<unsigned long>(2 * M)) *
      pair_count(static_cast<unsigned long>(2 * M));
  const mpz_class fac2M = factorial(static_cast<unsigned long>(2 * M));

  mpq_class total = 0;
  for (int b = 0; b <= h; ++b) {
    // Overlap classes: 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1) with
    // sizes fixed by balance of both colorings.
    const std::array<int, 4> sz = {b, h - b, h - b, b};
    mpz_class vertex_ways =
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(sz[0]));
    vertex_ways *= binomial(static_cast<unsigned long>(n - sz[0]),
                            static_cast<unsigned long>(sz[1]));
    vertex_ways *= binomial(static_cast<unsigned long>(n - sz[0] - sz[1]),
                            static_cast<unsigned long>(sz[2]));
    if (vertex_ways == 0) continue;

    for (int m01 = 0; m01 <= M; ++m01)
      for (int m02 = 0; m01 + m02 <= M; ++m02)
        for (int m03 = 0; m01 + m02 + m03 <= M; ++m03)
          for (int m12 = 0; m01 + m02 + m03 + m12 <= M; ++m12)
            for (int m13 = 0; m01 + m02 + m03 + m12 + m13 <= M; ++m13)
              for (int m23 = 0; m01 + m02 + m03 + m12 + m13 + m23 <= M;
                   ++m23) {
                if (m02 + m03 + m12 + m13 != Z) continue;  // first coloring
                if (m01 + m03 + m12 + m23 != Z) continue;  // second coloring
                const int rest = M - (m01 + m02 + m03 + m12 + m13 + m23);
                for (int m00 = 0; m00 <= rest; ++m00)
                  for (int m11 = 0; m00 + m11 <= rest; ++m11)
                    for (int m22 = 0; m00 + m11 + m22 <= rest; ++m22) {
                      const int m33 = rest - m00 - m11 - m22;
                      const std::array<int, 4> diag = {m00, m11, m22, m33};
                      const std::array<int, 4> s = {
                          2 * m00 + m01 + m02 + m03,
                          2 * m11 + m01 + m12 + m13,
                          2 * m22 + m02 + m12 + m23,
                          2 * m33 + m03 + m13 + m23};
                      bool feasible = true;
                      for (int i = 0; i < 4; ++i) {
                        if (sz[i] == 0 && s[i] > 0) feasible = false;
                      }
                      if (!feasible) continue;

                      // Class-local occupancy factors: kinds ordered as
                      // (other-coloring-only, both, this-coloring-only,
                      // within-class clones).
                      mpq_class kk = k4_exact(sz[0], m01, m03, m02, 2 * m00);
                      if (kk == 0) continue;
                      kk *= k4_exact(sz[1], m01, m12, m13, 2 * m11);
                      if (kk == 0) continue;
                      kk *= k4_exact(sz[2], m23, m12, m02, 2 * m22);
                      if (kk == 0) continue;
                      kk *= k4_exact(sz[3], m23, m03, m13, 2 * m33);
                      if (kk == 0) continue;

                      mpz_class split = fac2M;
                      for (int d : diag) {
                        split /= factorial(static_cast<unsigned long>(2 * d));
                      }
                      const std::array<int, 6> off = {m01, m02, m03,
                                                      m12, m13, m23};
                      mpz_class match = 1;
                      for (int c : off) {
                        const mpz_class f = factorial(static_cast<unsigned long>(c));
                        split /= f * f;
                        match *= f;
                      }
                      for (int d : diag) {
                        match *= pair_count(static_cast<unsigned long>(2 * d));
                      }
                      mpz_class pos = 1;
                      for (int i = 0; i < 4; ++i) {
                        pos *= upow(static_cast<unsigned long>(sz[i]),
                                    static_cast<unsigned long>(s[i]));
                      }
                      mpq_class term(vertex_ways * split * match * pos, denom);
                      total += term * kk;
                    }
              }
  }
  total.canonicalize();
  return total;
}

namespace {

// Per-graph exhaustive count of qualifying colorings by crossing count.
// Qualification is the clone-domination condition: for every vertex,
// 2 * same-side clones <= incident clones (loops add two same-side clones).
std::vector<std::uint64_t> qualifying_census(const MultiGraph& g,
                                             bool balanced_only) {
  const int n = g.n;
  std::vector<std::uint64_t> counts(g.edges.size() + 1, 0);
  std::array<int, 16> clone_deg{};
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      clone_deg[static_cast<size_t>(u)] += 2;
    } else {
      ++clone_deg[static_cast<size_t>(u)];
      ++clone_deg[static_cast<size_t>(v)];
    }
  }
  const std::uint32_t limit = 1u << n;
  const int half = n / 2;
  std::array<int, 16> within{};
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (balanced_only && __builtin_popcount(mask) != half) continue;
    within.fill(0);
    int z = 0;
    for (const auto& [u, v] : g.edges) {
      if (u == v) {
        within[static_cast<size_t>(u)] += 2;
      } else if (((mask >> u) ^ (mask >> v)) & 1u) {
        ++z;
      } else {
        ++within[static_cast<size_t>(u)];
        ++within[static_cast<size_t>(v)];
      }
    }
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if (2 * within[static_cast<size_t>(v)] > clone_deg[static_cast<size_t>(v)]) {
        ok = false;
        break;
      }
    }
    if (ok) ++counts[static_cast<size_t>(z)];
  }
  return counts;
}

std::vector<McMoment> mc_all(int n, int m, long long samples,
                             std::uint64_t seed, bool second) {
  if (n < 1) throw domain_error("n must be at least 1");
  if (m < 0) throw domain_error("m must be nonnegative");
  if (samples < 1) throw domain_error("samples must be at least 1");
  const int n_cap = second ? 8 : 16;
  if (n > n_cap || (second && m > 8)) {
    std::ostringstream os;
    os << "Monte Carlo census enumerates 2^n colorings; n <= " << n_cap
       << (second ? " and m <= 8" : "") << " required";
    throw resource_error(os.str());
  }
  if (second && n % 2 != 0) {
    throw domain_error("n must be even for balanced counts");
  }

  // Atomic integer accumulators: addition is commutative and exact, so the
  // totals do not depend on how samples land on workers.
  std::vector<std::atomic<std::uint64_t>> sums(static_cast<size_t>(m) + 1);
  std::vector<std::atomic<std::uint64_t>> squares(static_cast<size_t>(m) + 1);
  for (auto& a : sums) a.store(0, std::memory_order_relaxed);
  for (auto& a : squares) a.store(0, std::memory_order_relaxed);

  parallel_for(static_cast<size_t>(samples), [&](size_t i) {
    const MultiGraph g =
        gen_config_multigraph(n, m, substream_seed(seed, static_cast<std::uint64_t>(i)));
    const auto counts = qualifying_census(g, second);
    for (int z = 0; z <= m; ++z) {
      std::uint64_t x = counts[static_cast<size_t>(z)];
      if (second) x *= x;  // the statistic is the squared count
      if (x == 0) continue;
      sums[static_cast<size_t>(z)].fetch_add(x, std::memory_order_relaxed);
      squares[static_cast<size_t>(z)].fetch_add(x * x, std::memory_order_relaxed);
    }
  });

  std::vector<McMoment> out(static_cast<size_t>(m) + 1);
  const double nd = static_cast<double>(samples);
  for (int z = 0; z <= m; ++z) {
    const std::uint64_t s1 = sums[static_cast<size_t>(z)].load();
    const std::uint64_t s2 = squares[static_cast<size_t>(z)].load();
    McMoment& e = out[static_cast<size_t>(z)];
    e.mean = static_cast<double>(s1) / nd;
    if (samples > 1) {
      const unsigned __int128 var_num =
          static_cast<unsigned __int128>(s2) * static_cast<unsigned __int128>(samples) -
          static_cast<unsigned __int128>(s1) * static_cast<unsigned __int128>(s1);
      const double sample_var =
          static_cast<double>(var_num) / (nd * static_cast<double>(samples - 1));
      e.std_error = std::sqrt(sample_var / nd);
    }
  }
  return out;
}

}  // namespace

std::vector<McMoment> first_moment_mc_all(int n, int m, long long samples,
                                          std::uint64_t seed) {
  return mc_all(n, m, samples, seed, false);
}

std::vector<McMoment> second_moment_mc_all(int n, int m, long long samples,
                                           std::uint64_t seed) {
  return mc_all(n, m, samples, seed, true);
}

McMoment first_moment_mc(const MomentQuery& q, long long samples,
                         std::uint64_t seed) {
  if (q.zn < 0) throw domain_error("zn must be nonnegative");
  auto all = first_moment_mc_all(q.n, q.m, samples, seed);
  if (q.zn > q.m) return {0.0, 0.0};
  return all[static_cast<size_t>(q.zn)];
}

McMoment second_moment_mc(const MomentQuery& q, long long samples,
                          std::uint64_t seed) {
  if (q.zn < 0) throw domain_error("zn must be nonnegative");
  auto all = second_moment_mc_all(q.n, q.m, samples, seed);
  if (q.zn > q.m) return {0.0, 0.0};
  return all[static_cast<size_t>(q.zn)];
}

}  // namespace mcb
