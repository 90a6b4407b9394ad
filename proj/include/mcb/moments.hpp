#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace mcb {

// A finite-size moment query: configuration multigraph on n vertices with
// m edges, colorings scored by their crossing count zn.
struct MomentQuery {
  int n = 0;
  int m = 0;
  int zn = 0;
};

struct McMoment {
  double mean = 0.0;
  double std_error = 0.0;
};

// Exact E[X(zn)] where X counts the colorings (all 2^n of them) with
// exactly zn crossing edges in which every vertex carries at least as many
// crossing clones as same-side clones (loops contribute two same-side
// clones). Sums over side sizes and within-side edge counts with exact
// factorials, perfect-matching counts and k2_exact occupancy factors.
// n <= 12, m <= 12, else resource_error.
mpq_class first_moment_exact(const MomentQuery& q);

// Same count restricted to balanced colorings (side sizes n/2, n/2);
// n must be even. This is the E[X] whose square lower-bounds the
// second moment below.
mpq_class first_moment_exact_balanced(const MomentQuery& q);

// Exact E[X(zn)^2] for the balanced count: ordered pairs of balanced
// qualifying colorings, summed over the 4-class overlap profile and the
// ten pair-class edge counts, with k4_exact supplying the per-class
// occupancy factors. n even, n <= 8, m <= 8, else resource_error.
mpq_class second_moment_exact(const MomentQuery& q);

// Monte Carlo counterparts: sample graphs on substreams of `seed` (one per
// sample, so results are independent of the worker count), enumerate
// colorings exhaustively per graph, and average the per-graph counts
// (respectively squared counts). n <= 16 (first) / n <= 8 (second).
McMoment first_moment_mc(const MomentQuery& q, long long samples,
                         std::uint64_t seed);
McMoment second_moment_mc(const MomentQuery& q, long long samples,
                          std::uint64_t seed);

// Bulk versions returning estimates for every zn in 0..m from one pass
// over the sampled graphs.
std::vector<McMoment> first_moment_mc_all(int n, int m, long long samples,
                                          std::uint64_t seed);
std::vector<McMoment> second_moment_mc_all(int n, int m, long long samples,
                                           std::uint64_t seed);

}  // namespace mcb
