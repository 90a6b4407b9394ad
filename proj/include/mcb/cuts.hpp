#pragma once

#include <mcb/graph.hpp>

#include <cstdint>
#include <vector>

namespace mcb {

// Two-sided vertex assignment with its cut value (number of non-loop
// crossing edges; loops can never cross).
struct Cut {
  std::vector<std::uint8_t> side;  // one 0/1 entry per vertex
  long long value = 0;
};

struct TrialStats {
  double mean = 0.0;
  double std_error = 0.0;
};

long long cut_value(const MultiGraph& g, const std::vector<std::uint8_t>& side);

// True iff every vertex has cross-degree >= same-side degree, counting edge
// multiplicities and excluding loops (a flip never changes a loop).
// Requires a consistent cut: side entries 0/1, one per vertex, stored value
// matching a recount; otherwise domain_error.
bool is_locally_optimal(const MultiGraph& g, const Cut& cut);

// Flips a uniformly random strictly-improving vertex until none exists.
// Value strictly increases each step, so at most m flips happen. The result
// is locally optimal and has value >= (non-loop edge count)/2.
Cut local_flip_search(const MultiGraph& g, const Cut& init, std::uint64_t seed);

// For each trial: draw G(n, floor(c n)), run the flip search from a
// uniformly random cut, record (value/n - c/2)/sqrt(c). Trials use
// substreams of `seed` indexed by trial and parallelize; the aggregation
// order is fixed, so results do not depend on the worker count.
TrialStats empirical_x(int n, double c, int trials, std::uint64_t seed);

// Greedy cut of a connected simple cubic graph seeded by a 2-coloring of
// the induced-bipartite vertex set: repeatedly color a uniformly random
// uncolored vertex among those with the most colored neighbors, opposite
// to the majority of those neighbors (ties by coin). The result has
// value >= 3n/2 - u where u = n - |bipartite_set|.
Cut cubic_extend_coloring(const MultiGraph& g,
                          const std::vector<int>& bipartite_set,
                          std::uint64_t seed);

// Exhaustive maximum cut value; n <= 20 or resource_error.
long long maxcut_bruteforce(const MultiGraph& g);

// Largest vertex set inducing a bipartite subgraph (ties: lexicographically
// smallest bit mask), returned in ascending order; n <= 18 or resource_error.
std::vector<int> max_induced_bipartite_bruteforce(const MultiGraph& g);

}  // namespace mcb
