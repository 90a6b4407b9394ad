#include <mcb/cuts.hpp>

#include <mcb/errors.hpp>
#include <mcb/rng.hpp>
#include <mcb/workers.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>

namespace mcb {

namespace {

void check_cut(const MultiGraph& g, const Cut& cut) {
  if (static_cast<int>(cut.side.size()) != g.n) {
    throw domain_error("cut must assign a side to every vertex");
  }
  for (std::uint8_t s : cut.side) {
    if (s > 1) throw domain_error("cut sides must be 0 or 1");
  }
  const long long recount = cut_value(g, cut.side);
  if (recount != cut.value) {
    std::ostringstream os;
    os << "stored cut value " << cut.value << " != recomputed " << recount;
    throw domain_error(os.str());
  }
}

// Per-vertex cross / same-side degree counts, loops excluded.
void degree_split(const MultiGraph& g, const std::vector<std::uint8_t>& side,
                  std::vector<int>& cross, std::vector<int>& same) {
  cross.assign(static_cast<size_t>(g.n), 0);
  same.assign(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)]) {
      ++cross[static_cast<size_t>(u)];
      ++cross[static_cast<size_t>(v)];
    } else {
      ++same[static_cast<size_t>(u)];
      ++same[static_cast<size_t>(v)];
    }
  }
}

std::vector<std::vector<int>> nonloop_adjacency(const MultiGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

}  // namespace

long long cut_value(const MultiGraph& g, const std::vector<std::uint8_t>& side) {
  if (static_cast<int>(side.size()) != g.n) {
    throw domain_error("side vector length must equal the vertex count");
  }
  long long value = 0;
  for (const auto& [u, v] : g.edges) {
    if (u != v && side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)]) {
      ++value;
    }
  }
  return value;
}

bool is_locally_optimal(const MultiGraph& g, const Cut& cut) {
  check_cut(g, cut);
  std::vector<int> cross, same;
  degree_split(g, cut.side, cross, same);
  for (int v = 0; v < g.n; ++v) {
    if (cross[static_cast<size_t>(v)] < same[static_cast<size_t>(v)]) return false;
  }
  return true;
}

Cut local_flip_search(const MultiGraph& g, const Cut& init, std::uint64_t seed) {
  check_cut(g, init);
  Rng rng(seed);
  Cut cut = init;
  std::vector<int> cross, same;
  degree_split(g, cut.side, cross, same);
  const auto adj = nonloop_adjacency(g);

  // Pool of strictly-improving vertices with positions for O(1) updates;
  // sampling below(pool size) is uniform over the set regardless of order.
  std::vector<int> pool;
  std::vector<int> pos(static_cast<size_t>(g.n), -1);
  auto refresh = [&](int v) {
    const bool improving = same[static_cast<size_t>(v)] > cross[static_cast<size_t>(v)];
    int& p = pos[static_cast<size_t>(v)];
    if (improving && p < 0) {
      p = static_cast<int>(pool.size());
      pool.push_back(v);
    } else if (!improving && p >= 0) {
      const int last = pool.back();
      pool[static_cast<size_t>(p)] = last;
      pos[static_cast<size_t>(last)] = p;
      pool.pop_back();
      p = -1;
    }
  };
  for (int v = 0; v < g.n; ++v) refresh(v);

  long long flips = 0;
  const long long flip_cap = static_cast<long long>(g.edges.size()) + 1;
  while (!pool.empty()) {
    const int v = pool[static_cast<size_t>(rng.below(pool.size()))];
    const int gain = same[static_cast<size_t>(v)] - cross[static_cast<size_t>(v)];
    for (int u : adj[static_cast<size_t>(v)]) {
      if (cut.side[static_cast<size_t>(u)] == cut.side[static_cast<size_t>(v)]) {
        --same[static_cast<size_t>(u)];
        ++cross[static_cast<size_t>(u)];
      } else {
        --cross[static_cast<size_t>(u)];
        ++same[static_cast<size_t>(u)];
      }
    }
    cut.side[static_cast<size_t>(v)] ^= 1;
    std::swap(cross[static_cast<size_t>(v)], same[static_cast<size_t>(v)]);
    cut.value += gain;
    refresh(v);
    for (int u : adj[static_cast<size_t>(v)]) refresh(u);
    if (++flips > flip_cap) {
      throw inconsistency_error(
          "flip search exceeded the edge-count bound on improving steps");
    }
  }
  return cut;
}

TrialStats empirical_x(int n, double c, int trials, std::uint64_t seed) {
  if (n < 1) throw domain_error("n must be at least 1");
  if (!(c > 0.0) || !std::isfinite(c)) throw domain_error("c must be positive");
  const long long m = static_cast<long long>(std::floor(c * n));
  if (m < 1) throw domain_error("floor(c*n) must be at least 1");
  if (trials < 1) throw domain_error("trials must be at least 1");

  std::vector<double> xs(static_cast<size_t>(trials));
  parallel_for(static_cast<size_t>(trials), [&](size_t i) {
    const std::uint64_t sub = substream_seed(seed, static_cast<std::uint64_t>(i));
    const MultiGraph g =
        gen_config_multigraph(n, static_cast<int>(m), substream_seed(sub, 0));
    Cut init;
    init.side.resize(static_cast<size_t>(n));
    Rng ir(substream_seed(sub, 1));
    for (auto& s : init.side) s = static_cast<std::uint8_t>(ir.below(2));
    init.value = cut_value(g, init.side);
    const Cut final_cut = local_flip_search(g, init, substream_seed(sub, 2));
    xs[i] = (static_cast<double>(final_cut.value) / n - c / 2.0) / std::sqrt(c);
  });

  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / trials;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double std_error =
      trials > 1 ? std::sqrt(ss / (static_cast<double>(trials - 1) * trials)) : 0.0;
  return {mean, std_error};
}

Cut cubic_extend_coloring(const MultiGraph& g,
                          const std::vector<int>& bipartite_set,
                          std::uint64_t seed) {
  // Simple: no loops, no repeated edges.
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : g.edges) {
    if (u == v) throw domain_error("graph must be simple: loop found");
    if (!seen.insert({u, v}).second) {
      throw domain_error("graph must be simple: parallel edge found");
    }
  }
  const auto adj = nonloop_adjacency(g);
  for (int v = 0; v < g.n; ++v) {
    if (adj[static_cast<size_t>(v)].size() != 3) {
      throw domain_error("graph must be 3-regular");
    }
  }
  // Connected.
  {
    std::vector<char> vis(static_cast<size_t>(g.n), 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : adj[static_cast<size_t>(v)]) {
        if (!vis[static_cast<size_t>(u)]) {
          vis[static_cast<size_t>(u)] = 1;
          ++reached;
          q.push(u);
        }
      }
    }
    if (reached != g.n) throw domain_error("graph must be connected");
  }

  // 2-color the induced subgraph on bipartite_set; the lowest-index vertex
  // of each induced component gets color 0.
  std::vector<char> in_set(static_cast<size_t>(g.n), 0);
  for (int v : bipartite_set) {
    if (v < 0 || v >= g.n) throw domain_error("bipartite_set vertex out of range");
    if (in_set[static_cast<size_t>(v)]) {
      throw domain_error("bipartite_set has a repeated vertex");
    }
    in_set[static_cast<size_t>(v)] = 1;
  }
  constexpr int kUncolored = -1;
  std::vector<int> color(static_cast<size_t>(g.n), kUncolored);
  for (int start = 0; start < g.n; ++start) {
    if (!in_set[static_cast<size_t>(start)] || color[static_cast<size_t>(start)] != kUncolored) {
      continue;
    }
    color[static_cast<size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : adj[static_cast<size_t>(v)]) {
        if (!in_set[static_cast<size_t>(u)]) continue;
        if (color[static_cast<size_t>(u)] == kUncolored) {
          color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
          q.push(u);
        } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
          throw domain_error("induced subgraph on bipartite_set is not bipartite");
        }
      }
    }
  }

  // Greedy extension: most colored neighbors first, colored opposite to
  // their majority, all ties broken by the seeded stream.
  Rng rng(seed);
  int uncolored = 0;
  for (int v = 0; v < g.n; ++v) {
    if (color[static_cast<size_t>(v)] == kUncolored) ++uncolored;
  }
  std::vector<int> candidates;
  while (uncolored > 0) {
    int best = -1;
    candidates.clear();
    for (int v = 0; v < g.n; ++v) {
      if (color[static_cast<size_t>(v)] != kUncolored) continue;
      int k = 0;
      for (int u : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(u)] != kUncolored) ++k;
      }
      if (k > best) {
        best = k;
        candidates.clear();
      }
      if (k == best) candidates.push_back(v);
    }
    const int v = candidates[static_cast<size_t>(rng.below(candidates.size()))];
    int ones = 0, zeros = 0;
    for (int u : adj[static_cast<size_t>(v)]) {
      if (color[static_cast<size_t>(u)] == 0) ++zeros;
      if (color[static_cast<size_t>(u)] == 1) ++ones;
    }
    int chosen;
    if (zeros > ones) {
      chosen = 1;
    } else if (ones > zeros) {
      chosen = 0;
    } else {
      chosen = static_cast<int>(rng.below(2));
    }
    color[static_cast<size_t>(v)] = chosen;
    --uncolored;
  }

  Cut cut;
  cut.side.resize(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    cut.side[static_cast<size_t>(v)] = static_cast<std::uint8_t>(color[static_cast<size_t>(v)]);
  }
  cut.value = cut_value(g, cut.side);
  return cut;
}

long long maxcut_bruteforce(const MultiGraph& g) {
  if (g.n > 20) throw resource_error("maxcut_bruteforce supports n <= 20");
  if (g.n < 1) throw domain_error("graph must have at least one vertex");
  long long best = 0;
  // Vertex n-1 stays on side 0: complements give the same value.
  const std::uint32_t limit = g.n == 1 ? 1u : (1u << (g.n - 1));
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    long long value = 0;
    for (const auto& [u, v] : g.edges) {
      if (u != v && (((mask >> u) ^ (mask >> v)) & 1u)) ++value;
    }
    best = std::max(best, value);
  }
  return best;
}

std::vector<int> max_induced_bipartite_bruteforce(const MultiGraph& g) {
  if (g.n > 18) {
    throw resource_error("max_induced_bipartite_bruteforce supports n <= 18");
  }
  if (g.n < 1) throw domain_error("graph must have at least one vertex");
  const auto adj = nonloop_adjacency(g);
  std::vector<char> loop_at(static_cast<size_t>(g.n), 0);
  for (const auto& [u, v] : g.edges) {
    if (u == v) loop_at[static_cast<size_t>(u)] = 1;
  }

  auto induced_bipartite = [&](std::uint32_t mask) {
    for (int v = 0; v < g.n; ++v) {
      if ((mask >> v & 1u) && loop_at[static_cast<size_t>(v)]) return false;
    }
    std::vector<int> color(static_cast<size_t>(g.n), -1);
    for (int start = 0; start < g.n; ++start) {
      if (!(mask >> start & 1u) || color[static_cast<size_t>(start)] != -1) continue;
      color[static_cast<size_t>(start)] = 0;
      std::queue<int> q;
      q.push(start);
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : adj[static_cast<size_t>(v)]) {
          if (!(mask >> u & 1u)) continue;
          if (color[static_cast<size_t>(u)] == -1) {
            color[static_cast<size_t>(u)] = 1 - color[static_cast<size_t>(v)];
            q.push(u);
          } else if (color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::uint32_t best_mask = 0;
  int best_size = 0;
  const std::uint32_t limit =
      g.n >= 32 ? 0u : (1u << g.n);  // n <= 18 here; guard kept for clarity
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > best_size && induced_bipartite(mask)) {
      best_size = size;
      best_mask = mask;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    if (best_mask >> v & 1u) out.push_back(v);
  }
  return out;
}

}  // namespace mcb
