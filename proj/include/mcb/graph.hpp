#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mcb {

// Multigraph over vertices 0..n-1; loops and parallel edges allowed, each
// entry in `edges` is one edge (stored with endpoints in nondecreasing
// order). m = edges.size().
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

// Configuration-model draw: 2m clones assigned to vertices independently
// and uniformly, then paired by a uniform perfect matching; pair k of the
// shuffled clone order becomes edge k. Reproducible from the seed.
MultiGraph gen_config_multigraph(int n, int m, std::uint64_t seed);

// Number of loops (u == v edges).
int loop_count(const MultiGraph& g);

// Reads / writes the plain text format: first line "n m", then one line
// "u v" per edge with 0-based endpoints; duplicate lines encode
// multiplicity. Malformed content raises domain_error.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);

}  // namespace mcb
