#include <mcb/graph.hpp>

#include <mcb/errors.hpp>
#include <mcb/rng.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mcb {

MultiGraph gen_config_multigraph(int n, int m, std::uint64_t seed) {
  if (n < 1) throw domain_error("vertex count must be at least 1");
  if (m < 0) throw domain_error("edge count must be nonnegative");
  Rng rng(seed);

  // Clone placement first, then a uniform matching via a shuffle of the
  // clone indices: consecutive shuffled clones pair up.
  std::vector<int> clone_vertex(2 * static_cast<size_t>(m));
  for (auto& v : clone_vertex) {
    v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  }
  std::vector<std::uint32_t> order(clone_vertex.size());
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order, rng);

  MultiGraph g;
  g.n = n;
  g.edges.reserve(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    int u = clone_vertex[order[2 * static_cast<size_t>(k)]];
    int v = clone_vertex[order[2 * static_cast<size_t>(k) + 1]];
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  return g;
}

int loop_count(const MultiGraph& g) {
  int loops = 0;
  for (const auto& [u, v] : g.edges) {
    if (u == v) ++loops;
  }
  return loops;
}

MultiGraph read_graph(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw domain_error("graph header must be \"n m\"");
  if (n < 1 || m < 0) {
    throw domain_error("graph header requires n >= 1 and m >= 0");
  }
  MultiGraph g;
  g.n = static_cast<int>(n);
  g.edges.reserve(static_cast<size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      std::ostringstream os;
      os << "graph file ends after " << k << " of " << m << " edges";
      throw domain_error(os.str());
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      std::ostringstream os;
      os << "edge endpoint out of range: " << u << " " << v;
      throw domain_error(os.str());
    }
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << g.n << " " << g.edges.size() << "\n";
  for (const auto& [u, v] : g.edges) {
    out << u << " " << v << "\n";
  }
}

}  // namespace mcb
