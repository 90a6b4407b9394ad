#pragma once

// Independent brute-force oracles and small helpers for the test suites.
// These deliberately re-derive quantities from first principles (full
// enumeration of assignments / endpoint tuples / colorings) rather than
// reusing any production code path.

#include <gmpxx.h>

#include <mcb/graph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace testsupport {

// Probability that uniformly dropped balls of two kinds dominate per bin
// (kind-1 count >= kind-2 count in every bin), by enumerating all
// bins^(mu1+mu2) assignments. Enumeration capped at 10^7 states.
mpq_class enum_k2(int bins, int mu1, int mu2);

// Four-kind variant with the per-bin constraint t2 - t4 >= |t1 - t3|.
mpq_class enum_k4(int bins, int mu1, int mu2, int mu3, int mu4);

// Exact per-crossing-count expectations by enumerating all n^(2m) ordered
// edge-endpoint tuples (the configuration model's edges are iid uniform
// ordered pairs) and, per graph, all 2^n colorings. Element z of the result
// is E[X(z)] where X counts colorings with z crossing edges in which every
// vertex has at least as many crossing clones as same-side clones (loops
// count twice toward same-side).
std::vector<mpq_class> enum_first_moment(int n, int m);

// E[X(z)^2] with X restricted to balanced colorings.
std::vector<mpq_class> enum_second_moment(int n, int m);

// Named small graphs.
mcb::MultiGraph complete_graph(int n);
mcb::MultiGraph k33_graph();
mcb::MultiGraph petersen_graph();

// Connected simple 3-regular graph on n vertices (n even) drawn from the
// configuration model by rejection; deterministic in seed.
mcb::MultiGraph random_cubic(int n, std::uint64_t seed);

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs a full shell command, returning its exit code and captured stdout
// (stderr is dropped).
CliResult run_command(const std::string& cmd);

}  // namespace testsupport
