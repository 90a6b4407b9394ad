// mcbounds: asymptotic Max-Cut bound constants for sparse random graphs,
// beta-scan data for figures, exact/Monte-Carlo finite-size oracles, and
// configuration-model simulations. JSON on stdout (CSV for scans); exit
// codes: 0 ok, 2 bad flags/domain, 3 solver failure, 4 resource limits.

#include <CLI11.hpp>
#include <json.hpp>

#include <mcb/cuts.hpp>
#include <mcb/errors.hpp>
#include <mcb/first_moment.hpp>
#include <mcb/graph.hpp>
#include <mcb/moments.hpp>
#include <mcb/occupancy.hpp>
#include <mcb/quad.hpp>
#include <mcb/rational.hpp>
#include <mcb/second_moment.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json fraction_json(const mpq_class& q) {
  ordered_json j;
  j["fraction"] = mcb::fraction_string(q);
  j["decimal"] = q.get_d();
  return j;
}

struct BoundsArgs {
  double c = 0.0;
  bool has_c = false;
  double tol = 1e-8;
  double tol_x = 1e-4;
  double gap_tol = mcb::kGapTolDefault;
  int grid = 64;
};

int run_bounds(const BoundsArgs& a) {
  const auto [x_u, theta_u] = mcb::solve_xu(a.tol);
  const mcb::FirstMomentSolution at_xu = mcb::solve_theta(x_u);
  const double x_l = mcb::solve_xl(a.tol_x, a.gap_tol, a.grid);

  const mcb::QuadSpec quad;
  ordered_json j;
  j["command"] = "bounds";
  j["x_u"] = x_u;
  j["theta_u"] = theta_u;
  j["x_l"] = x_l;
  j["residuals"] = {{"w_at_x_u", at_xu.w}, {"theta_at_x_u", at_xu.residual}};
  j["x_l_bracket"] = {x_l - a.tol_x / 2.0, x_l + a.tol_x / 2.0};
  j["tolerances"] = {{"x_u_tol", a.tol},
                     {"x_l_tol_x", a.tol_x},
                     {"gap_tol", a.gap_tol},
                     {"beta_grid", a.grid},
                     {"beta_min", mcb::kBetaMin},
                     {"theta_cap", mcb::kThetaCap},
                     {"quad_abs_tol", quad.abs_tol},
                     {"quad_rel_tol", quad.rel_tol},
                     {"quad_truncation", quad.truncation}};
  if (a.has_c) {
    const double rc = std::sqrt(a.c);
    j["c"] = a.c;
    j["maxcut_interval"] = {a.c / 2.0 + x_l * rc, a.c / 2.0 + x_u * rc};
    j["ising_interval"] = {-2.0 * x_u * rc, -2.0 * x_l * rc};
  }
  emit(j);
  return 0;
}

struct ScanArgs {
  double x = 0.0;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int steps = 0;
  std::string out;
};

int run_scan(const ScanArgs& a) {
  const auto rows = mcb::scan(a.x, a.beta_min, a.beta_max, a.steps);
  std::ofstream f(a.out);
  if (!f) throw mcb::domain_error("cannot write output file: " + a.out);
  f << "x,beta,t,theta1,theta2,W,two_w,gap\n";
  for (const auto& r : rows) {
    f << g17(r.x) << "," << g17(r.beta) << ",";
    if (r.ok) {
      f << g17(r.t) << "," << g17(r.theta1) << "," << g17(r.theta2) << ","
        << g17(r.W) << "," << g17(r.two_w) << "," << g17(r.gap) << "\n";
    } else {
      f << "NA,NA,NA,NA,NA,NA\n";
    }
  }
  if (!f.good()) throw mcb::domain_error("write failed: " + a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Max-Cut bounds for sparse random graphs: asymptotic constants, "
      "scan data, exact oracles, and simulations"};
  app.require_subcommand(1);

  // bounds
  BoundsArgs ba;
  auto* bounds = app.add_subcommand(
      "bounds", "Compute the upper/lower bound constants x_u and x_l");
  auto* copt = bounds->add_option(
                         "--c", ba.c,
                         "edge density c (m = floor(c*n)) for the interval report")
                   ->check(CLI::PositiveNumber);
  bounds->add_option("--tol", ba.tol, "bracket width tolerance for x_u")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--tol-x", ba.tol_x, "bracket width tolerance for x_l")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--gap-tol", ba.gap_tol,
                     "threshold on sup_beta W - 2w for classifying x")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bounds->add_option("--grid", ba.grid, "beta grid size for the maximization")
      ->check(CLI::Range(64, 100000))
      ->capture_default_str();

  // scan
  ScanArgs sa;
  auto* scan = app.add_subcommand(
      "scan", "Write a CSV of the second-moment exponent over a beta grid");
  scan->add_option("--x", sa.x, "normalized cut excess")->required();
  scan->add_option("--beta-min", sa.beta_min, "smallest beta")->required();
  scan->add_option("--beta-max", sa.beta_max, "largest beta")->required();
  scan->add_option("--steps", sa.steps, "number of grid points")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--out", sa.out, "output CSV path")->required();

  // oracle group
  auto* oracle = app.add_subcommand("oracle", "Exact finite-size oracles");
  oracle->require_subcommand(1);

  struct {
    int n = 0, mu1 = 0, mu2 = 0;
  } k2a;
  auto* k2 = oracle->add_subcommand("k2", "Two-kind dominance probability");
  k2->add_option("--n", k2a.n)->required();
  k2->add_option("--mu1", k2a.mu1)->required();
  k2->add_option("--mu2", k2a.mu2)->required();

  struct {
    int n = 0, mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 0;
  } k4a;
  auto* k4 = oracle->add_subcommand("k4", "Four-kind dominance probability");
  k4->add_option("--n", k4a.n)->required();
  k4->add_option("--mu1", k4a.mu1)->required();
  k4->add_option("--mu2", k4a.mu2)->required();
  k4->add_option("--mu3", k4a.mu3)->required();
  k4->add_option("--mu4", k4a.mu4)->required();

  struct {
    int n = 0, mu = 0;
    std::vector<int> t;
  } poa;
  auto* poisson = oracle->add_subcommand(
      "poisson", "Multinomial vs conditioned-Poisson identity");
  poisson->add_option("--n", poa.n)->required();
  poisson->add_option("--mu", poa.mu)->required();
  poisson->add_option("--t", poa.t, "comma-separated occupancy vector")
      ->required()
      ->delimiter(',');

  struct MomentArgs {
    int n = 0, m = 0, zn = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
  };
  MomentArgs m1a, m2a;
  auto* moment1 = oracle->add_subcommand(
      "moment1", "Exact first moment of the qualifying-coloring count");
  moment1->add_option("--n", m1a.n)->required();
  moment1->add_option("--m", m1a.m)->required();
  moment1->add_option("--zn", m1a.zn)->required();
  moment1->add_option("--samples", m1a.samples,
                      "Monte Carlo cross-check sample count (0 = exact only)")
      ->capture_default_str();
  moment1->add_option("--seed", m1a.seed)->capture_default_str();
  auto* moment2 = oracle->add_subcommand(
      "moment2", "Exact second moment of the balanced qualifying count");
  moment2->add_option("--n", m2a.n)->required();
  moment2->add_option("--m", m2a.m)->required();
  moment2->add_option("--zn", m2a.zn)->required();
  moment2->add_option("--samples", m2a.samples,
                      "Monte Carlo cross-check sample count (0 = exact only)")
      ->capture_default_str();
  moment2->add_option("--seed", m2a.seed)->capture_default_str();

  // simulate
  struct {
    int n = 0, trials = 0;
    double c = 0.0;
    std::uint64_t seed = 0;
  } sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Configuration-model graphs + local flip search statistics");
  simulate->add_option("--n", sim.n)->required();
  simulate->add_option("--c", sim.c, "edge density (m = floor(c*n))")->required();
  simulate->add_option("--trials", sim.trials)->required();
  simulate->add_option("--seed", sim.seed)->capture_default_str();

  // cubic
  struct {
    std::string graph, bipartite;
    bool bruteforce = false;
    std::uint64_t seed = 0;
  } cu;
  auto* cubic = app.add_subcommand(
      "cubic", "Greedy cut extension of a cubic graph from a bipartite seed set");
  cubic->add_option("--graph", cu.graph, "graph file (\"n m\" then edge lines)")
      ->required();
  auto* bip = cubic->add_option("--bipartite", cu.bipartite,
                                "file of whitespace-separated vertex indices");
  auto* brt = cubic->add_flag("--bruteforce", cu.bruteforce,
                              "search the maximum induced bipartite set");
  bip->excludes(brt);
  brt->excludes(bip);
  cubic->add_option("--seed", cu.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) {
      ba.has_c = copt->count() > 0;
      return run_bounds(ba);
    }
    if (scan->parsed()) return run_scan(sa);

    if (oracle->parsed()) {
      if (k2->parsed()) {
        ordered_json j;
        j["command"] = "oracle k2";
        j["n"] = k2a.n;
        j["mu1"] = k2a.mu1;
        j["mu2"] = k2a.mu2;
        j["value"] = fraction_json(mcb::k2_exact(k2a.n, k2a.mu1, k2a.mu2));
        emit(j);
        return 0;
      }
      if (k4->parsed()) {
        ordered_json j;
        j["command"] = "oracle k4";
        j["n"] = k4a.n;
        j["mu"] = {k4a.mu1, k4a.mu2, k4a.mu3, k4a.mu4};
        j["value"] = fraction_json(
            mcb::k4_exact(k4a.n, k4a.mu1, k4a.mu2, k4a.mu3, k4a.mu4));
        emit(j);
        return 0;
      }
      if (poisson->parsed()) {
        const auto [lhs, rhs] =
            mcb::poissonization_identity(poa.n, poa.mu, poa.t);
        ordered_json j;
        j["command"] = "oracle poisson";
        j["n"] = poa.n;
        j["mu"] = poa.mu;
        j["t"] = poa.t;
        j["lhs"] = fraction_json(lhs);
        j["rhs"] = fraction_json(rhs);
        j["equal"] = (lhs == rhs);
        emit(j);
        return 0;
      }
      auto run_moment = [&](const MomentArgs& a, bool second) {
        const mcb::MomentQuery q{a.n, a.m, a.zn};
        const mpq_class exact = second ? mcb::second_moment_exact(q)
                                       : mcb::first_moment_exact(q);
        ordered_json j;
        j["command"] = second ? "oracle moment2" : "oracle moment1";
        j["n"] = a.n;
        j["m"] = a.m;
        j["zn"] = a.zn;
        j["exact"] = fraction_json(exact);
        if (a.samples > 0) {
          const mcb::McMoment mc = second
                                       ? mcb::second_moment_mc(q, a.samples, a.seed)
                                       : mcb::first_moment_mc(q, a.samples, a.seed);
          j["mc"] = {{"samples", a.samples},
                     {"seed", a.seed},
                     {"mean", mc.mean},
                     {"std_error", mc.std_error}};
        }
        emit(j);
        return 0;
      };
      if (moment1->parsed()) return run_moment(m1a, false);
      if (moment2->parsed()) return run_moment(m2a, true);
    }

    if (simulate->parsed()) {
      const auto stats = mcb::empirical_x(sim.n, sim.c, sim.trials, sim.seed);
      ordered_json j;
      j["command"] = "simulate";
      j["n"] = sim.n;
      j["c"] = sim.c;
      j["m"] = static_cast<long long>(std::floor(sim.c * sim.n));
      j["trials"] = sim.trials;
      j["seed"] = sim.seed;
      j["mean_x"] = stats.mean;
      j["std_error"] = stats.std_error;
      emit(j);
      return 0;
    }

    if (cubic->parsed()) {
      const mcb::MultiGraph g = mcb::read_graph_file(cu.graph);
      std::vector<int> bset;
      if (cu.bruteforce) {
        bset = mcb::max_induced_bipartite_bruteforce(g);
      } else if (!cu.bipartite.empty()) {
        std::ifstream f(cu.bipartite);
        if (!f) {
          throw mcb::domain_error("cannot open bipartite set file: " + cu.bipartite);
        }
        int v = 0;
        while (f >> v) bset.push_back(v);
      } else {
        throw mcb::domain_error("cubic requires --bipartite FILE or --bruteforce");
      }
      const mcb::Cut cut = mcb::cubic_extend_coloring(g, bset, cu.seed);
      const int u = g.n - static_cast<int>(bset.size());
      ordered_json j;
      j["command"] = "cubic";
      j["n"] = g.n;
      j["m"] = g.m();
      j["bipartite_size"] = bset.size();
      j["uncolored"] = u;
      j["value"] = cut.value;
      j["lower_bound"] = 3 * g.n / 2 - u;
      j["seed"] = cu.seed;
      std::string side;
      for (auto s : cut.side) side.push_back(s ? '1' : '0');
      j["side"] = side;
      emit(j);
      return 0;
    }
  } catch (const mcb::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mcb::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const mcb::error& e) {
    ordered_json j;
    j["error"] = e.what();
    emit(j);
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
