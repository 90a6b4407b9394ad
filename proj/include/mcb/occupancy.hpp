#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace mcb {

// Default ceiling on DP table cells for the exact occupancy counts.
inline constexpr std::uint64_t kOccupancyBudget = 100000000;

// Probability, over independent uniform drops of mu1 balls of kind A and
// mu2 of kind B into `bins` labeled bins, that every bin holds at least as
// many A balls as B balls. Exact rational with denominator bins^(mu1+mu2).
// Throws resource_error when the DP table bins*(mu1+1)*(mu2+1) exceeds
// the budget.
mpq_class k2_exact(int bins, int mu1, int mu2,
                   std::uint64_t budget = kOccupancyBudget);

// Four-kind variant: per bin, the counts must satisfy
//   t2 - t4 >= |t1 - t3|
// (kind 2 dominates the net imbalance of kinds 1 and 3 plus all of kind 4).
// Exact rational with denominator bins^(mu1+...+mu4).
mpq_class k4_exact(int bins, int mu1, int mu2, int mu3, int mu4,
                   std::uint64_t budget = kOccupancyBudget);

// Both sides of the multinomial / conditioned-Poisson identity for an
// explicit occupancy vector t (one entry per bin, summing to mu):
//   lhs = mu! / (prod t_i! * n^mu)          (multinomial mass)
//   rhs = [prod 1/t_i!] * mu! / n^mu        (unit-rate Poissons given sum)
// computed through the two groupings; they agree exactly.
std::pair<mpq_class, mpq_class> poissonization_identity(
    int n, int mu, const std::vector<int>& t);

// Both sides of the dominance-probability identity
//   k2_exact(n,mu1,mu2) * (mu1^mu1/mu1!) * (mu2^mu2/mu2!)
//     = e-free mass of n iid Poisson pairs with rates (mu1/n, mu2/n)
//       hitting totals (mu1, mu2) with per-bin dominance,
// the right side evaluated by its own rational DP over bins.
std::pair<mpq_class, mpq_class> two_poisson_identity(int n, int mu1, int mu2);

}  // namespace mcb
