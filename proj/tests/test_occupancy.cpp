#include <doctest.h>

#include <mcb/errors.hpp>
#include <mcb/occupancy.hpp>
#include <mcb/rational.hpp>

#include "support/enum_oracles.hpp"

#include <vector>

namespace {

// All length-n nonnegative vectors summing to mu.
void compositions(int n, int mu, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(mu);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= mu; ++v) {
    cur.push_back(v);
    compositions(n, mu - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_compositions(int n, int mu) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(n, mu, cur, out);
  return out;
}

}  // namespace

TEST_SUITE("occupancy") {

TEST_CASE("two-kind dominance: pinned and degenerate values") {
  CHECK(mcb::fraction_string(mcb::k2_exact(2, 2, 1)) == "3/4");
  CHECK(mcb::k2_exact(3, 4, 0) == 1);
  CHECK(mcb::k2_exact(1, 2, 3) == 0);
  CHECK(mcb::k2_exact(1, 3, 2) == 1);
  CHECK(mcb::k2_exact(0, 0, 0) == 1);
  CHECK(mcb::k2_exact(0, 1, 0) == 0);
}

TEST_CASE("two-kind dominance matches brute-force enumeration") {
  for (int bins = 1; bins <= 4; ++bins) {
    for (int mu1 = 0; mu1 <= 4; ++mu1) {
      for (int mu2 = 0; mu2 <= 4; ++mu2) {
        CAPTURE(bins);
        CAPTURE(mu1);
        CAPTURE(mu2);
        CHECK(mcb::k2_exact(bins, mu1, mu2) ==
              testsupport::enum_k2(bins, mu1, mu2));
      }
    }
  }
  CHECK(mcb::k2_exact(6, 3, 2) == testsupport::enum_k2(6, 3, 2));
  CHECK(mcb::k2_exact(5, 2, 4) == testsupport::enum_k2(5, 2, 4));
}

TEST_CASE("two-kind dominance probability is nonincreasing in mu2") {
  mpq_class prev = mcb::k2_exact(3, 3, 0);
  for (int mu2 = 1; mu2 <= 4; ++mu2) {
    const mpq_class cur = mcb::k2_exact(3, 3, mu2);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("four-kind dominance: pinned and degenerate values") {
  CHECK(mcb::fraction_string(mcb::k4_exact(2, 1, 2, 1, 0)) == "3/4");
  CHECK(mcb::k4_exact(4, 0, 3, 0, 0) == 1);
  CHECK(mcb::k4_exact(3, 0, 0, 0, 0) == 1);
  CHECK(mcb::k4_exact(0, 0, 0, 0, 0) == 1);
  CHECK(mcb::k4_exact(0, 0, 1, 0, 0) == 0);
  // One bin: everything lands together, so the constraint is just the totals.
  CHECK(mcb::k4_exact(1, 1, 2, 1, 0) == 1);
  CHECK(mcb::k4_exact(1, 2, 1, 0, 0) == 0);
  CHECK(mcb::k4_exact(1, 2, 3, 2, 1) == 1);
  CHECK(mcb::k4_exact(1, 0, 1, 0, 2) == 0);
}

TEST_CASE("four-kind dominance matches brute-force enumeration") {
  for (int bins = 1; bins <= 3; ++bins) {
    for (int mu1 = 0; mu1 <= 2; ++mu1) {
      for (int mu2 = 0; mu2 <= 2; ++mu2) {
        for (int mu3 = 0; mu3 <= 2; ++mu3) {
          for (int mu4 = 0; mu4 <= 2; ++mu4) {
            CAPTURE(bins);
            CAPTURE(mu1);
            CAPTURE(mu2);
            CAPTURE(mu3);
            CAPTURE(mu4);
            CHECK(mcb::k4_exact(bins, mu1, mu2, mu3, mu4) ==
                  testsupport::enum_k4(bins, mu1, mu2, mu3, mu4));
          }
        }
      }
    }
  }
  CHECK(mcb::k4_exact(4, 1, 3, 1, 1) == testsupport::enum_k4(4, 1, 3, 1, 1));
}

TEST_CASE("four-kind dominance is symmetric in the first and third kinds") {
  for (int bins : {2, 3}) {
    for (int mu1 = 0; mu1 <= 2; ++mu1) {
      for (int mu3 = 0; mu3 <= 2; ++mu3) {
        CHECK(mcb::k4_exact(bins, mu1, 3, mu3, 1) ==
              mcb::k4_exact(bins, mu3, 3, mu1, 1));
      }
    }
  }
}

TEST_CASE("table budgets are enforced") {
  CHECK_THROWS_AS(mcb::k2_exact(100000, 100, 100), mcb::resource_error);
  CHECK_THROWS_AS(mcb::k4_exact(1000, 20, 20, 20, 20), mcb::resource_error);
  // A generous explicit budget admits what the default admits.
  CHECK(mcb::k2_exact(2, 2, 1, 1000) == mpq_class(3, 4));
  CHECK_THROWS_AS(mcb::k2_exact(2, 2, 1, 10), mcb::resource_error);
}

TEST_CASE("negative arguments are rejected") {
  CHECK_THROWS_AS(mcb::k2_exact(-1, 0, 0), mcb::domain_error);
  CHECK_THROWS_AS(mcb::k2_exact(2, -1, 0), mcb::domain_error);
  CHECK_THROWS_AS(mcb::k4_exact(2, 0, -1, 0, 0), mcb::domain_error);
}

TEST_CASE("multinomial mass equals conditioned unit-rate Poissons") {
  const auto [l1, r1] = mcb::poissonization_identity(2, 2, {1, 1});
  CHECK(mcb::fraction_string(l1) == "1/2");
  CHECK(l1 == r1);
  const auto [l2, r2] = mcb::poissonization_identity(3, 1, {1, 0, 0});
  CHECK(mcb::fraction_string(l2) == "1/3");
  CHECK(l2 == r2);

  for (int n = 1; n <= 4; ++n) {
    for (int mu = 0; mu <= 6; ++mu) {
      mpq_class total = 0;
      for (const auto& t : all_compositions(n, mu)) {
        const auto [lhs, rhs] = mcb::poissonization_identity(n, mu, t);
        CHECK(lhs == rhs);
        total += lhs;
      }
      // The masses over all occupancy vectors form a distribution.
      CHECK(total == 1);
    }
  }
}

TEST_CASE("occupancy vector validation") {
  CHECK_THROWS_AS(mcb::poissonization_identity(2, 3, {1, 1}),
                  mcb::domain_error);
  CHECK_THROWS_AS(mcb::poissonization_identity(2, 2, {1, 1, 0}),
                  mcb::domain_error);
  CHECK_THROWS_AS(mcb::poissonization_identity(2, 2, {3, -1}),
                  mcb::domain_error);
  CHECK_THROWS_AS(mcb::poissonization_identity(0, 0, {}), mcb::domain_error);
}

TEST_CASE("dominance mass matches the independent two-Poisson computation") {
  for (int n = 1; n <= 8; ++n) {
    const auto [lhs, rhs] = mcb::two_poisson_identity(n, 2 * n, n);
    CAPTURE(n);
    CHECK(lhs == rhs);
    CHECK(lhs > 0);
  }
  const auto [l1, r1] = mcb::two_poisson_identity(3, 4, 2);
  CHECK(l1 == r1);
  const auto [l2, r2] = mcb::two_poisson_identity(4, 0, 0);
  CHECK(l2 == r2);
  const auto [l3, r3] = mcb::two_poisson_identity(2, 0, 3);
  CHECK(l3 == r3);
  CHECK(l3 == 0);
}

}  // TEST_SUITE
