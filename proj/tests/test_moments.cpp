#include <doctest.h>

#include <mcb/errors.hpp>
#include <mcb/moments.hpp>
#include <mcb/rational.hpp>

#include "support/enum_oracles.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace {

// Swaps MCBOUNDS_WORKERS for the lifetime of one scope.
class WorkersOverride {
public:
  explicit WorkersOverride(const char* value) {
    if (const char* old = std::getenv("MCBOUNDS_WORKERS")) {
      saved_ = old;
      had_ = true;
    }
    setenv("MCBOUNDS_WORKERS", value, 1);
  }
  ~WorkersOverride() {
    if (had_) {
      setenv("MCBOUNDS_WORKERS", saved_.c_str(), 1);
    } else {
      unsetenv("MCBOUNDS_WORKERS");
    }
  }

private:
  std::string saved_;
  bool had_ = false;
};

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("first-moment formula matches endpoint enumeration") {
  struct Case {
    int n, m;
  };
  for (const auto& c : {Case{2, 1}, Case{2, 2}, Case{4, 2}, Case{4, 3}}) {
    const auto expected = testsupport::enum_first_moment(c.n, c.m);
    for (int zn = 0; zn <= c.m; ++zn) {
      CAPTURE(c.n);
      CAPTURE(c.m);
      CAPTURE(zn);
      CHECK(mcb::first_moment_exact({c.n, c.m, zn}) == expected[zn]);
    }
  }
}

TEST_CASE("second-moment formula matches endpoint enumeration") {
  struct Case {
    int n, m;
  };
  for (const auto& c : {Case{4, 2}, Case{4, 3}}) {
    const auto expected = testsupport::enum_second_moment(c.n, c.m);
    for (int zn = 0; zn <= c.m; ++zn) {
      CAPTURE(c.m);
      CAPTURE(zn);
      CHECK(mcb::second_moment_exact({c.n, c.m, zn}) == expected[zn]);
    }
  }
}

TEST_CASE("frozen first-moment values at n = m = 6") {
  CHECK(mcb::fraction_string(mcb::first_moment_exact({6, 6, 4})) ==
        "33100/19683");
  CHECK(mcb::fraction_string(mcb::first_moment_exact({6, 6, 5})) ==
        "90875/39366");
  CHECK(mcb::fraction_string(mcb::first_moment_exact({6, 6, 6})) ==
        "97295/177147");
  for (int zn = 0; zn <= 3; ++zn) {
    CHECK(mcb::first_moment_exact({6, 6, zn}) == 0);
  }
}

TEST_CASE("frozen first-moment values at n = m = 8") {
  const double expected[] = {0.027527628117240965, 1.4789960249327123,
                             4.7888029501773417, 3.1895804312080145,
                             0.5564858588622883};
  for (int zn = 4; zn <= 8; ++zn) {
    CHECK(mcb::first_moment_exact({8, 8, zn}).get_d() ==
          doctest::Approx(expected[zn - 4]).epsilon(1e-13));
  }
  CHECK(mcb::first_moment_exact({8, 8, 3}) == 0);
}

TEST_CASE("frozen second-moment values at n = m = 6") {
  const double expected[] = {4.4999174414469341, 5.1666412640349542,
                             0.790381716879202};
  for (int zn = 4; zn <= 6; ++zn) {
    CHECK(mcb::second_moment_exact({6, 6, zn}).get_d() ==
          doctest::Approx(expected[zn - 4]).epsilon(1e-13));
  }
  CHECK(mcb::second_moment_exact({6, 6, 3}) == 0);
}

TEST_CASE("second moment dominates the squared balanced mean") {
  struct Case {
    int n, m;
  };
  for (const auto& c : {Case{4, 2}, Case{4, 3}, Case{6, 6}}) {
    for (int zn = 0; zn <= c.m; ++zn) {
      const mpq_class bal = mcb::first_moment_exact_balanced({c.n, c.m, zn});
      CAPTURE(c.m);
      CAPTURE(zn);
      CHECK(mcb::second_moment_exact({c.n, c.m, zn}) >= bal * bal);
      // Balanced colorings are a subset of all colorings.
      CHECK(bal <= mcb::first_moment_exact({c.n, c.m, zn}));
    }
  }
  CHECK(mcb::fraction_string(mcb::first_moment_exact_balanced({6, 6, 6})) ==
        "5/16");
}

TEST_CASE("edgeless graphs count colorings exactly") {
  CHECK(mcb::first_moment_exact({2, 0, 0}) == 4);
  CHECK(mcb::first_moment_exact_balanced({2, 0, 0}) == 2);
  CHECK(mcb::second_moment_exact({2, 0, 0}) == 4);
  const auto mc = mcb::first_moment_mc({2, 0, 0}, 100, 5);
  CHECK(mc.mean == 4.0);
  CHECK(mc.std_error == 0.0);
}

TEST_CASE("crossing counts above m have zero mass") {
  CHECK(mcb::first_moment_exact({4, 3, 7}) == 0);
  CHECK(mcb::second_moment_exact({4, 3, 9}) == 0);
  const auto mc = mcb::first_moment_mc({4, 3, 7}, 50, 1);
  CHECK(mc.mean == 0.0);
  CHECK(mc.std_error == 0.0);
}

TEST_CASE("sampling estimates are deterministic in the seed") {
  const auto a = mcb::first_moment_mc({6, 6, 5}, 2000, 42);
  const auto b = mcb::first_moment_mc({6, 6, 5}, 2000, 42);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const auto c = mcb::first_moment_mc({6, 6, 5}, 2000, 43);
  CHECK(a.mean != c.mean);

  const auto s1 = mcb::second_moment_mc({6, 6, 5}, 500, 9);
  const auto s2 = mcb::second_moment_mc({6, 6, 5}, 500, 9);
  CHECK(s1.mean == s2.mean);
  CHECK(s1.std_error == s2.std_error);
}

TEST_CASE("sampling estimates do not depend on the worker count") {
  mcb::McMoment one, four;
  {
    WorkersOverride w("1");
    one = mcb::first_moment_mc({6, 6, 4}, 3000, 7);
  }
  {
    WorkersOverride w("4");
    four = mcb::first_moment_mc({6, 6, 4}, 3000, 7);
  }
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);
}

TEST_CASE("sampling agrees with the exact values within three sigma") {
  const int n = 4, m = 3;
  const auto fm_all = mcb::first_moment_mc_all(n, m, 20000, 123);
  for (int zn = 0; zn <= m; ++zn) {
    const double exact = mcb::first_moment_exact({n, m, zn}).get_d();
    CAPTURE(zn);
    CHECK(std::fabs(fm_all[zn].mean - exact) <=
          3.0 * fm_all[zn].std_error + 1e-12);
  }
  const auto sm_all = mcb::second_moment_mc_all(4, 2, 20000, 321);
  for (int zn = 0; zn <= 2; ++zn) {
    const double exact = mcb::second_moment_exact({4, 2, zn}).get_d();
    CAPTURE(zn);
    CHECK(std::fabs(sm_all[zn].mean - exact) <=
          3.0 * sm_all[zn].std_error + 1e-12);
  }
}

TEST_CASE("query validation and size limits") {
  CHECK_THROWS_AS(mcb::first_moment_exact({0, 1, 0}), mcb::domain_error);
  CHECK_THROWS_AS(mcb::first_moment_exact({4, -1, 0}), mcb::domain_error);
  CHECK_THROWS_AS(mcb::first_moment_exact({4, 1, -1}), mcb::domain_error);
  CHECK_THROWS_AS(mcb::first_moment_exact({13, 1, 0}), mcb::resource_error);
  CHECK_THROWS_AS(mcb::first_moment_exact({6, 13, 0}), mcb::resource_error);
  CHECK_THROWS_AS(mcb::first_moment_exact_balanced({5, 2, 1}),
                  mcb::domain_error);
  CHECK_THROWS_AS(mcb::second_moment_exact({5, 2, 1}), mcb::domain_error);
  CHECK_THROWS_AS(mcb::second_moment_exact({10, 4, 2}), mcb::resource_error);
  CHECK_THROWS_AS(mcb::second_moment_exact({6, 9, 2}), mcb::resource_error);
  CHECK_THROWS_AS(mcb::first_moment_mc({4, 2, 1}, 0, 1), mcb::domain_error);
  CHECK_THROWS_AS(mcb::first_moment_mc({17, 2, 1}, 10, 1),
                  mcb::resource_error);
  CHECK_THROWS_AS(mcb::second_moment_mc({10, 2, 1}, 10, 1),
                  mcb::resource_error);
  CHECK_THROWS_AS(mcb::second_moment_mc({6, 9, 1}, 10, 1),
                  mcb::resource_error);
  CHECK_THROWS_AS(mcb::second_moment_mc({5, 2, 1}, 10, 1), mcb::domain_error);
}

}  // TEST_SUITE
