#include <mcb/occupancy.hpp>

#include <mcb/errors.hpp>
#include <mcb/rational.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace mcb {

namespace {

void check_count(long long v, const char* name) {
  if (v < 0) {
    std::ostringstream os;
    os << name << " must be nonnegative, got " << v;
    throw domain_error(os.str());
  }
}

// Table cell budget check; factors multiply in 128 bits with early cutoff.
void check_budget(std::uint64_t budget, std::initializer_list<long long> dims) {
  unsigned __int128 cells = 1;
  for (long long d : dims) {
    cells *= static_cast<unsigned __int128>(d);
    if (cells > budget) {
      std::ostringstream os;
      os << "occupancy table would need more than " << budget << " cells";
      throw resource_error(os.str());
    }
  }
}

// The deque keeps references to already-built rows stable while new rows
// are appended (callers hold several rows across appends).
const std::vector<mpz_class>& pascal_row(int n) {
  thread_local std::deque<std::vector<mpz_class>> rows;
  while (static_cast<int>(rows.size()) <= n) {
    const int r = static_cast<int>(rows.size());
    std::vector<mpz_class> row(static_cast<size_t>(r) + 1);
    row[0] = 1;
    for (int k = 1; k <= r; ++k) {
      row[static_cast<size_t>(k)] = rows.back()[static_cast<size_t>(k - 1)];
      if (k < r) row[static_cast<size_t>(k)] += rows.back()[static_cast<size_t>(k)];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<size_t>(n)];
}

// Counts of four-kind placements into k bins with every bin satisfying
// t2 - t4 >= |t1 - t3|, resolved layer by layer. States are shared across
// calls through a thread-local memo when they fit the packed key.
class K4Counter {
 public:
  mpz_class count(int bins, std::array<int, 4> mu) {
    const bool memoizable =
        bins <= 255 && std::all_of(mu.begin(), mu.end(),
                                   [](int m) { return m <= 4095; });
    if (!memoizable) return count_rolling(bins, mu);
    // Fill every layer over the down-set of mu; entries surviving from
    // earlier calls are reused as-is.
    ensure_down_set(bins, mu);
    return memo_.at(key(bins, mu));
  }

 private:
  static std::uint64_t key(int k, const std::array<int, 4>& r) {
    return (static_cast<std::uint64_t>(k) << 48) |
           (static_cast<std::uint64_t>(r[0]) << 36) |
           (static_cast<std::uint64_t>(r[1]) << 24) |
           (static_cast<std::uint64_t>(r[2]) << 12) |
           static_cast<std::uint64_t>(r[3]);
  }

  // One-bin transition: sum over admissible in-bin counts t <= r.
  template <typename Prev>
  mpz_class combine(const std::array<int, 4>& r, Prev&& prev) const {
    mpz_class total = 0;
    mpz_class w;
    const auto& c1 = pascal_row(r[0]);
    const auto& c2 = pascal_row(r[1]);
    const auto& c3 = pascal_row(r[2]);
    const auto& c4 = pascal_row(r[3]);
    for (int t1 = 0; t1 <= r[0]; ++t1) {
      for (int t3 = 0; t3 <= r[2]; ++t3) {
        const int imb = std::abs(t1 - t3);
        for (int t2 = imb; t2 <= r[1]; ++t2) {
          const int t4_max = std::min(r[3], t2 - imb);
          for (int t4 = 0; t4 <= t4_max; ++t4) {
            const mpz_class* p = prev({r[0] - t1, r[1] - t2, r[2] - t3, r[3] - t4});
            if (p == nullptr || *p == 0) continue;
            w = c1[static_cast<size_t>(t1)] * c2[static_cast<size_t>(t2)];
            w *= c3[static_cast<size_t>(t3)];
            w *= c4[static_cast<size_t>(t4)];
            total += w * *p;
          }
        }
      }
    }
    return total;
  }

  void ensure_down_set(int bins, const std::array<int, 4>& cap) {
    for (int k = 1; k <= bins; ++k) {
      for_down_set(cap, [&](const std::array<int, 4>& r) {
        if (memo_.find(key(k, r)) == memo_.end()) compute(k, r);
      });
    }
  }

  void compute(int k, const std::array<int, 4>& r) {
    const std::uint64_t id = key(k, r);
    if (memo_.find(id) != memo_.end()) return;
    mpz_class value;
    if (k == 1) {
      value = combine(r, [](const std::array<int, 4>& rest) -> const mpz_class* {
        static const mpz_class one = 1;
        const bool zero = rest[0] == 0 && rest[1] == 0 && rest[2] == 0 && rest[3] == 0;
        return zero ? &one : nullptr;
      });
    } else {
      value = combine(r, [&](const std::array<int, 4>& rest) -> const mpz_class* {
        auto it = memo_.find(key(k - 1, rest));
        return it == memo_.end() ? nullptr : &it->second;
      });
    }
    memo_.emplace(id, std::move(value));
  }

  template <typename Body>
  static void for_down_set(const std::array<int, 4>& cap, Body&& body) {
    std::array<int, 4> r{};
    for (r[0] = 0; r[0] <= cap[0]; ++r[0])
      for (r[1] = 0; r[1] <= cap[1]; ++r[1])
        for (r[2] = 0; r[2] <= cap[2]; ++r[2])
          for (r[3] = 0; r[3] <= cap[3]; ++r[3]) body(r);
  }

  // Fallback without memoization for arguments outside the packed-key range.
  mpz_class count_rolling(int bins, const std::array<int, 4>& mu) {
    const size_t n1 = static_cast<size_t>(mu[0]) + 1, n2 = static_cast<size_t>(mu[1]) + 1,
                 n3 = static_cast<size_t>(mu[2]) + 1, n4 = static_cast<size_t>(mu[3]) + 1;
    auto at = [&](std::vector<mpz_class>& v, const std::array<int, 4>& r) -> mpz_class& {
      return v[((static_cast<size_t>(r[0]) * n2 + static_cast<size_t>(r[1])) * n3 +
                static_cast<size_t>(r[2])) * n4 + static_cast<size_t>(r[3])];
    };
    std::vector<mpz_class> cur(n1 * n2 * n3 * n4), nxt(cur.size());
    at(cur, {0, 0, 0, 0}) = 1;
    for (int k = 0; k < bins; ++k) {
      for (auto& v : nxt) v = 0;
      for_down_set(mu, [&](const std::array<int, 4>& r) {
        at(nxt, r) = combine(r, [&](const std::array<int, 4>& rest) {
          return &at(cur, rest);
        });
      });
      cur.swap(nxt);
    }
    return at(cur, mu);
  }

  std::unordered_map<std::uint64_t, mpz_class> memo_;
};

}  // namespace

mpq_class k2_exact(int bins, int mu1, int mu2, std::uint64_t budget) {
  check_count(bins, "bins");
  check_count(mu1, "mu1");
  check_count(mu2, "mu2");
  if (bins == 0) return (mu1 == 0 && mu2 == 0) ? 1 : 0;
  check_budget(budget, {bins, mu1 + 1LL, mu2 + 1LL});

  const size_t w = static_cast<size_t>(mu2) + 1;
  auto at = [&](std::vector<mpz_class>& v, int a, int b) -> mpz_class& {
    return v[static_cast<size_t>(a) * w + static_cast<size_t>(b)];
  };
  std::vector<mpz_class> cur((static_cast<size_t>(mu1) + 1) * w), nxt(cur.size());
  at(cur, 0, 0) = 1;
  mpz_class weight;
  for (int k = 0; k < bins; ++k) {
    for (auto& v : nxt) v = 0;
    for (int a = 0; a <= mu1; ++a) {
      const auto& ca = pascal_row(a);
      for (int b = 0; b <= mu2; ++b) {
        const auto& cb = pascal_row(b);
        mpz_class& out = at(nxt, a, b);
        for (int t = 0; t <= a; ++t) {
          const int s_max = std::min(t, b);
          for (int s = 0; s <= s_max; ++s) {
            const mpz_class& p = at(cur, a - t, b - s);
            if (p == 0) continue;
            weight = ca[static_cast<size_t>(t)] * cb[static_cast<size_t>(s)];
            out += weight * p;
          }
        }
      }
    }
    cur.swap(nxt);
  }
  mpq_class result(at(cur, mu1, mu2),
                   upow(static_cast<unsigned long>(bins),
                        static_cast<unsigned long>(mu1 + mu2)));
  result.canonicalize();
  return result;
}

mpq_class k4_exact(int bins, int mu1, int mu2, int mu3, int mu4,
                   std::uint64_t budget) {
  check_count(bins, "bins");
  check_count(mu1, "mu1");
  check_count(mu2, "mu2");
  check_count(mu3, "mu3");
  check_count(mu4, "mu4");
  const long long total = static_cast<long long>(mu1) + mu2 + mu3 + mu4;
  if (bins == 0) return total == 0 ? 1 : 0;
  if (total == 0) return 1;
  check_budget(budget, {bins, mu1 + 1LL, mu2 + 1LL, mu3 + 1LL, mu4 + 1LL});

  thread_local K4Counter counter;
  mpq_class result(counter.count(bins, {mu1, mu2, mu3, mu4}),
                   upow(static_cast<unsigned long>(bins),
                        static_cast<unsigned long>(total)));
  result.canonicalize();
  return result;
}

std::pair<mpq_class, mpq_class> poissonization_identity(
    int n, int mu, const std::vector<int>& t) {
  if (n < 1) throw domain_error("n must be at least 1");
  check_count(mu, "mu");
  if (static_cast<int>(t.size()) != n) {
    throw domain_error("occupancy vector must have one entry per bin");
  }
  long long sum = 0;
  for (int v : t) {
    check_count(v, "occupancy entry");
    sum += v;
  }
  if (sum != mu) {
    std::ostringstream os;
    os << "occupancy entries sum to " << sum << ", expected mu = " << mu;
    throw domain_error(os.str());
  }

  const mpz_class n_pow = upow(static_cast<unsigned long>(n),
                               static_cast<unsigned long>(mu));
  mpz_class denom = n_pow;
  for (int v : t) denom *= factorial(static_cast<unsigned long>(v));
  mpq_class lhs(factorial(static_cast<unsigned long>(mu)), denom);
  lhs.canonicalize();

  mpq_class rhs = 1;
  for (int v : t) {
    rhs *= mpq_class(1, factorial(static_cast<unsigned long>(v)));
  }
  rhs *= mpq_class(factorial(static_cast<unsigned long>(mu)), n_pow);
  rhs.canonicalize();
  return {lhs, rhs};
}

std::pair<mpq_class, mpq_class> two_poisson_identity(int n, int mu1, int mu2) {
  if (n < 1) throw domain_error("n must be at least 1");
  check_count(mu1, "mu1");
  check_count(mu2, "mu2");
  check_budget(kOccupancyBudget, {n, mu1 + 1LL, mu2 + 1LL});

  mpq_class lhs = k2_exact(n, mu1, mu2);
  lhs *= mpq_class(upow(static_cast<unsigned long>(mu1),
                        static_cast<unsigned long>(mu1)),
                   factorial(static_cast<unsigned long>(mu1)));
  lhs *= mpq_class(upow(static_cast<unsigned long>(mu2),
                        static_cast<unsigned long>(mu2)),
                   factorial(static_cast<unsigned long>(mu2)));
  lhs.canonicalize();

  // Per-bin factors lambda^j / j! for the two independent Poisson streams.
  const mpq_class l1(mu1, n), l2(mu2, n);
  std::vector<mpq_class> f1(static_cast<size_t>(mu1) + 1),
      f2(static_cast<size_t>(mu2) + 1);
  f1[0] = 1;
  for (int j = 1; j <= mu1; ++j) f1[static_cast<size_t>(j)] = f1[static_cast<size_t>(j - 1)] * l1 / j;
  f2[0] = 1;
  for (int j = 1; j <= mu2; ++j) f2[static_cast<size_t>(j)] = f2[static_cast<size_t>(j - 1)] * l2 / j;

  const size_t w = static_cast<size_t>(mu2) + 1;
  auto at = [&](std::vector<mpq_class>& v, int a, int b) -> mpq_class& {
    return v[static_cast<size_t>(a) * w + static_cast<size_t>(b)];
  };
  std::vector<mpq_class> cur((static_cast<size_t>(mu1) + 1) * w), nxt(cur.size());
  at(cur, 0, 0) = 1;
  for (int k = 0; k < n; ++k) {
    for (auto& v : nxt) v = 0;
    for (int a = 0; a <= mu1; ++a) {
      for (int b = 0; b <= mu2; ++b) {
        mpq_class& out = at(nxt, a, b);
        for (int t = 0; t <= a; ++t) {
          const int s_max = std::min(t, b);
          for (int s = 0; s <= s_max; ++s) {
            const mpq_class& p = at(cur, a - t, b - s);
            if (p == 0) continue;
            out += f1[static_cast<size_t>(t)] * f2[static_cast<size_t>(s)] * p;
          }
        }
      }
    }
    cur.swap(nxt);
  }
  mpq_class rhs = at(cur, mu1, mu2);
  rhs.canonicalize();
  return {lhs, rhs};
}

}  // namespace mcb
