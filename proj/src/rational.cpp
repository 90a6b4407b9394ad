#include <mcb/rational.hpp>

namespace mcb {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pair_count(unsigned long k) {
  if (k % 2 != 0) return 0;
  const unsigned long half = k / 2;
  mpz_class r = factorial(k) / factorial(half);
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, half);
  return r / pow2;
}

mpz_class upow(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

std::string fraction_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace mcb
