#pragma once

#include <gmpxx.h>

#include <string>

namespace mcb {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

// Number of perfect matchings of k labeled points: k! / ((k/2)! 2^{k/2})
// for even k, 0 for odd k.
mpz_class pair_count(unsigned long k);

// base^exp as an exact integer, with 0^0 = 1.
mpz_class upow(unsigned long base, unsigned long exp);

// Canonical "p/q" form; integers render without the "/q" part.
std::string fraction_string(const mpq_class& q);

}  // namespace mcb
