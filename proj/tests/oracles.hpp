#ifndef LOGFROB_TESTS_ORACLES_HPP
#define LOGFROB_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <vector>

// Slow reference implementations, independent of the library internals.
// Everything here works with exact rational arithmetic or textbook
// algorithms and is only meant for cross-checking.
namespace oracle {

// Iwasawa logarithm of a unit u (coprime to ell) mod ell^k, via exact
// rational partial sums of log(u^{ell-1})/(ell-1) (log(u^2)/2 for ell = 2).
mpz_class iwasawa_log(const mpz_class& u, long ell, int k);

// Same for a rational a = num/den with both parts units at ell.
mpz_class iwasawa_log_q(const mpz_class& num, const mpz_class& den, long ell, int k);

// v~_ell(a) = Log(a)/Log(1+ell) mod ell^k for a nonzero rational; the
// ell-part of a is discarded first.
mpz_class log_valuation_q(const mpq_class& a, long ell, int k);

// Textbook Kronecker symbol.
int kronecker(long long a, long long n);

// Multiplicative order of a modulo m.
long long mult_order(long long a, long long m);

std::vector<long long> primes_up_to(long long bound);

} // namespace oracle

#endif
