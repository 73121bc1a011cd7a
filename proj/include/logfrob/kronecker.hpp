#ifndef LOGFROB_KRONECKER_HPP
#define LOGFROB_KRONECKER_HPP

#include <gmpxx.h>

#include "logfrob/rational.hpp"

namespace logfrob {

// Kronecker symbol (a|n), defined for all integers n.
int kronecker(const mpz_class& a, const mpz_class& n);
int kronecker(long long a, long long n);

// Kronecker symbol (a|p) of a rational a that is a unit at the odd prime p:
// equals (num*den | p).
int kronecker_rational(const RationalNonzero& a, long long p);

// 2-adic Hilbert symbol (a,b)_2 for nonzero rationals, by the classical
// closed formula on 2-adic decompositions a = 2^alpha u, b = 2^beta w:
// (-1)^{eps(u)eps(w) + alpha*omega(w) + beta*omega(u)}.
int hilbert2(const RationalNonzero& a, const RationalNonzero& b);
int hilbert2(long long a, long long b);

} // namespace logfrob

#endif
