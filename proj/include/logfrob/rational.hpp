#ifndef LOGFROB_RATIONAL_HPP
#define LOGFROB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "logfrob/ladic.hpp"

namespace logfrob {

// 64-bit factorization utilities (trial division + Pollard rho).
bool is_prime_u64(std::uint64_t n);
std::map<std::uint64_t, int> factor_u64(std::uint64_t n);

bool is_squarefree(long long n);
// Squarefree part of n (same sign as n); n must be nonzero.
long long squarefree_part(long long n);

// A nonzero rational in fully factored form: sign * prod p^e.
class RationalNonzero {
  public:
    static RationalNonzero one();
    static RationalNonzero from_integer(long long n);
    static RationalNonzero from_fraction(long long num, long long den);
    static RationalNonzero from_mpq(const mpq_class& q);
    // Accepts "A", "A/B", "-A/B".
    static RationalNonzero parse(std::string_view text);

    int sign() const { return sign_; }
    const std::map<long long, long long>& factors() const { return factors_; }

    long long v(long long p) const;
    bool is_unit_at(long long p) const { return v(p) == 0; }

    RationalNonzero times(const RationalNonzero& other) const;
    RationalNonzero inverse() const;

    mpq_class value() const;
    // Numerator * denominator with the l-part and sign removed, reduced
    // mod l^digits. This is the natural unit representative of a in Z_l^x
    // up to sign at l = 2 (where the sign is kept).
    mpz_class unit_residue(long ell, const mpz_class& modulus) const;

    std::string str() const;

  private:
    int sign_ = 1;
    std::map<long long, long long> factors_;
};

// a as an element of Q_p^x at the given precision: strips off p^{v_p(a)} and
// reduces the unit cofactor mod p^digits. The returned value has
// Precision(p, prec.digits, prec.guard).
LAdicNum from_rational(const RationalNonzero& a, long p, const Precision& prec);

} // namespace logfrob

#endif
