#ifndef LOGFROB_ARTIN_HPP
#define LOGFROB_ARTIN_HPP

#include <map>
#include <optional>
#include <string>

#include "logfrob/fields.hpp"
#include "logfrob/logvals.hpp"

namespace logfrob {

// A logarithmic divisor: finite support, coefficient at p != l an integer,
// coefficient at l an l-adic integer (the logarithmic valuation).
struct LogDivisor {
    long ell;
    Precision prec;
    std::map<long long, LAdicInt> coeffs;

    explicit LogDivisor(const Precision& prec);

    void add(long long p, const LAdicInt& c);
    bool supported_on_coprime_to(const LogConductor& cond) const;
    // "7^1*13^2"; the coefficient at l prints as a residue.
    std::string str() const;

    static LogDivisor parse(std::string_view text, const Precision& prec);
};

// div~(a): v_p(a) at each finite p != l in the support, v~_l(a) at l.
LogDivisor log_divisor_of(const RationalNonzero& a, const Precision& prec);

// An element of the Galois group of a supported field: a sign for quadratic
// fields, an exponent mod l^layer for tower layers.
struct GaloisElement {
    enum class Kind { quad_sign, tower_exp };

    Kind kind;
    int sign = 1;          // quad_sign
    long ell = 0;          // tower_exp
    int layer = 0;         // tower_exp
    mpz_class exponent;    // tower_exp, in [0, l^layer)

    static GaloisElement quad(int sign);
    static GaloisElement tower(long ell, int layer, const mpz_class& exponent);

    bool is_identity() const;
    GaloisElement compose(const GaloisElement& other) const;
    std::string str() const;
};

// Action of the logarithmic Frobenius of p = 2 in Q_2(sqrt 2) on zeta_8,
// as the standard representative of the coset {3,5} = {+-3} in (Z/8)^x.
inline constexpr int kZeta8FrobeniusExponent = 3;

// The logarithmic Frobenius at p. Throws FrobeniusUndefined when p is
// logarithmically ramified (quadratic: p | d odd, d = 3 mod 4 at p = 2,
// or d = 5 mod 8 at p = 2).
GaloisElement log_frobenius(const FieldDescriptor& field, long long p);

// Multiplicative extension of log_frobenius to divisors coprime to the
// logarithmic conductor. Throws NotCoprime otherwise.
GaloisElement artin_image(const FieldDescriptor& field, const LogDivisor& divisor);

struct ReciprocityResult {
    bool ok;
    bool ray_ok;
    GaloisElement image;
    LogDivisor divisor;
};

// Is a admissible for the reciprocity statement: a unit at every conductor
// prime, a local norm there (Kronecker square test at odd conductor primes,
// 2-adic Hilbert symbol (a,d)_2 = 1 when 2 divides the conductor), and
// positive when the field is imaginary quadratic.
bool reciprocity_admissible(const FieldDescriptor& field, const RationalNonzero& a);

// Checks that the Artin image of div~(a), restricted away from the
// conductor support, is the identity. Throws NotCoprime when a is not a
// unit at a conductor prime.
ReciprocityResult reciprocity_check(const FieldDescriptor& field, const RationalNonzero& a,
                                    const Precision& prec);

} // namespace logfrob

#endif
