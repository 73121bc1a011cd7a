#ifndef LOGFROB_SYMBOLS_HPP
#define LOGFROB_SYMBOLS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "logfrob/ladic.hpp"
#include "logfrob/rational.hpp"

namespace logfrob {

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite;
    long long p;

    static Place finite(long long p) { return Place{false, p}; }
    static Place real() { return Place{true, 0}; }

    std::string str() const { return infinite ? "inf" : std::to_string(p); }
};

// Image of a unit in the l-Sylow quotient (Z/l^m)^x -> principal units,
// at level m: `raw` is the input reduced mod l^m, `projected` its principal
// part (the l-Sylow component for l odd; torsion {+-1} is killed at l = 2).
struct SylowExponent {
    long ell;
    int level;
    mpz_class raw;
    mpz_class projected;

    std::string modulus_str() const;
};

SylowExponent sylow_project(const mpz_class& u, long ell, int level);

// The local logarithmic symbol of a at the place p, valued in the principal
// units of Z/l^m:
//   p finite, p != l : class of p^{v_p(a)},
//   p = l            : class of (1+l)^{-v~_l(a)},
//   p real           : class of sgn(a) (trivial unless l = 2).
SylowExponent local_symbol(const RationalNonzero& a, const Place& place, long ell, int level);

struct ProductCheck {
    long ell;
    int level;
    mpz_class residue;
    bool ok;
    std::vector<std::pair<Place, SylowExponent>> terms;
};

// Product over the support of a, the place l and the real place of the
// projected local symbols; reciprocity says the product is 1 mod l^m.
ProductCheck product_formula_check(const RationalNonzero& a, long ell, int level);

} // namespace logfrob

#endif
