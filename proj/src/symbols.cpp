#include "logfrob/symbols.hpp"

#include <sstream>

#include "logfrob/error.hpp"
#include "logfrob/logvals.hpp"

namespace logfrob {

std::string SylowExponent::modulus_str() const {
    std::ostringstream os;
    os << ell << "^" << level;
    return os.str();
}

SylowExponent sylow_project(const mpz_class& u, long ell, int level) {
    if (level < 1) fail(errc::bad_precision, "level must be at least 1");
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(level));
    mpz_class raw;
    mpz_mod(raw.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_divisible_ui_p(raw.get_mpz_t(), ell))
        fail(errc::not_a_unit, "cannot project a non-unit");
    return SylowExponent{ell, level, raw, principal_residue(raw, ell, modulus, level)};
}

SylowExponent local_symbol(const RationalNonzero& a, const Place& place, long ell, int level) {
    if (level < 1) fail(errc::bad_precision, "level must be at least 1");
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(level));

    if (place.infinite) {
        // sgn(a) at the real place; trivial unless ell = 2.
        mpz_class raw = (ell == 2 && a.sign() < 0) ? mpz_class(modulus - 1) : mpz_class(1);
        return SylowExponent{ell, level, raw, principal_residue(raw, ell, modulus, level)};
    }

    long long p = place.p;
    if (p == ell) {
        // (1+l)^{-v~_l(a)}
        Precision prec(ell, level, 0);
        mpz_class t = log_valuation_q(a, p, prec).value.residue();
        mpz_class e = (-t) % modulus;
        if (e < 0) e += modulus;
        mpz_class base(ell + 1);
        mpz_class raw;
        mpz_powm(raw.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
        return SylowExponent{ell, level, raw, principal_residue(raw, ell, modulus, level)};
    }

    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        fail(errc::invalid_field, std::to_string(p) + " is not a prime");
    // p^{v_p(a)}
    mpz_class base(static_cast<long>(p));
    mpz_class e(static_cast<long>(a.v(p)));
    mpz_class raw;
    mpz_powm(raw.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return SylowExponent{ell, level, raw, principal_residue(raw, ell, modulus, level)};
}

ProductCheck product_formula_check(const RationalNonzero& a, long ell, int level) {
    if (level < 1) fail(errc::bad_precision, "level must be at least 1");
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(level));

    ProductCheck out{ell, level, mpz_class(1), false, {}};
    bool saw_ell = false;
    for (const auto& [p, e] : a.factors()) {
        out.terms.emplace_back(Place::finite(p), local_symbol(a, Place::finite(p), ell, level));
        if (p == ell) saw_ell = true;
    }
    if (!saw_ell)
        out.terms.emplace_back(Place::finite(ell), local_symbol(a, Place::finite(ell), ell, level));
    out.terms.emplace_back(Place::real(), local_symbol(a, Place::real(), ell, level));

    for (const auto& [place, term] : out.terms)
        out.residue = (out.residue * term.projected) % modulus;
    out.ok = out.residue == 1;
    return out;
}

} // namespace logfrob
