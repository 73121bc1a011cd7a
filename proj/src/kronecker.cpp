#include "logfrob/kronecker.hpp"

#include "logfrob/error.hpp"

namespace logfrob {

int kronecker(const mpz_class& a, const mpz_class& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long long a, long long n) {
    return kronecker(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(n)));
}

int kronecker_rational(const RationalNonzero& a, long long p) {
    if (p == 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        fail(errc::invalid_field, "kronecker_rational expects an odd prime");
    if (a.v(p) != 0) fail(errc::not_coprime, "rational is not a unit at " + std::to_string(p));
    int r = a.sign() < 0 ? kronecker(-1, p) : 1;
    for (const auto& [q, e] : a.factors()) {
        if (e % 2 != 0) r *= kronecker(q, p);
    }
    return r;
}

namespace {

// eps(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2 for odd u.
int eps_mod2(long long u) { return (((u - 1) / 2) % 2 + 2) % 2; }

int omega_mod2(long long u) {
    long long m = ((u % 8) + 8) % 8;
    return (m == 3 || m == 5) ? 1 : 0;
}

} // namespace

int hilbert2(const RationalNonzero& a, const RationalNonzero& b) {
    long long alpha = a.v(2), beta = b.v(2);
    // Odd parts only matter mod 8, and odd squares are 1 mod 8, so odd
    // exponents reduce mod 2.
    auto odd_part_mod8 = [](const RationalNonzero& x) -> long long {
        long long u = x.sign() < 0 ? 7 : 1;
        for (const auto& [q, e] : x.factors()) {
            if (q == 2) continue;
            if (e % 2 != 0) u = (u * (q % 8)) % 8;
        }
        return u;
    };
    long long u = odd_part_mod8(a), w = odd_part_mod8(b);
    int exp = (eps_mod2(u) * eps_mod2(w) + static_cast<int>(((alpha % 2) + 2) % 2) * omega_mod2(w) +
               static_cast<int>(((beta % 2) + 2) % 2) * omega_mod2(u)) %
              2;
    return exp == 0 ? 1 : -1;
}

int hilbert2(long long a, long long b) {
    return hilbert2(RationalNonzero::from_integer(a), RationalNonzero::from_integer(b));
}

} // namespace logfrob
