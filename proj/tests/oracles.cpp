#include "oracles.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace oracle {

namespace {

mpz_class pow_ell(long ell, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(e));
    return r;
}

long val_ell(const mpz_class& x, long ell) {
    assert(x != 0);
    mpz_class t = x;
    long v = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(ell))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(ell));
        ++v;
    }
    return v;
}

// Exact partial sums of log(1+z) in Q, stopping once every remaining term
// has ell-valuation at least k + 4. Result reduced mod ell^{k+4}.
mpz_class log_series_exact(const mpq_class& z, long ell, int k) {
    if (z == 0) return 0;
    long w = val_ell(mpq_class(z).get_num(), ell) - 0;
    assert(w >= 1);
    int target = k + 4;
    mpq_class sum = 0;
    mpq_class zn = 1;
    for (long n = 1; (n - 1) * w < target + 80; ++n) {
        zn *= z;
        mpq_class term = zn / mpq_class(n);
        if (n % 2 == 1)
            sum += term;
        else
            sum -= term;
        if (n * w >= target + 16) break;
    }
    // v_ell(sum) >= 1 > 0, so the canonical denominator is a unit at ell.
    mpz_class modulus = pow_ell(ell, target);
    mpz_class num = sum.get_num() % modulus;
    mpz_class den = sum.get_den() % modulus;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::logic_error("oracle series denominator not invertible");
    mpz_class r = (num * inv) % modulus;
    if (r < 0) r += modulus;
    return r;
}

// Log(u) mod ell^{k+2} for a unit u, via the torsion-killing power.
mpz_class log_unit(const mpz_class& u, long ell, int k) {
    int inner = k + 2;
    mpz_class power;
    unsigned long tw = ell == 2 ? 2 : static_cast<unsigned long>(ell - 1);
    mpz_pow_ui(power.get_mpz_t(), u.get_mpz_t(), tw);
    mpq_class z(power - 1);
    mpz_class big = log_series_exact(z, ell, inner);
    mpz_class modulus = pow_ell(ell, inner);
    if (ell == 2) {
        assert(mpz_even_p(big.get_mpz_t()));
        big /= 2;
    } else {
        mpz_class twz(static_cast<long>(ell - 1));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), twz.get_mpz_t(), modulus.get_mpz_t());
        big = (big * inv) % modulus;
    }
    mpz_class target = pow_ell(ell, k);
    mpz_class r = big % target;
    if (r < 0) r += target;
    return r;
}

} // namespace

mpz_class iwasawa_log(const mpz_class& u, long ell, int k) {
    mpz_class abs_u = u < 0 ? mpz_class(-u) : u;
    assert(abs_u != 0 && !mpz_divisible_ui_p(abs_u.get_mpz_t(), static_cast<unsigned long>(ell)));
    // Log kills roots of unity, so the sign never matters.
    return log_unit(abs_u, ell, k);
}

mpz_class iwasawa_log_q(const mpz_class& num, const mpz_class& den, long ell, int k) {
    mpz_class target = pow_ell(ell, k);
    mpz_class r = iwasawa_log(num, ell, k) - iwasawa_log(den, ell, k);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), target.get_mpz_t());
    return r;
}

mpz_class log_valuation_q(const mpq_class& a, long ell, int k) {
    assert(a != 0);
    int inner = k + 4;
    mpz_class num = a.get_num(), den = a.get_den();
    if (num < 0) num = -num;
    mpz_class shift = pow_ell(ell, 1);
    while (mpz_divisible_p(num.get_mpz_t(), shift.get_mpz_t()))
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), shift.get_mpz_t());
    while (mpz_divisible_p(den.get_mpz_t(), shift.get_mpz_t()))
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), shift.get_mpz_t());

    mpz_class la = iwasawa_log_q(num, den, ell, inner);
    mpz_class lp = iwasawa_log(mpz_class(ell + 1), ell, inner);
    int w0 = ell == 2 ? 2 : 1;
    mpz_class sh = pow_ell(ell, w0);
    assert(mpz_divisible_p(la.get_mpz_t(), sh.get_mpz_t()));
    assert(mpz_divisible_p(lp.get_mpz_t(), sh.get_mpz_t()));
    mpz_divexact(la.get_mpz_t(), la.get_mpz_t(), sh.get_mpz_t());
    mpz_divexact(lp.get_mpz_t(), lp.get_mpz_t(), sh.get_mpz_t());
    mpz_class modulus = pow_ell(ell, inner - w0);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), lp.get_mpz_t(), modulus.get_mpz_t());
    mpz_class t = (la * inv) % modulus;
    mpz_class target = pow_ell(ell, k);
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), target.get_mpz_t());
    return t;
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        long long m8 = ((a % 8) + 8) % 8;
        if (m8 == 3 || m8 == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m8 = n % 8;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

long long mult_order(long long a, long long m) {
    long long x = ((a % m) + m) % m;
    long long acc = x, order = 1;
    while (acc != 1) {
        acc = (acc * x) % m;
        ++order;
        if (order > m) throw std::logic_error("not a unit");
    }
    return order;
}

std::vector<long long> primes_up_to(long long bound) {
    std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
    std::vector<long long> out;
    for (long long i = 2; i <= bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

} // namespace oracle
