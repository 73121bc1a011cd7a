#include "logfrob/rational.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "logfrob/error.hpp"

namespace logfrob {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

namespace {

// Pollard rho (Brent variant) on a composite with no small factors.
std::uint64_t rho_factor(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d.get_ui();
    }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = rho_factor(mpz_class(static_cast<unsigned long>(n)));
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<std::uint64_t, int> factor_u64(std::uint64_t n) {
    if (n == 0) fail(errc::factorization_failed, "cannot factor zero");
    std::map<std::uint64_t, int> out;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % q == 0) {
            ++out[q];
            n /= q;
        }
    }
    for (std::uint64_t q = 17; q * q <= n && q < 100000; q += 2) {
        while (n % q == 0) {
            ++out[q];
            n /= q;
        }
    }
    factor_into(n, out);
    return out;
}

bool is_squarefree(long long n) {
    if (n == 0) return false;
    auto f = factor_u64(static_cast<std::uint64_t>(n < 0 ? -n : n));
    return std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
}

long long squarefree_part(long long n) {
    if (n == 0) fail(errc::invalid_field, "zero has no squarefree part");
    long long sign = n < 0 ? -1 : 1;
    auto f = factor_u64(static_cast<std::uint64_t>(n < 0 ? -n : n));
    long long r = 1;
    for (const auto& [p, e] : f) {
        if (e % 2 == 1) r *= static_cast<long long>(p);
    }
    return sign * r;
}

RationalNonzero RationalNonzero::one() { return RationalNonzero(); }

RationalNonzero RationalNonzero::from_integer(long long n) { return from_fraction(n, 1); }

RationalNonzero RationalNonzero::from_fraction(long long num, long long den) {
    if (num == 0) fail(errc::parse_error, "zero is not an element of Q^x");
    if (den == 0) fail(errc::parse_error, "denominator must be nonzero");
    RationalNonzero r;
    r.sign_ = (num < 0) == (den < 0) ? 1 : -1;
    for (const auto& [p, e] : factor_u64(static_cast<std::uint64_t>(num < 0 ? -num : num)))
        r.factors_[static_cast<long long>(p)] += e;
    for (const auto& [p, e] : factor_u64(static_cast<std::uint64_t>(den < 0 ? -den : den))) {
        auto it = r.factors_.find(static_cast<long long>(p));
        long long v = (it == r.factors_.end() ? 0 : it->second) - e;
        if (v == 0)
            r.factors_.erase(static_cast<long long>(p));
        else
            r.factors_[static_cast<long long>(p)] = v;
    }
    return r;
}

RationalNonzero RationalNonzero::from_mpq(const mpq_class& q) {
    if (q == 0) fail(errc::parse_error, "zero is not an element of Q^x");
    mpz_class num = q.get_num(), den = q.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        fail(errc::factorization_failed, "rational too large to factor");
    return from_fraction(num.get_si(), den.get_si());
}

RationalNonzero RationalNonzero::parse(std::string_view text) {
    auto parse_ll = [](std::string_view s) -> long long {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            fail(errc::parse_error, "malformed rational: " + std::string(s));
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_integer(parse_ll(text));
    return from_fraction(parse_ll(text.substr(0, slash)), parse_ll(text.substr(slash + 1)));
}

long long RationalNonzero::v(long long p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

RationalNonzero RationalNonzero::times(const RationalNonzero& other) const {
    RationalNonzero r;
    r.sign_ = sign_ * other.sign_;
    r.factors_ = factors_;
    for (const auto& [p, e] : other.factors_) {
        long long v = r.factors_[p] + e;
        if (v == 0)
            r.factors_.erase(p);
        else
            r.factors_[p] = v;
    }
    return r;
}

RationalNonzero RationalNonzero::inverse() const {
    RationalNonzero r;
    r.sign_ = sign_;
    for (const auto& [p, e] : factors_) r.factors_[p] = -e;
    return r;
}

mpq_class RationalNonzero::value() const {
    mpq_class q(sign_, 1);
    for (const auto& [p, e] : factors_) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e < 0 ? -e : e));
        if (e > 0)
            q *= mpq_class(pw);
        else
            q /= mpq_class(pw);
    }
    q.canonicalize();
    return q;
}

mpz_class RationalNonzero::unit_residue(long ell, const mpz_class& modulus) const {
    mpz_class r = sign_ < 0 ? mpz_class(modulus - 1) : mpz_class(1);
    for (const auto& [p, e] : factors_) {
        if (p == ell) continue;
        mpz_class base(static_cast<long>(p));
        mpz_class ez(static_cast<long>(e));
        mpz_class pw;
        mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), ez.get_mpz_t(), modulus.get_mpz_t());
        r = (r * pw) % modulus;
    }
    return r;
}

std::string RationalNonzero::str() const {
    mpq_class q = value();
    std::ostringstream os;
    os << q;
    return os.str();
}

LAdicNum from_rational(const RationalNonzero& a, long p, const Precision& prec) {
    Precision local(p, prec.digits, prec.guard);
    long long vp = a.v(p);
    mpz_class unit = a.unit_residue(p, local.modulus());
    return LAdicNum(static_cast<long>(vp), LAdicInt(unit, local));
}

} // namespace logfrob
