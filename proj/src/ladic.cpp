#include "logfrob/ladic.hpp"

#include <cassert>
#include <sstream>

namespace logfrob {

namespace {

bool small_prime(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

// Largest j with ell^j <= n.
long floor_log(long ell, long n) {
    long j = 0;
    long long pw = ell;
    while (pw <= n) {
        pw *= ell;
        ++j;
    }
    return j;
}

} // namespace

mpz_class pow_ui(long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

int Precision::default_guard(long ell, int digits) {
    long lg = 0;
    long long pw = 1;
    while (pw < digits) {
        pw *= ell;
        ++lg;
    }
    int g = static_cast<int>(2 * lg + 1);
    if (g >= digits) g = digits - 1;
    return g;
}

Precision::Precision(long ell_, int digits_, int guard_)
    : ell(ell_), digits(digits_), guard(guard_) {
    if (!small_prime(ell)) fail(errc::bad_precision, "ell must be prime");
    if (digits < 1) fail(errc::bad_precision, "digits must be at least 1");
    if (guard == -1) guard = default_guard(ell, digits);
    if (guard < 0 || guard >= digits) fail(errc::bad_precision, "guard must lie in [0, digits)");
    modulus_ = pow_ui(ell, static_cast<unsigned long>(digits));
}

long residue_valuation(const mpz_class& r, long ell, long cap) {
    if (r == 0) return cap;
    mpz_class t = r;
    long v = 0;
    while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), ell)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), ell);
        ++v;
    }
    return v;
}

LAdicInt::LAdicInt(mpz_class value, Precision prec)
    : residue_(std::move(value)), prec_(std::move(prec)) {
    mpz_mod(residue_.get_mpz_t(), residue_.get_mpz_t(), prec_.modulus().get_mpz_t());
}

bool LAdicInt::is_unit() const {
    return !mpz_divisible_ui_p(residue_.get_mpz_t(), prec_.ell);
}

LAdicInt LAdicInt::reduced(int digits) const {
    if (digits > prec_.digits) fail(errc::bad_precision, "cannot extend stored precision");
    int guard = prec_.guard < digits ? prec_.guard : digits - 1;
    return LAdicInt(residue_, Precision(prec_.ell, digits, guard));
}

namespace {
void require_matching(const LAdicInt& a, const LAdicInt& b) {
    if (a.ell() != b.ell() || a.digits() != b.digits())
        fail(errc::precision_mismatch, "operands carry different precisions");
}
} // namespace

LAdicInt LAdicInt::operator+(const LAdicInt& other) const {
    require_matching(*this, other);
    return LAdicInt(residue_ + other.residue_, prec_);
}

LAdicInt LAdicInt::operator-(const LAdicInt& other) const {
    require_matching(*this, other);
    return LAdicInt(residue_ - other.residue_, prec_);
}

LAdicInt LAdicInt::operator*(const LAdicInt& other) const {
    require_matching(*this, other);
    return LAdicInt(residue_ * other.residue_, prec_);
}

LAdicInt LAdicInt::operator-() const { return LAdicInt(-residue_, prec_); }

LAdicInt LAdicInt::inverse() const {
    if (!is_unit()) fail(errc::not_a_unit, "residue " + str() + " is not invertible");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), residue_.get_mpz_t(), prec_.modulus().get_mpz_t());
    return LAdicInt(inv, prec_);
}

bool LAdicInt::congruent(const LAdicInt& other) const {
    if (ell() != other.ell()) fail(errc::precision_mismatch, "different primes");
    int k = digits() < other.digits() ? digits() : other.digits();
    mpz_class m = pow_ui(prec_.ell, static_cast<unsigned long>(k));
    return mpz_congruent_p(residue_.get_mpz_t(), other.residue_.get_mpz_t(), m.get_mpz_t()) != 0;
}

std::string LAdicInt::str() const {
    std::ostringstream os;
    os << residue_ << " mod " << prec_.ell << "^" << prec_.digits;
    return os.str();
}

LAdicNum::LAdicNum(long val_, LAdicInt unit_) : val(val_), unit(std::move(unit_)) {
    if (!unit.is_unit()) fail(errc::not_a_unit, "unit part " + unit.str() + " is divisible by ell");
}

LAdicNum LAdicNum::mul(const LAdicNum& other) const {
    return LAdicNum(val + other.val, unit * other.unit);
}

LAdicNum LAdicNum::inv() const { return LAdicNum(-val, unit.inverse()); }

std::string LAdicNum::str() const {
    std::ostringstream os;
    os << unit.ell() << "^" << val << " * (" << unit.str() << ")";
    return os.str();
}

mpz_class teichmuller_residue(const mpz_class& u, long ell, const mpz_class& modulus, int digits) {
    if (mpz_divisible_ui_p(u.get_mpz_t(), ell))
        fail(errc::not_a_unit, "no Teichmuller lift of a non-unit");
    if (ell == 2) {
        if (digits == 1) return 1;
        // Torsion in Z_2^x is {+-1}; the class of u is read off mod 4.
        return mpz_class(u % 4) == 1 ? mpz_class(1) : mpz_class(modulus - 1);
    }
    // Iterating x -> x^ell converges to the unique fixed point congruent to
    // u mod ell; each step gains at least one digit.
    mpz_class x = u % modulus;
    for (int i = 0; i <= digits + 1; ++i) {
        mpz_class next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ell),
                    modulus.get_mpz_t());
        if (next == x) return x;
        x = next;
    }
    assert(false && "Teichmuller iteration did not stabilize");
    return x;
}

mpz_class principal_residue(const mpz_class& u, long ell, const mpz_class& modulus, int digits) {
    mpz_class t = teichmuller_residue(u, ell, modulus, digits);
    mpz_class tinv;
    mpz_invert(tinv.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    mpz_class r = (u * tinv) % modulus;
    if (r < 0) r += modulus;
    return r;
}

LogSeries log_principal_series(const mpz_class& y, long ell, int digits) {
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(digits));
    mpz_class z = y - 1;
    mpz_mod(z.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
    if (z == 0) return {mpz_class(0), 0};

    long w = residue_valuation(z, ell, digits);
    long expected = ell == 2 ? 2 : 1;
    if (w < expected) fail(errc::not_principal, "log series needs a principal unit input");

    mpz_class acc = 0;
    mpz_class zn = z;
    long loss = 0;
    for (long n = 1;; ++n) {
        long t = 0;
        long nn = n;
        while (nn % ell == 0) {
            nn /= ell;
            ++t;
        }
        mpz_class term = zn;
        if (t > 0) {
            // zn is divisible by ell^t: its valuation is at least
            // min(n*w, digits) and n >= ell^t forces n*w > t.
            mpz_class d = pow_ui(ell, static_cast<unsigned long>(t));
            mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), d.get_mpz_t());
            if (t > loss) loss = t;
        }
        if (nn != 1) {
            mpz_class inv;
            mpz_class nnz(nn);
            mpz_invert(inv.get_mpz_t(), nnz.get_mpz_t(), modulus.get_mpz_t());
            term = (term * inv) % modulus;
        }
        if (n % 2 == 1)
            acc += term;
        else
            acc -= term;

        // All later terms have valuation m*w - v_ell(m) >= (n+1)w - log(n+1),
        // which is non-decreasing in m; stop once it clears the modulus.
        if ((n + 1) * w - floor_log(ell, n + 1) >= digits) break;
        zn = (zn * z) % modulus;
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), modulus.get_mpz_t());
    return {acc, loss};
}

int internal_pad(long ell, int digits) {
    int w0 = ell == 2 ? 2 : 1;
    return w0 + static_cast<int>(floor_log(ell, 2L * digits + 64)) + 4;
}

LAdicInt teichmuller(const LAdicInt& u) {
    return LAdicInt(teichmuller_residue(u.residue(), u.ell(), u.precision().modulus(), u.digits()),
                    u.precision());
}

LAdicInt principal_part(const LAdicInt& u) {
    return LAdicInt(principal_residue(u.residue(), u.ell(), u.precision().modulus(), u.digits()),
                    u.precision());
}

LAdicInt iwasawa_log(const LAdicNum& x, const Precision& out) {
    if (x.unit.ell() != out.ell) fail(errc::precision_mismatch, "input and output primes differ");
    const int source_digits = x.unit.digits();
    mpz_class y = principal_residue(x.unit.residue(), out.ell, x.unit.precision().modulus(),
                                    source_digits);
    LogSeries s = log_principal_series(y, out.ell, source_digits);
    long certified = source_digits - s.loss;
    if (certified < out.certified_digits())
        fail(errc::precision_loss,
             "log certified only " + std::to_string(certified) + " digits, need " +
                 std::to_string(out.certified_digits()));
    return LAdicInt(s.value, out);
}

LAdicInt pow_ladic(const LAdicInt& u, const mpz_class& t) {
    long ell = u.ell();
    bool principal = ell == 2 ? (u.digits() < 2 ? u.residue() == 1 : u.residue() % 4 == 1)
                              : u.residue() % ell == 1;
    if (!principal)
        fail(errc::not_principal, "l-adic exponents act on principal units only");
    mpz_class e;
    mpz_mod(e.get_mpz_t(), t.get_mpz_t(), u.precision().modulus().get_mpz_t());
    mpz_class r;
    mpz_powm(r.get_mpz_t(), u.residue().get_mpz_t(), e.get_mpz_t(),
             u.precision().modulus().get_mpz_t());
    return LAdicInt(r, u.precision());
}

LAdicInt pow_ladic(const LAdicInt& u, const LAdicInt& t) {
    if (t.ell() != u.ell()) fail(errc::precision_mismatch, "exponent carries a different prime");
    return pow_ladic(u, t.residue());
}

} // namespace logfrob
