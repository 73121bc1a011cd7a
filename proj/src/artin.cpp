#include "logfrob/artin.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "logfrob/error.hpp"
#include "logfrob/kronecker.hpp"

namespace logfrob {

LogDivisor::LogDivisor(const Precision& prec_) : ell(prec_.ell), prec(prec_) {}

void LogDivisor::add(long long p, const LAdicInt& c) {
    if (c.ell() != ell) fail(errc::precision_mismatch, "coefficient carries a different prime");
    LAdicInt r = c.digits() > prec.digits ? c.reduced(prec.digits) : c;
    if (r.is_zero()) {
        coeffs.erase(p);
        return;
    }
    coeffs.insert_or_assign(p, r);
}

bool LogDivisor::supported_on_coprime_to(const LogConductor& cond) const {
    for (const auto& [p, c] : coeffs) {
        if (cond.contains(p)) return false;
    }
    return true;
}

std::string LogDivisor::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : coeffs) {
        if (!first) os << "*";
        first = false;
        os << p << "^";
        if (p == ell) {
            os << "(" << c.str() << ")";
        } else {
            // Away from ell the coefficients are ordinary integers; print
            // the symmetric representative.
            mpz_class r = c.residue();
            if (r > c.precision().modulus() / 2) r -= c.precision().modulus();
            os << r;
        }
    }
    return os.str();
}

LogDivisor LogDivisor::parse(std::string_view text, const Precision& prec) {
    LogDivisor d(prec);
    if (text.empty() || text == "0") return d;
    size_t start = 0;
    while (start <= text.size()) {
        size_t sep = text.find('*', start);
        std::string_view part =
            text.substr(start, sep == std::string_view::npos ? text.size() - start : sep - start);
        size_t caret = part.find('^');
        if (caret == std::string_view::npos || caret == 0 || caret + 1 >= part.size())
            fail(errc::parse_error, "divisor parts must look like p^e: " + std::string(part));
        auto parse_ll = [](std::string_view s) -> long long {
            long long v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size())
                fail(errc::parse_error, "malformed integer: " + std::string(s));
            return v;
        };
        long long p = parse_ll(part.substr(0, caret));
        long long e = parse_ll(part.substr(caret + 1));
        if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
            fail(errc::parse_error, "divisor support must consist of primes");
        LAdicInt prev = d.coeffs.count(p) ? d.coeffs.at(p) : LAdicInt(0, prec);
        d.add(p, prev + LAdicInt(mpz_class(static_cast<long>(e)), prec));
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return d;
}

LogDivisor log_divisor_of(const RationalNonzero& a, const Precision& prec) {
    LogDivisor d(prec);
    for (const auto& [p, e] : a.factors()) {
        if (p == prec.ell) continue;
        d.add(p, LAdicInt(mpz_class(static_cast<long>(e)), prec));
    }
    d.add(prec.ell, log_valuation_q(a, prec.ell, prec).value);
    return d;
}

GaloisElement GaloisElement::quad(int sign) {
    GaloisElement g;
    g.kind = Kind::quad_sign;
    g.sign = sign < 0 ? -1 : 1;
    return g;
}

GaloisElement GaloisElement::tower(long ell, int layer, const mpz_class& exponent) {
    GaloisElement g;
    g.kind = Kind::tower_exp;
    g.ell = ell;
    g.layer = layer;
    mpz_class m = pow_ui(ell, static_cast<unsigned long>(layer));
    mpz_mod(g.exponent.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
    return g;
}

bool GaloisElement::is_identity() const {
    return kind == Kind::quad_sign ? sign == 1 : exponent == 0;
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
    if (kind != other.kind) fail(errc::invalid_field, "elements of different groups");
    if (kind == Kind::quad_sign) return quad(sign * other.sign);
    if (ell != other.ell || layer != other.layer)
        fail(errc::invalid_field, "elements of different groups");
    return tower(ell, layer, exponent + other.exponent);
}

std::string GaloisElement::str() const {
    if (kind == Kind::quad_sign) return sign == 1 ? "+1" : "-1";
    std::ostringstream os;
    os << exponent << " mod " << ell << "^" << layer;
    return os.str();
}

GaloisElement log_frobenius(const FieldDescriptor& field, long long p) {
    IndexTuple idx = indices(field, p);
    if (idx.e_log > 1)
        fail(errc::frobenius_undefined,
             std::to_string(p) + " is logarithmically ramified in " + field.label());

    if (field.kind == FieldDescriptor::Kind::quadratic) {
        if (p != 2) return GaloisElement::quad(kronecker(field.d, p));
        long long m8 = ((field.d % 8) + 8) % 8;
        return GaloisElement::quad(m8 == 1 ? 1 : -1);
    }

    if (p == field.ell) return GaloisElement::tower(field.ell, field.layer, mpz_class(-1));
    Precision prec(field.ell, field.layer, 0);
    mpz_class t = log_valuation_q(RationalNonzero::from_integer(p), field.ell, prec).value.residue();
    return GaloisElement::tower(field.ell, field.layer, t);
}

GaloisElement artin_image(const FieldDescriptor& field, const LogDivisor& divisor) {
    long expected_ell = field.kind == FieldDescriptor::Kind::quadratic ? 2 : field.ell;
    if (divisor.ell != expected_ell)
        fail(errc::precision_mismatch, "divisor carries the wrong prime");
    LogConductor cond = global_conductor(field);
    if (!divisor.supported_on_coprime_to(cond))
        fail(errc::not_coprime, "divisor meets the conductor support");

    if (field.kind == FieldDescriptor::Kind::quadratic) {
        int sign = 1;
        for (const auto& [p, c] : divisor.coeffs) {
            GaloisElement frob = log_frobenius(field, p);
            if (frob.sign == -1 && mpz_odd_p(c.residue().get_mpz_t())) sign = -sign;
        }
        return GaloisElement::quad(sign);
    }

    if (divisor.prec.digits < field.layer)
        fail(errc::precision_loss, "divisor coefficients are too coarse for this layer");
    mpz_class acc = 0;
    for (const auto& [p, c] : divisor.coeffs) {
        GaloisElement frob = log_frobenius(field, p);
        acc += frob.exponent * c.residue();
    }
    return GaloisElement::tower(field.ell, field.layer, acc);
}

bool reciprocity_admissible(const FieldDescriptor& field, const RationalNonzero& a) {
    LogConductor cond = global_conductor(field);
    for (const auto& [p, e] : cond.exponents) {
        if (a.v(p) != 0) return false;
    }
    if (field.kind != FieldDescriptor::Kind::quadratic) return true;
    if (field.d < 0 && a.sign() < 0) return false;
    // a must be a local norm at every conductor prime: a square residue at
    // odd p, and (a, d)_2 = 1 at p = 2.
    for (const auto& [p, e] : cond.exponents) {
        if (p == 2) {
            if (hilbert2(a, RationalNonzero::from_integer(field.d)) != 1) return false;
        } else if (kronecker_rational(a, p) != 1) {
            return false;
        }
    }
    return true;
}

ReciprocityResult reciprocity_check(const FieldDescriptor& field, const RationalNonzero& a,
                                    const Precision& prec) {
    LogConductor cond = global_conductor(field);
    for (const auto& [p, e] : cond.exponents) {
        if (a.v(p) != 0)
            fail(errc::not_coprime, a.str() + " is not a unit at " + std::to_string(p));
    }
    bool ray_ok = reciprocity_admissible(field, a);

    long ell = field.kind == FieldDescriptor::Kind::quadratic ? 2 : field.ell;
    Precision dprec(ell, prec.digits, prec.guard);
    LogDivisor divisor = log_divisor_of(a, dprec);
    for (const auto& [p, e] : cond.exponents) divisor.coeffs.erase(p);

    GaloisElement image = artin_image(field, divisor);
    return ReciprocityResult{image.is_identity(), ray_ok, image, divisor};
}

} // namespace logfrob
