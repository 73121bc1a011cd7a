#include "logfrob/logvals.hpp"

#include <sstream>

#include "logfrob/error.hpp"
#include "logfrob/kronecker.hpp"

namespace logfrob {

namespace {

// Log_Iw(a) as an exact residue mod ell^digits. The series runs at a padded
// modulus so that division losses stay above the returned digits.
mpz_class exact_log(const RationalNonzero& a, long ell, int digits) {
    int wide = digits + internal_pad(ell, digits);
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(wide));
    mpz_class u = a.unit_residue(ell, modulus);
    mpz_class y = principal_residue(u, ell, modulus, wide);
    LogSeries s = log_principal_series(y, ell, wide);
    mpz_class out;
    mpz_class target = pow_ui(ell, static_cast<unsigned long>(digits));
    mpz_mod(out.get_mpz_t(), s.value.get_mpz_t(), target.get_mpz_t());
    return out;
}

// Log_Iw(a) / Log_Iw(1+ell) as an exact residue mod ell^digits.
mpz_class exact_log_valuation(const RationalNonzero& a, long ell, int digits) {
    int w0 = ell == 2 ? 2 : 1;
    int wide = digits + w0 + internal_pad(ell, digits + w0);
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(wide));

    mpz_class num_y = principal_residue(a.unit_residue(ell, modulus), ell, modulus, wide);
    mpz_class num = log_principal_series(num_y, ell, wide).value;

    RationalNonzero pivot = RationalNonzero::from_integer(ell + 1);
    mpz_class den_y = principal_residue(pivot.unit_residue(ell, modulus), ell, modulus, wide);
    mpz_class den = log_principal_series(den_y, ell, wide).value;

    mpz_class shift = pow_ui(ell, static_cast<unsigned long>(w0));
    if (!mpz_divisible_p(num.get_mpz_t(), shift.get_mpz_t()) ||
        !mpz_divisible_p(den.get_mpz_t(), shift.get_mpz_t()))
        fail(errc::not_principal, "logarithm landed outside the expected lattice");
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), shift.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), shift.get_mpz_t());

    mpz_class small = pow_ui(ell, static_cast<unsigned long>(wide - w0));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), small.get_mpz_t());
    mpz_class t = (num * inv) % small;

    mpz_class target = pow_ui(ell, static_cast<unsigned long>(digits));
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), target.get_mpz_t());
    return t;
}

void require_prime(long long p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        fail(errc::invalid_field, std::to_string(p) + " is not a prime");
}

} // namespace

DegreeValue deg_ell(long long p, const Precision& prec) {
    require_prime(p);
    RationalNonzero base = p == prec.ell ? RationalNonzero::from_integer(prec.ell + 1)
                                         : RationalNonzero::from_integer(p);
    return DegreeValue{LAdicInt(exact_log(base, prec.ell, prec.digits), prec)};
}

std::string LogValuation::str() const {
    if (integral) return std::to_string(*integral);
    return value.str();
}

LogValuation log_valuation_q(const RationalNonzero& a, long long p, const Precision& prec) {
    require_prime(p);
    if (p != prec.ell) {
        long long vp = a.v(p);
        return LogValuation{LAdicInt(mpz_class(static_cast<long>(vp)), prec), vp};
    }
    return LogValuation{LAdicInt(exact_log_valuation(a, prec.ell, prec.digits), prec),
                        std::nullopt};
}

QuadLocalElement::QuadLocalElement(mpq_class a_, mpq_class b_, long long d_)
    : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        fail(errc::invalid_field, "radicand must be squarefree and not 0 or 1");
}

std::string QuadLocalElement::str() const {
    std::ostringstream os;
    os << a << " + " << b << "*sqrt(" << d << ")";
    return os.str();
}

RationalNonzero norm_quad(const QuadLocalElement& x) {
    mpq_class n = x.a * x.a - mpq_class(static_cast<long>(x.d)) * x.b * x.b;
    if (n == 0) fail(errc::zero_norm, "element has norm zero");
    return RationalNonzero::from_mpq(n);
}

namespace {

IndexTuple indices_quadratic(long long d, long long p) {
    if (p == 2) {
        long long m8 = ((d % 8) + 8) % 8;
        long long m16 = ((d % 16) + 16) % 16;
        if (m8 == 1) return {1, 1, 1, 1};
        if (m8 == 5) return {1, 2, 2, 1};
        if (m16 == 2) return {2, 1, 1, 2};
        return {2, 1, 2, 1};
    }
    long long abs_d = d < 0 ? -d : d;
    if (abs_d % p == 0) return {2, 1, 2, 1};
    int k = kronecker(d, p);
    return k == 1 ? IndexTuple{1, 1, 1, 1} : IndexTuple{1, 2, 1, 2};
}

IndexTuple indices_tower(long ell, int layer, long long p) {
    long long order = 1;
    for (int i = 0; i < layer; ++i) order *= ell;
    if (p == ell) return {order, 1, 1, order};
    // Residue degree of p is the order of its principal part in the cyclic
    // group (1 + ell Z) / (1 + ell^{layer+1} Z).
    mpz_class modulus = pow_ui(ell, static_cast<unsigned long>(layer + 1));
    mpz_class x = principal_residue(mpz_class(static_cast<long>(p)) % modulus, ell, modulus,
                                    layer + 1);
    long long f = 1;
    while (x != 1) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ell),
                    modulus.get_mpz_t());
        f *= ell;
    }
    return {1, f, 1, f};
}

} // namespace

IndexTuple indices(const FieldDescriptor& field, long long p) {
    require_prime(p);
    if (field.kind == FieldDescriptor::Kind::quadratic) return indices_quadratic(field.d, p);
    return indices_tower(field.ell, field.layer, p);
}

LogValuation log_valuation_quad(const FieldDescriptor& field, const QuadLocalElement& x,
                                long long p, const Precision& prec) {
    if (field.kind != FieldDescriptor::Kind::quadratic)
        fail(errc::invalid_field, "quadratic valuation needs a quadratic field");
    if (field.d != x.d) fail(errc::invalid_field, "element lives in a different field");
    if (prec.ell != 2) fail(errc::bad_precision, "quadratic fields are studied at ell = 2");
    require_prime(p);

    RationalNonzero n = norm_quad(x);
    IndexTuple idx = indices(field, p);

    if (p != 2) {
        long long vn = n.v(p);
        if (vn % idx.f_log != 0)
            fail(errc::invalid_field, "norm valuation escaped the residue lattice");
        long long v = vn / idx.f_log;
        return LogValuation{LAdicInt(mpz_class(static_cast<long>(v)), prec), v};
    }

    mpz_class t = exact_log_valuation(n, 2, prec.digits + 1);
    if (idx.f_log == 2) {
        if (mpz_odd_p(t.get_mpz_t()))
            fail(errc::invalid_field, "norm valuation escaped the residue lattice");
        t /= 2;
    }
    return LogValuation{LAdicInt(t, prec), std::nullopt};
}

HValue h_value(const FieldDescriptor& field, const QuadLocalElement& x, long long p,
               const Precision& prec) {
    LogValuation v = log_valuation_quad(field, x, p, prec);
    IndexTuple idx = indices(field, p);
    return HValue{v, idx.e_log};
}

} // namespace logfrob
