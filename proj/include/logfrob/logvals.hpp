#ifndef LOGFROB_LOGVALS_HPP
#define LOGFROB_LOGVALS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "logfrob/field_descriptor.hpp"
#include "logfrob/ladic.hpp"
#include "logfrob/rational.hpp"

namespace logfrob {

// Logarithmic degree of the place p relative to l:
//   deg_l(p) = Log_Iw(p) for p != l, and Log_Iw(1+l) at p = l.
// Always a nonzero element of lZ_l (4Z_2 at p = l = 2), exact at the stored
// digits.
struct DegreeValue {
    LAdicInt value;
};

DegreeValue deg_ell(long long p, const Precision& prec);

// A logarithmic valuation value. For p != l it is the ordinary integer
// v_p(a), carried both exactly and as a residue; for p = l it is the l-adic
// integer Log_Iw(a) / Log_Iw(1+l), exact at the stored digits.
struct LogValuation {
    LAdicInt value;
    std::optional<long long> integral;

    bool is_zero() const { return value.is_zero() && (!integral || *integral == 0); }
    std::string str() const;
};

// v~_p(a) for a nonzero rational a viewed in Q_p^x.
LogValuation log_valuation_q(const RationalNonzero& a, long long p, const Precision& prec);

// x = a + b sqrt(d) in the quadratic field of discriminant-free radicand d.
struct QuadLocalElement {
    mpq_class a;
    mpq_class b;
    long long d;

    QuadLocalElement(mpq_class a, mpq_class b, long long d);
    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const;
};

// N(x) = a^2 - d b^2 as a factored rational.
RationalNonzero norm_quad(const QuadLocalElement& x);

// Classical and logarithmic ramification/residue indices of p in the field.
struct IndexTuple {
    long long e;
    long long f;
    long long e_log;
    long long f_log;
};

IndexTuple indices(const FieldDescriptor& field, long long p);

// v~_P(x) for the place P of Q(sqrt d) above p, computed through the norm:
// v~_P(x) = v~_p(N(x)) / f~_P. Integral for p != 2; an exact element of
// (1/e~)Z_2 at p = 2, returned as valuation of the norm divided by f~.
LogValuation log_valuation_quad(const FieldDescriptor& field, const QuadLocalElement& x,
                                long long p, const Precision& prec);

// h(x) = v~_P(x) / e~_P as a numerator/denominator pair over the value group
// (1/e~)Z_l of the logarithmic valuation.
struct HValue {
    LogValuation numerator;
    long long denominator;
};

HValue h_value(const FieldDescriptor& field, const QuadLocalElement& x, long long p,
               const Precision& prec);

} // namespace logfrob

#endif
