#include "logfrob/fields.hpp"

#include <sstream>

#include "logfrob/error.hpp"
#include "logfrob/rational.hpp"

namespace logfrob {

FieldDescriptor FieldDescriptor::quadratic(long long d) {
    if (d == 0) fail(errc::invalid_field, "radicand must be nonzero");
    long long sf = squarefree_part(d);
    if (sf == 1) fail(errc::invalid_field, "radicand must not be a square");
    FieldDescriptor f;
    f.kind = Kind::quadratic;
    f.d = sf;
    f.ell = 2;
    f.layer = 0;
    return f;
}

FieldDescriptor FieldDescriptor::tower(long ell, int layer) {
    if (ell == 2 || !is_prime_u64(static_cast<std::uint64_t>(ell)))
        fail(errc::invalid_field, "tower prime must be odd");
    if (layer < 1) fail(errc::invalid_field, "layer must be at least 1");
    long long pw = 1;
    for (int i = 0; i <= layer; ++i) {
        if (pw > (1LL << 61) / ell) fail(errc::invalid_field, "layer too deep");
        pw *= ell;
    }
    FieldDescriptor f;
    f.kind = Kind::tower;
    f.d = 0;
    f.ell = ell;
    f.layer = layer;
    return f;
}

long long FieldDescriptor::degree() const {
    if (kind == Kind::quadratic) return 2;
    long long pw = 1;
    for (int i = 0; i < layer; ++i) pw *= ell;
    return pw;
}

std::string FieldDescriptor::label() const {
    std::ostringstream os;
    if (kind == Kind::quadratic)
        os << "Q(sqrt " << d << ")";
    else
        os << "B" << layer << "@" << ell;
    return os.str();
}

const char* split_status_name(SplitStatus s) {
    switch (s) {
        case SplitStatus::split: return "split";
        case SplitStatus::inert: return "inert";
        case SplitStatus::ramified: return "ramified";
    }
    return "?";
}

namespace {
SplitStatus status_of(long long e, long long f) {
    if (e > 1) return SplitStatus::ramified;
    if (f > 1) return SplitStatus::inert;
    return SplitStatus::split;
}
} // namespace

PrimeClassification classify_prime(const FieldDescriptor& field, long long p) {
    IndexTuple idx = indices(field, p);
    return PrimeClassification{p, idx, status_of(idx.e, idx.f), status_of(idx.e_log, idx.f_log)};
}

int local_conductor_exponent(const FieldDescriptor& field, long long p) {
    return indices(field, p).e_log > 1 ? 1 : 0;
}

std::string LogConductor::str() const {
    if (exponents.empty()) return "(1)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exponents) {
        if (!first) os << "*";
        os << p << "^" << e;
        first = false;
    }
    return os.str();
}

LogConductor global_conductor(const FieldDescriptor& field) {
    LogConductor c;
    if (field.kind == FieldDescriptor::Kind::tower) return c;
    // Only primes dividing 2d can ramify, logarithmically or not.
    auto consider = [&](long long p) {
        int e = local_conductor_exponent(field, p);
        if (e > 0) c.exponents[p] = e;
    };
    consider(2);
    long long abs_d = field.d < 0 ? -field.d : field.d;
    for (const auto& [p, e] : factor_u64(static_cast<std::uint64_t>(abs_d))) {
        if (p != 2) consider(static_cast<long long>(p));
    }
    return c;
}

std::optional<long> filtration_level(const LAdicInt& c) {
    if (c.is_zero()) return std::nullopt;
    return c.valuation();
}

} // namespace logfrob
