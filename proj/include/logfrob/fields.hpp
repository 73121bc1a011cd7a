#ifndef LOGFROB_FIELDS_HPP
#define LOGFROB_FIELDS_HPP

#include <map>
#include <optional>
#include <string>

#include "logfrob/field_descriptor.hpp"
#include "logfrob/logvals.hpp"

namespace logfrob {

enum class SplitStatus { split, inert, ramified };

const char* split_status_name(SplitStatus s);

struct PrimeClassification {
    long long p;
    IndexTuple idx;
    SplitStatus classical;
    SplitStatus logarithmic;
};

PrimeClassification classify_prime(const FieldDescriptor& field, long long p);

// Exponent of p in the logarithmic conductor: 1 when p is logarithmically
// ramified, 0 otherwise (the supported families are tame in the logarithmic
// sense, so exponents never exceed 1).
int local_conductor_exponent(const FieldDescriptor& field, long long p);

struct LogConductor {
    std::map<long long, int> exponents;

    bool trivial() const { return exponents.empty(); }
    bool contains(long long p) const { return exponents.count(p) != 0; }
    std::string str() const;
};

LogConductor global_conductor(const FieldDescriptor& field);

// Position of a valuation value c in the filtration l^0 Z_l > l^1 Z_l > ...:
// v_l(c), or nullopt (infinity) when c is 0 at its stored precision.
std::optional<long> filtration_level(const LAdicInt& c);

} // namespace logfrob

#endif
