#include "logfrob/error.hpp"

namespace logfrob {

const char* errc_name(errc code) {
    switch (code) {
        case errc::bad_precision: return "BadPrecision";
        case errc::precision_mismatch: return "PrecisionMismatch";
        case errc::precision_loss: return "PrecisionLoss";
        case errc::not_a_unit: return "NotAUnit";
        case errc::not_principal: return "NotPrincipal";
        case errc::zero_norm: return "ZeroNorm";
        case errc::invalid_field: return "InvalidField";
        case errc::frobenius_undefined: return "FrobeniusUndefined";
        case errc::not_coprime: return "NotCoprime";
        case errc::ray_condition_unverifiable: return "RayConditionUnverifiable";
        case errc::parse_error: return "ParseError";
        case errc::factorization_failed: return "FactorizationFailed";
    }
    return "Unknown";
}

} // namespace logfrob
