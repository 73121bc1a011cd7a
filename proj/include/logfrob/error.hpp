#ifndef LOGFROB_ERROR_HPP
#define LOGFROB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace logfrob {

enum class errc {
    bad_precision,
    precision_mismatch,
    precision_loss,
    not_a_unit,
    not_principal,
    zero_norm,
    invalid_field,
    frobenius_undefined,
    not_coprime,
    ray_condition_unverifiable,
    parse_error,
    factorization_failed,
};

const char* errc_name(errc code);

// Single exception type for all domain failures; code() gives the stable
// machine-readable name used by the CLI error JSON.
class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace logfrob

#endif
