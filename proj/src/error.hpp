#pragma once

#include <stdexcept>
#include <string>

namespace sw {

// Machine-readable error codes. Every domain error thrown by the library
// carries one of these; the C API and CLI map them to stable strings.
enum class Code {
    ok = 0,
    invalid_parameters,
    invalid_weight,
    parse_error,
    not_parabolic,
    catalog_mismatch,
    group_too_large,
    none_found,
    not_bounded,
    not_regular_integral,
    not_dominant,
    not_dominant_after_tilde,
    singular_atypical_unsupported,
    third_sum_undefined,
    provider_gap,
    ideal_not_finite,
    invariant_violation,
    not_a_lie_algebra,
    not_injective,
    not_bijective_input,
    window_too_small,
    depth_too_large,
    io_error,
    internal,
};

const char* code_name(Code c);

class Error : public std::runtime_error {
  public:
    Error(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const { return code_; }

  private:
    Code code_;
};

[[noreturn]] inline void fail(Code code, const std::string& what) {
    throw Error(code, what);
}

// Hard failure for violated mathematical invariants (theorems acting as
// runtime assertions). Never downgraded to a warning.
inline void check_invariant(bool ok, const std::string& what) {
    if (!ok) throw Error(Code::invariant_violation, what);
}

}  // namespace sw
