#include "error.hpp"

namespace sw {

const char* code_name(Code c) {
    switch (c) {
        case Code::ok: return "ok";
        case Code::invalid_parameters: return "invalid-parameters";
        case Code::invalid_weight: return "invalid-weight";
        case Code::parse_error: return "parse-error";
        case Code::not_parabolic: return "not-parabolic";
        case Code::catalog_mismatch: return "catalog-mismatch";
        case Code::group_too_large: return "group-too-large";
        case Code::none_found: return "none-found";
        case Code::not_bounded: return "not-bounded";
        case Code::not_regular_integral: return "not-regular-integral";
        case Code::not_dominant: return "not-dominant";
        case Code::not_dominant_after_tilde: return "not-dominant-after-tilde";
        case Code::singular_atypical_unsupported:
            return "singular-atypical-unsupported";
        case Code::third_sum_undefined: return "third-sum-undefined";
        case Code::provider_gap: return "provider-gap";
        case Code::ideal_not_finite: return "ideal-not-finite";
        case Code::invariant_violation: return "invariant-violation";
        case Code::not_a_lie_algebra: return "not-a-lie-algebra";
        case Code::not_injective: return "not-injective";
        case Code::not_bijective_input: return "not-bijective-input";
        case Code::window_too_small: return "window-too-small";
        case Code::depth_too_large: return "depth-too-large";
        case Code::io_error: return "io-error";
        case Code::internal: return "internal";
    }
    return "internal";
}

}  // namespace sw
