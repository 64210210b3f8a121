#pragma once

#include <stdexcept>
#include <string>

namespace gruc {

/// Error conditions surfaced by the library. Verdicts (a failing check,
/// a non-universal cycle) are ordinary return values, not errors.
enum class errc {
    non_prime_modulus,
    wrong_degree,
    not_irreducible,
    not_primitive,
    scale_too_large,
    division_by_zero,
    log_of_zero,
    zero_span,
    dimension_out_of_range,
    input_in_base_field,
    ratio_in_base_field,
    collapsing_action,
    no_twistable_representative,
    product_condition_failed,
    spec_invalid,
    window_size_out_of_range,
    zero_vector_in_sequence,
    search_space_too_large,
    bad_input,
    io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace gruc
