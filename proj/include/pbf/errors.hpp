#pragma once

#include <stdexcept>
#include <string>

namespace pbf {

enum class Errc {
    duplicate_term,
    zero_coefficient,
    mask_out_of_range,
    bad_domain_value,
    bad_length,
    too_many_variables,
    bad_exponent,
    inconsistent_profile,
    bad_args,
    duplicate_lhs,
    empty_lhs,
    nonpositive_weight,
    bad_rhs,
    negative_k,
    empty_system,
    parse_error,
};

const char* errc_name(Errc code);

/// Library-wide exception. `line()` is the 1-based input line for errors
/// raised while parsing text formats, 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    Errc code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    Errc code_;
    int line_;
};

} // namespace pbf
