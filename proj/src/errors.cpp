#include "pbf/errors.hpp"

namespace pbf {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::duplicate_term: return "duplicate_term";
        case Errc::zero_coefficient: return "zero_coefficient";
        case Errc::mask_out_of_range: return "mask_out_of_range";
        case Errc::bad_domain_value: return "bad_domain_value";
        case Errc::bad_length: return "bad_length";
        case Errc::too_many_variables: return "too_many_variables";
        case Errc::bad_exponent: return "bad_exponent";
        case Errc::inconsistent_profile: return "inconsistent_profile";
        case Errc::bad_args: return "bad_args";
        case Errc::duplicate_lhs: return "duplicate_lhs";
        case Errc::empty_lhs: return "empty_lhs";
        case Errc::nonpositive_weight: return "nonpositive_weight";
        case Errc::bad_rhs: return "bad_rhs";
        case Errc::negative_k: return "negative_k";
        case Errc::empty_system: return "empty_system";
        case Errc::parse_error: return "parse_error";
    }
    return "?";
}

} // namespace pbf
