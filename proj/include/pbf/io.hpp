#pragma once

#include <string>
#include <string_view>

#include "pbf/expansion.hpp"
#include "pbf/maxlin.hpp"

namespace pbf {

/// Function file (.pbf): '#' starts a comment, blank lines are skipped. The
/// first significant line is "n <int>"; every following significant line is
/// "<coef> [i1 i2 ... ik]" with an integer or "p/q" coefficient and distinct
/// 1-based indices (empty list: constant term). Parse and validation errors
/// carry the 1-based line number.
FourierExpansion parse_function(std::string_view text);

/// Equation file (.mla): first significant line "maxlin <n> <m> <k>", then
/// exactly m lines "<w> <b> <i1> ... <il>" with w >= 1, b in {1,-1}, l >= 1
/// distinct indices.
EquationSystem parse_maxlin(std::string_view text);

std::string format_function(const FourierExpansion& f);
std::string format_maxlin(const EquationSystem& system);

} // namespace pbf
