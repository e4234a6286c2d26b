#pragma once

#include "pbf/expansion.hpp"
#include "pbf/limits.hpp"

namespace pbf {

/// Sum of squared coefficients; equals E[f^2] by Parseval.
Rational second_moment(const FourierExpansion& f);

/// Exact E[f^{2r}], r >= 1. Computed as the sum of squared coefficients of
/// f^r, where f^r is obtained by sparse XOR self-convolution of the
/// coefficient map. Falls back to the dense table path when the intermediate
/// map would exceed limits.sparse_map_cap (or when the dense path is clearly
/// cheaper); both paths give the identical exact value.
Rational even_moment(const FourierExpansion& f, int r, const Limits& limits = {});

/// Exact E[f^{2r}] by direct expectation over the full cube, 2^-n sum of
/// f(x)^{2r}. Requires n <= limits.dense_exact_cap.
Rational even_moment_oracle(const FourierExpansion& f, int r, const Limits& limits = {});

/// (E[|f|^p])^{1/p} in double precision, p >= 1. Requires
/// n <= limits.dense_float_cap. For even integer p this agrees with
/// even_moment(f, p/2)^{1/p} to ~1e-12 relative.
double p_norm(const FourierExpansion& f, double p, const Limits& limits = {});

} // namespace pbf
