#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pbf/rational.hpp"
#include "pbf/varset.hpp"

namespace pbf {

/// Sparse multilinear polynomial f(x) = sum over stored terms of
/// coefficient * prod_{i in I} x_i, over x in {-1,+1}^n. Every stored
/// coefficient is nonzero; absent terms are zero. Immutable once built.
class FourierExpansion {
public:
    using Term = std::pair<VarSet, Rational>;
    using TermMap = std::map<VarSet, Rational>;

    /// The zero function on zero variables.
    FourierExpansion() = default;

    /// Validates: 0 <= n <= 63, masks within n, coefficients nonzero, no
    /// duplicate masks.
    FourierExpansion(int n, const std::vector<Term>& terms);

    int var_count() const { return n_; }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    /// Exact value at a point; each coordinate must be -1 or +1 and the point
    /// must have exactly n coordinates.
    Rational evaluate(std::span<const int> point) const;

    friend bool operator==(const FourierExpansion&, const FourierExpansion&) = default;

private:
    int n_ = 0;
    TermMap terms_;
};

inline FourierExpansion make_expansion(int n, const std::vector<FourierExpansion::Term>& terms) {
    return FourierExpansion(n, terms);
}

/// Dense vector of exact values over the cube. Entry b holds f at the point
/// where bit i-1 of b selects x_i = -1 (bit clear: x_i = +1).
class TruthTable {
public:
    TruthTable(int n, std::vector<Rational> values);

    int var_count() const { return n_; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    int n_;
    std::vector<Rational> values_;
};

} // namespace pbf
