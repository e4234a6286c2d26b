#include "pbf/expansion.hpp"

#include <bit>

namespace pbf {

FourierExpansion::FourierExpansion(int n, const std::vector<Term>& terms) : n_(n) {
    if (n < 0)
        throw Error(Errc::bad_args, "negative variable count");
    if (n > VarSet::max_index)
        throw Error(Errc::too_many_variables,
                    "n = " + std::to_string(n) + " exceeds the sparse mask limit of " +
                        std::to_string(VarSet::max_index));
    for (const auto& [mask, coefficient] : terms) {
        if (!mask.within(n))
            throw Error(Errc::mask_out_of_range, "term uses variable " +
                                                     std::to_string(mask.highest()) +
                                                     " but n = " + std::to_string(n));
        if (coefficient.is_zero())
            throw Error(Errc::zero_coefficient, "zero coefficient stored for a term");
        auto [it, inserted] = terms_.emplace(mask, coefficient);
        if (!inserted)
            throw Error(Errc::duplicate_term, "two terms share the same variable set");
    }
}

Rational FourierExpansion::evaluate(std::span<const int> point) const {
    if (static_cast<int>(point.size()) != n_)
        throw Error(Errc::bad_domain_value,
                    "point has " + std::to_string(point.size()) + " coordinates, expected " +
                        std::to_string(n_));
    std::uint64_t negatives = 0;
    for (int i = 0; i < n_; ++i) {
        if (point[i] == -1)
            negatives |= std::uint64_t{1} << i;
        else if (point[i] != 1)
            throw Error(Errc::bad_domain_value,
                        "coordinate " + std::to_string(i + 1) + " is not -1 or +1");
    }
    Rational sum;
    for (const auto& [mask, coefficient] : terms_) {
        if (std::popcount(mask.bits() & negatives) & 1)
            sum -= coefficient;
        else
            sum += coefficient;
    }
    return sum;
}

TruthTable::TruthTable(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
    if (n < 0 || n > VarSet::max_index)
        throw Error(Errc::bad_args, "invalid variable count for a table");
    if (n >= 40 || values_.size() != (std::size_t{1} << n))
        throw Error(Errc::bad_length, "table must hold exactly 2^n values");
}

} // namespace pbf
