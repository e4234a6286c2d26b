#include "pbf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pbf/draw.hpp"

namespace pbf {

namespace {

BoundReport exact_report(BoundKind kind, Rational lhs, Rational rhs) {
    BoundReport report;
    report.kind = kind;
    report.exact = true;
    report.holds = lhs <= rhs;
    report.tight = lhs == rhs;
    report.slack_exact = rhs - lhs;
    report.lhs = lhs.to_double();
    report.rhs = rhs.to_double();
    report.slack = report.slack_exact.to_double();
    report.lhs_exact = std::move(lhs);
    report.rhs_exact = std::move(rhs);
    return report;
}

BoundReport float_report(BoundKind kind, double lhs, double rhs) {
    constexpr double rel_tol = 1e-9;
    BoundReport report;
    report.kind = kind;
    report.exact = false;
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
    report.holds = lhs - rhs <= rel_tol * scale;
    report.tight = std::fabs(lhs - rhs) <= rel_tol * scale;
    return report;
}

int require_r(int r) {
    if (r < 1) throw Error(Errc::bad_args, "r must be >= 1");
    return r;
}

} // namespace

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::classical: return "classical";
        case BoundKind::width42: return "width42";
        case BoundKind::width2r: return "width2r";
        case BoundKind::corollary: return "corollary";
        case BoundKind::refined2r: return "refined2r";
    }
    return "?";
}

double coeff_classical(double q, double p, int d) {
    if (!(q > p && p > 1.0))
        throw Error(Errc::bad_exponent, "classical coefficient requires q > p > 1");
    if (d < 0) throw Error(Errc::bad_args, "degree must be >= 0");
    return std::pow((q - 1.0) / (p - 1.0), d / 2.0);
}

Width42Coeff coeff_width_42(int rho, int m) {
    if (rho < 0 || m < 0) throw Error(Errc::bad_args, "rho and m must be >= 0");
    if (rho == 0) return {Rational(1), 1.0};
    if (m == 0)
        throw Error(Errc::inconsistent_profile, "rho >= 1 requires at least one term");
    Rational fourth(BigInt(2 * (long)rho + 1) * m - 2 * (long)rho, BigInt(m));
    double root = std::pow(fourth.to_double(), 0.25);
    return {std::move(fourth), root};
}

Width2rCoeff coeff_width_2r(int r, int rho) {
    require_r(r);
    if (rho < 1) throw Error(Errc::bad_args, "rho must be >= 1");
    BigInt power = factorial(2 * static_cast<unsigned>(r)) *
                   ipow(BigInt(rho), static_cast<unsigned>(r - 1));
    double root = std::pow(power.get_d(), 1.0 / (2.0 * r));
    return {std::move(power), root};
}

Width2rCoeff coeff_width_2r_refined(int r, int rho) {
    require_r(r);
    if (rho < 1) throw Error(Errc::bad_args, "rho must be >= 1");
    BigInt falling;
    mpz_divexact(falling.get_mpz_t(), factorial(2 * static_cast<unsigned>(r)).get_mpz_t(),
                 factorial(static_cast<unsigned>(r)).get_mpz_t());
    BigInt power = bell(r) * falling * ipow(BigInt(rho), static_cast<unsigned>(r - 1));
    double root = std::pow(power.get_d(), 1.0 / (2.0 * r));
    return {std::move(power), root};
}

QpCoeff coeff_width_qp(double q, double p, int rho) {
    if (!(q > p && p >= 2.0))
        throw Error(Errc::bad_exponent, "width coefficient requires q > p >= 2");
    int r = static_cast<int>(std::ceil(q / 2.0));
    return {r, coeff_width_2r(r, rho).root};
}

BigInt bell(int r) {
    require_r(r);
    std::vector<BigInt> row{BigInt(1)};
    for (int k = 2; k <= r; ++k) {
        std::vector<BigInt> next(k);
        next[0] = row.back();
        for (int i = 1; i < k; ++i) next[i] = next[i - 1] + row[i - 1];
        row = std::move(next);
    }
    return row.back();
}

double bell_upper(int r) {
    require_r(r);
    return std::pow(0.792 * r / std::log(r + 1.0), r);
}

BoundReport check_theorem_42(const FourierExpansion& f, const Limits& limits) {
    const int rho = width(f).width;
    Rational coefficient = coeff_width_42(rho, f.term_count()).fourth_power;
    Rational s2 = second_moment(f);
    return exact_report(BoundKind::width42, even_moment(f, 2, limits), coefficient * s2 * s2);
}

namespace {

BoundReport check_2r_with(BoundKind kind, const FourierExpansion& f, int r,
                          const Limits& limits, bool refined) {
    require_r(r);
    const int rho = width(f).width;
    const Rational lhs = even_moment(f, r, limits);
    const Rational s2_pow = pow(second_moment(f), static_cast<unsigned>(r));
    if (rho == 0) {
        // Constant (or zero) function: both norms coincide, coefficient 1.
        return exact_report(kind, lhs, s2_pow);
    }
    BigInt coefficient =
        refined ? coeff_width_2r_refined(r, rho).power : coeff_width_2r(r, rho).power;
    return exact_report(kind, lhs, Rational(std::move(coefficient)) * s2_pow);
}

} // namespace

BoundReport check_theorem_2r(const FourierExpansion& f, int r, const Limits& limits) {
    return check_2r_with(BoundKind::width2r, f, r, limits, false);
}

BoundReport check_theorem_2r_refined(const FourierExpansion& f, int r, const Limits& limits) {
    return check_2r_with(BoundKind::refined2r, f, r, limits, true);
}

BoundReport check_corollary(const FourierExpansion& f, double q, double p,
                            const Limits& limits) {
    if (!(q > p && p >= 2.0))
        throw Error(Errc::bad_exponent, "corollary check requires q > p >= 2");
    const int rho = width(f).width;
    const double coefficient = rho == 0 ? 1.0 : coeff_width_qp(q, p, rho).value;
    return float_report(BoundKind::corollary, p_norm(f, q, limits),
                        coefficient * p_norm(f, p, limits));
}

BoundReport check_classical(const FourierExpansion& f, double q, double p,
                            const Limits& limits) {
    const double coefficient = coeff_classical(q, p, degree(f));
    return float_report(BoundKind::classical, p_norm(f, q, limits),
                        coefficient * p_norm(f, p, limits));
}

FourierExpansion example_affine(int n) {
    if (n < 1) throw Error(Errc::bad_args, "family needs n >= 1");
    std::vector<FourierExpansion::Term> terms;
    terms.emplace_back(VarSet(), Rational(1));
    for (int i = 1; i <= n; ++i) terms.emplace_back(VarSet::of({i}), Rational(1));
    return FourierExpansion(n, terms);
}

FourierExpansion example_full(int n, const Limits& limits) {
    if (n < 1) throw Error(Errc::bad_args, "family needs n >= 1");
    if (n > limits.dense_exact_cap)
        throw Error(Errc::too_many_variables,
                    "full family has 2^n terms; n exceeds the dense cap");
    std::vector<FourierExpansion::Term> terms;
    terms.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        terms.emplace_back(VarSet::from_bits(mask), Rational(1));
    return FourierExpansion(n, terms);
}

FourierExpansion example_linear(int n) {
    if (n < 1) throw Error(Errc::bad_args, "family needs n >= 1");
    std::vector<FourierExpansion::Term> terms;
    for (int i = 1; i <= n; ++i) terms.emplace_back(VarSet::of({i}), Rational(1));
    return FourierExpansion(n, terms);
}

BigInt good_vector_bound(int n, int r) {
    if (r < 1 || r > n)
        throw Error(Errc::bad_args, "good-vector count needs 1 <= r <= n");
    BigInt count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) *
                   factorial(2 * static_cast<unsigned>(r));
    const BigInt divisor = BigInt(1) << static_cast<unsigned>(r);
    BigInt result;
    mpz_divexact(result.get_mpz_t(), count.get_mpz_t(), divisor.get_mpz_t());
    return result;
}

std::vector<ConjectureScanRow> conjecture_scan(const std::vector<FamilyRange>& families,
                                               int r_max, const Limits& limits) {
    require_r(r_max);
    std::vector<ConjectureScanRow> rows;
    for (const FamilyRange& range : families) {
        for (int n = 1; n <= range.n_max; ++n) {
            FourierExpansion f;
            if (range.family == "affine")
                f = example_affine(n);
            else if (range.family == "full")
                f = example_full(n, limits);
            else if (range.family == "linear")
                f = example_linear(n);
            else
                throw Error(Errc::bad_args, "unknown family '" + range.family + "'");
            const int rho = width(f).width;
            const double norm2 = std::sqrt(second_moment(f).to_double());
            for (int r = 1; r <= r_max; ++r) {
                ConjectureScanRow row;
                row.family = range.family;
                row.n = n;
                row.r = r;
                row.rho = rho;
                row.ratio =
                    std::pow(even_moment(f, r, limits).to_double(), 1.0 / (2.0 * r)) / norm2;
                row.reference = std::sqrt(static_cast<double>(r) * rho);
                row.implied_c = row.ratio / row.reference;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

FourierExpansion random_function(int n, int m, long long coefficient_range,
                                 std::uint64_t seed) {
    if (n < 0 || n > VarSet::max_index)
        throw Error(Errc::bad_args, "variable count outside 0..63");
    if (m < 0) throw Error(Errc::bad_args, "term count must be >= 0");
    if (coefficient_range < 1)
        throw Error(Errc::bad_args, "coefficient range must be >= 1");
    const std::uint64_t universe = std::uint64_t{1} << n;
    if (static_cast<std::uint64_t>(m) > universe)
        throw Error(Errc::bad_args, "more terms requested than distinct masks");

    Draw draw(seed);
    std::vector<std::uint64_t> masks;
    masks.reserve(m);
    if (n <= 20) {
        std::vector<std::uint64_t> pool(universe);
        std::iota(pool.begin(), pool.end(), std::uint64_t{0});
        for (int i = 0; i < m; ++i) {
            std::size_t j = i + draw.below(universe - i);
            std::swap(pool[i], pool[j]);
            masks.push_back(pool[i]);
        }
    } else {
        std::set<std::uint64_t> seen;
        while (masks.size() < static_cast<std::size_t>(m)) {
            std::uint64_t mask = draw.below(universe);
            if (seen.insert(mask).second) masks.push_back(mask);
        }
    }

    std::vector<FourierExpansion::Term> terms;
    terms.reserve(m);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(coefficient_range);
    for (std::uint64_t mask : masks) {
        long long v = static_cast<long long>(draw.below(span)) + 1;
        if (v > coefficient_range) v = coefficient_range - v;
        terms.emplace_back(VarSet::from_bits(mask), Rational(v));
    }
    return FourierExpansion(n, terms);
}

} // namespace pbf
