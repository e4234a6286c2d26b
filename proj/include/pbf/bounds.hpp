#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbf/expansion.hpp"
#include "pbf/limits.hpp"
#include "pbf/moments.hpp"
#include "pbf/transform.hpp"

namespace pbf {

enum class BoundKind { classical, width42, width2r, corollary, refined2r };

const char* bound_kind_name(BoundKind kind);

/// One inequality check. Exact reports compare rationals and `tight` means
/// literal equality; float reports use a 1e-9 relative tolerance. The double
/// fields are always populated for display.
struct BoundReport {
    BoundKind kind = BoundKind::width42;
    bool exact = true;
    bool holds = false;
    bool tight = false;
    Rational lhs_exact;
    Rational rhs_exact;
    Rational slack_exact;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
};

/// ((q-1)/(p-1))^{d/2}, the degree-based coefficient. Requires q > p > 1,
/// d >= 0.
double coeff_classical(double q, double p, int d);

/// Width-based (4,2) coefficient: fourth_power = 2*rho + 1 - 2*rho/m exactly
/// (1 when rho = 0, for any m). Errors when rho >= 1 with m = 0.
struct Width42Coeff {
    Rational fourth_power;
    double root;
};
Width42Coeff coeff_width_42(int rho, int m);

/// Width-based (2r,2) coefficient: power = (2r)! * rho^{r-1} exactly, root is
/// its (2r)-th root. Requires r >= 1, rho >= 1.
struct Width2rCoeff {
    BigInt power;
    double root;
};
Width2rCoeff coeff_width_2r(int r, int rho);

/// Sharper variant with the Bell number in place of one factorial:
/// power = B_r * (2r)!/r! * rho^{r-1}. Never exceeds coeff_width_2r.
Width2rCoeff coeff_width_2r_refined(int r, int rho);

/// General (q,p) width coefficient, q > p >= 2: r = ceil(q/2) and
/// value = ((2r)! * rho^{r-1})^{1/(2r)}.
struct QpCoeff {
    int r;
    double value;
};
QpCoeff coeff_width_qp(double q, double p, int rho);

/// r-th Bell number by the Bell triangle, r >= 1.
BigInt bell(int r);
/// (0.792 r / ln(r+1))^r, a strict upper bound on bell(r).
double bell_upper(int r);

/// Exact check E[f^4] <= (2 rho + 1 - 2 rho / m) E[f^2]^2.
BoundReport check_theorem_42(const FourierExpansion& f, const Limits& limits = {});

/// Exact check E[f^{2r}] <= (2r)! rho^{r-1} E[f^2]^r. A width-0 function is
/// reported with coefficient 1 (both sides equal, trivially tight).
BoundReport check_theorem_2r(const FourierExpansion& f, int r, const Limits& limits = {});

/// Same with the Bell-refined coefficient.
BoundReport check_theorem_2r_refined(const FourierExpansion& f, int r, const Limits& limits = {});

/// Float check ||f||_q <= ((2r)! rho^{r-1})^{1/(2r)} ||f||_p, q > p >= 2,
/// r = ceil(q/2), at 1e-9 relative tolerance.
BoundReport check_corollary(const FourierExpansion& f, double q, double p,
                            const Limits& limits = {});

/// Float check of the degree-based inequality
/// ||f||_q <= ((q-1)/(p-1))^{d/2} ||f||_p, q > p > 1.
BoundReport check_classical(const FourierExpansion& f, double q, double p,
                            const Limits& limits = {});

/// 1 + x_1 + ... + x_n (width 1, attains the (4,2) bound).
FourierExpansion example_affine(int n);
/// Sum of all 2^n characters (width 2^{n-1}, attains the (4,2) bound).
FourierExpansion example_full(int n, const Limits& limits = {});
/// x_1 + ... + x_n.
FourierExpansion example_linear(int n);

/// binom(n, r) * (2r)!/2^r: the number of 2r-tuples over [n] in which every
/// value appears exactly zero or two times. Lower-bounds E[(x_1+...+x_n)^{2r}].
/// Requires 1 <= r <= n.
BigInt good_vector_bound(int n, int r);

/// One row of the norm-growth scan: ratio = ||f||_{2r} / ||f||_2, computed
/// from exact moments; reference = sqrt(r * rho). Exploratory data, no
/// verdicts.
struct ConjectureScanRow {
    std::string family;
    int n = 0;
    int r = 0;
    int rho = 0;
    double ratio = 0.0;
    double reference = 0.0;
    double implied_c = 0.0;
};

/// A named family ("affine", "full" or "linear") scanned for n = 1..n_max.
struct FamilyRange {
    std::string family;
    int n_max = 1;
};

std::vector<ConjectureScanRow> conjecture_scan(const std::vector<FamilyRange>& families,
                                               int r_max, const Limits& limits = {});

/// Deterministic sparse test function: m distinct masks over n variables,
/// uniformly sampled, with nonzero integer coefficients in
/// [-coefficient_range, coefficient_range]. Same seed, same function.
FourierExpansion random_function(int n, int m, long long coefficient_range,
                                 std::uint64_t seed);

} // namespace pbf
