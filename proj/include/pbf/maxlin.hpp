#pragma once

#include <vector>

#include "pbf/expansion.hpp"
#include "pbf/limits.hpp"
#include "pbf/transform.hpp"
#include "pbf/varset.hpp"

namespace pbf {

/// One weighted equation prod_{i in lhs} x_i = rhs with rhs in {-1,+1} and a
/// positive integer weight.
struct Equation {
    VarSet lhs;
    int rhs = 1;
    long long weight = 1;

    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Weighted system of parity equations over {-1,+1} variables with the
/// above-average parameter k: asks whether some assignment satisfies total
/// weight >= W/2 + k. Left-hand sides are pairwise distinct and nonempty.
class EquationSystem {
public:
    EquationSystem(int n, std::vector<Equation> equations, long long k);

    int var_count() const { return n_; }
    int size() const { return static_cast<int>(equations_.size()); }
    const std::vector<Equation>& equations() const { return equations_; }
    long long k() const { return k_; }
    long long total_weight() const { return total_weight_; }

    friend bool operator==(const EquationSystem&, const EquationSystem&) = default;

private:
    int n_;
    std::vector<Equation> equations_;
    long long k_;
    long long total_weight_ = 0;
};

inline EquationSystem make_system(int n, std::vector<Equation> equations, long long k) {
    return EquationSystem(n, std::move(equations), k);
}

/// Q = sum_j w_j b_j chi_{I_j}; the weight satisfied at x is (W + Q(x)) / 2.
/// E[Q] = 0 since every left-hand side is nonempty.
FourierExpansion excess_polynomial(const EquationSystem& system);

/// Width profile of the excess polynomial: rho_i counts the equations
/// containing variable i.
WidthProfile system_width(const EquationSystem& system);

/// The exact integer test sum c_j^2 >= 16 k^2 (2 rho + 1), equivalent to
/// (1/2) sqrt(sum c^2 / (2 rho + 1)) >= 2k. threshold is that square root for
/// display. Errors on an empty system.
struct LowerBoundTest {
    bool passes = false;
    double threshold = 0.0;
    BigInt sum_c2;
    BigInt requirement;
};
LowerBoundTest lower_bound_test(const EquationSystem& system);

enum class KernelVerdict { yes_by_bound, pass_through };

const char* kernel_verdict_name(KernelVerdict verdict);

/// Kernelization outcome. YES_BY_BOUND replaces the instance by the canonical
/// consistent system {x_i = 1 : i = 1..2k} with unit weights (empty when
/// k = 0); PASS_THROUGH keeps the instance, whose size is then bounded by
/// sum c^2 < 16 k^2 (2 rho + 1). k never changes.
struct KernelResult {
    KernelVerdict verdict = KernelVerdict::pass_through;
    EquationSystem kernel = EquationSystem(0, {}, 0);
    long long k_prime = 0;
    double threshold = 0.0;
    bool exact_test = false;
};
KernelResult kernelize(const EquationSystem& system);

/// Exact maximum over all 2^n assignments. witness is the lexicographically
/// first maximizer in the point-index order (all +1 first); max_q is the
/// excess 2 * max_weight - W.
struct SolveResult {
    long long max_weight = 0;
    std::vector<int> witness;
    long long max_q = 0;
};
SolveResult solve_bruteforce(const EquationSystem& system, const Limits& limits = {});

/// True iff some assignment satisfies weight >= W/2 + k, i.e. max Q >= 2k.
bool decide(const EquationSystem& system, const Limits& limits = {});

/// Checks max Q >= (1/2) sqrt(E[Q^2] / (2 rho + 1)) in exact integers
/// (4 max_Q^2 (2 rho + 1) >= sum c^2; max_Q >= 0 always since E[Q] = 0).
struct AlonWitness {
    bool holds = false;
    long long max_q = 0;
    double rhs = 0.0;
};
AlonWitness alon_witness_check(const EquationSystem& system, const Limits& limits = {});

} // namespace pbf
