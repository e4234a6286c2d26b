#include "pbf/maxlin.hpp"

#include <bit>
#include <cmath>
#include <unordered_set>

#include "pbf/errors.hpp"
#include "pbf/rational.hpp"

namespace pbf {

EquationSystem::EquationSystem(int n, std::vector<Equation> equations, long long k)
    : n_(n), equations_(std::move(equations)), k_(k) {
    if (n < 0) throw Error(Errc::bad_args, "variable count must be >= 0");
    if (n > VarSet::max_index)
        throw Error(Errc::too_many_variables,
                    "at most " + std::to_string(VarSet::max_index) + " variables");
    if (k < 0) throw Error(Errc::negative_k, "k must be >= 0");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(equations_.size());
    for (const Equation& eq : equations_) {
        if (eq.lhs.empty())
            throw Error(Errc::empty_lhs, "equation left-hand side must be nonempty");
        if (!eq.lhs.within(n))
            throw Error(Errc::mask_out_of_range, "equation uses a variable beyond x" +
                                                     std::to_string(n));
        if (eq.weight < 1) throw Error(Errc::nonpositive_weight, "weights must be >= 1");
        if (eq.rhs != 1 && eq.rhs != -1)
            throw Error(Errc::bad_rhs, "right-hand side must be +1 or -1");
        if (!seen.insert(eq.lhs.bits()).second)
            throw Error(Errc::duplicate_lhs, "two equations share a left-hand side");
        total_weight_ += eq.weight;
    }
}

FourierExpansion excess_polynomial(const EquationSystem& system) {
    std::vector<FourierExpansion::Term> terms;
    terms.reserve(system.size());
    for (const Equation& eq : system.equations())
        terms.emplace_back(eq.lhs, Rational(eq.weight * eq.rhs));
    return FourierExpansion(system.var_count(), terms);
}

WidthProfile system_width(const EquationSystem& system) {
    return width(excess_polynomial(system));
}

const char* kernel_verdict_name(KernelVerdict verdict) {
    return verdict == KernelVerdict::yes_by_bound ? "YES_BY_BOUND" : "PASS_THROUGH";
}

namespace {

BigInt sum_squared_weights(const EquationSystem& system) {
    BigInt sum = 0;
    for (const Equation& eq : system.equations())
        sum += BigInt(static_cast<long>(eq.weight)) * static_cast<long>(eq.weight);
    return sum;
}

// Shared by lower_bound_test and kernelize; the latter tolerates empty systems.
LowerBoundTest lower_bound_core(const EquationSystem& system) {
    LowerBoundTest test;
    const int rho = system_width(system).width;
    test.sum_c2 = sum_squared_weights(system);
    test.requirement = BigInt(static_cast<long>(system.k()));
    test.requirement *= static_cast<long>(system.k());
    test.requirement *= 16 * (2 * rho + 1);
    test.passes = test.sum_c2 >= test.requirement;
    test.threshold = 0.5 * std::sqrt(test.sum_c2.get_d() / (2 * rho + 1));
    return test;
}

} // namespace

LowerBoundTest lower_bound_test(const EquationSystem& system) {
    if (system.size() == 0)
        throw Error(Errc::empty_system, "lower-bound test needs at least one equation");
    return lower_bound_core(system);
}

KernelResult kernelize(const EquationSystem& system) {
    const LowerBoundTest test = lower_bound_core(system);
    KernelResult result;
    result.k_prime = system.k();
    result.threshold = test.threshold;
    result.exact_test = test.passes;
    if (test.passes) {
        result.verdict = KernelVerdict::yes_by_bound;
        const long long two_k = 2 * system.k();
        std::vector<Equation> trivially_true;
        trivially_true.reserve(two_k);
        for (long long i = 1; i <= two_k; ++i)
            trivially_true.push_back({VarSet::of({static_cast<int>(i)}), 1, 1});
        result.kernel =
            EquationSystem(static_cast<int>(two_k), std::move(trivially_true), system.k());
    } else {
        result.verdict = KernelVerdict::pass_through;
        result.kernel = system;
    }
    return result;
}

SolveResult solve_bruteforce(const EquationSystem& system, const Limits& limits) {
    if (system.var_count() > limits.bruteforce_cap)
        throw Error(Errc::too_many_variables,
                    "brute force capped at " + std::to_string(limits.bruteforce_cap) +
                        " variables");
    const int n = system.var_count();
    const std::uint64_t points = std::uint64_t{1} << n;
    long long best = -1;
    std::uint64_t best_point = 0;
    for (std::uint64_t b = 0; b < points; ++b) {
        long long satisfied = 0;
        for (const Equation& eq : system.equations()) {
            const bool flips = std::popcount(eq.lhs.bits() & b) & 1;
            if ((flips ? -1 : 1) == eq.rhs) satisfied += eq.weight;
        }
        if (satisfied > best) {
            best = satisfied;
            best_point = b;
        }
    }
    SolveResult result;
    result.max_weight = best;
    result.max_q = 2 * best - system.total_weight();
    result.witness.reserve(n);
    for (int i = 0; i < n; ++i)
        result.witness.push_back((best_point >> i) & 1 ? -1 : 1);
    return result;
}

bool decide(const EquationSystem& system, const Limits& limits) {
    return solve_bruteforce(system, limits).max_q >= 2 * system.k();
}

AlonWitness alon_witness_check(const EquationSystem& system, const Limits& limits) {
    const SolveResult solved = solve_bruteforce(system, limits);
    const int rho = system_width(system).width;
    const BigInt sum_c2 = sum_squared_weights(system);

    AlonWitness witness;
    witness.max_q = solved.max_q;
    witness.rhs = 0.5 * std::sqrt(sum_c2.get_d() / (2 * rho + 1));
    BigInt squared(static_cast<long>(2 * solved.max_q));
    squared *= squared;
    squared *= 2 * rho + 1;
    witness.holds = solved.max_q >= 0 && squared >= sum_c2;
    return witness;
}

} // namespace pbf
