#include <cmath>
#include <functional>

#include "doctest.h"

#include "helpers.hpp"
#include "pbf/moments.hpp"

using namespace pbf;
using pbf::testing::fn;
using pbf::testing::running_example;

namespace {

Errc code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a pbf::Error");
    return Errc::bad_args;
}

} // namespace

TEST_CASE("second moment is the sum of squared coefficients") {
    CHECK(second_moment(running_example()) == Rational(14));
    CHECK(second_moment(FourierExpansion()) == Rational(0));
    CHECK(second_moment(fn(2, {{VarSet(), Rational(BigInt(1), BigInt(2))}})) ==
          Rational(BigInt(1), BigInt(4)));
}

TEST_CASE("even moments on pinned examples") {
    const FourierExpansion f = running_example();
    CHECK(even_moment(f, 1) == Rational(14));
    CHECK(even_moment(f, 2) == Rational(392));

    // E[(x1+x2)^6] = 32
    CHECK(even_moment(example_linear(2), 3) == Rational(32));
    // constant c: E[c^{2r}] = c^{2r}
    CHECK(even_moment(fn(1, {{VarSet(), Rational(3)}}), 2) == Rational(81));
    // zero function
    CHECK(even_moment(fn(3, {}), 2) == Rational(0));

    CHECK(code_of([&] { even_moment(f, 0); }) == Errc::bad_args);
}

TEST_CASE("even_moment equals the enumeration oracle") {
    Draw draw(555);
    for (int trial = 0; trial < 25; ++trial) {
        const FourierExpansion f = pbf::testing::random_shape_function(draw, 8, 16);
        for (int r = 1; r <= 3; ++r) {
            CAPTURE(trial);
            CAPTURE(r);
            CHECK(even_moment(f, r) == even_moment_oracle(f, r));
        }
    }
}

TEST_CASE("sparse map cap falls back to the dense path") {
    Limits cramped;
    cramped.sparse_map_cap = 2;  // force the fallback immediately
    const FourierExpansion f = running_example();
    CHECK(even_moment(f, 2, cramped) == Rational(392));

    // no dense fallback available: n over the exact cap and the map overflows
    cramped.dense_exact_cap = 3;
    CHECK(code_of([&] { even_moment(f, 2, cramped); }) == Errc::too_many_variables);
}

TEST_CASE("even moments of an odd function match its negation") {
    const FourierExpansion f = example_linear(5);
    std::vector<FourierExpansion::Term> negated;
    for (const auto& [mask, coefficient] : f.terms()) negated.emplace_back(mask, -coefficient);
    const FourierExpansion g = fn(5, negated);
    for (int r = 1; r <= 3; ++r) CHECK(even_moment(f, r) == even_moment(g, r));
}

TEST_CASE("p-norm") {
    const FourierExpansion f = running_example();
    CHECK(p_norm(f, 2.0) == doctest::Approx(std::sqrt(14.0)).epsilon(1e-12));
    const double norm4 = p_norm(f, 4.0);
    CHECK(norm4 * norm4 * norm4 * norm4 == doctest::Approx(392.0).epsilon(1e-10));
    // norm of a constant is its absolute value, for every p
    const FourierExpansion c = fn(2, {{VarSet(), Rational(-3)}});
    CHECK(p_norm(c, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p_norm(c, 3.5) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK(code_of([&] { p_norm(f, 0.5); }) == Errc::bad_exponent);

    // monotone in p
    double previous = 0.0;
    for (double p : {1.0, 2.0, 3.0, 4.0, 6.0}) {
        const double value = p_norm(f, p);
        CHECK(value >= previous - 1e-12);
        previous = value;
    }
}
