#include <functional>

#include "doctest.h"

#include "helpers.hpp"
#include "pbf/transform.hpp"

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

std::vector<Rational> random_vector(Draw& draw, std::size_t size) {
    std::vector<Rational> v(size);
    for (Rational& x : v) {
        const long long numerator = static_cast<long long>(draw.below(41)) - 20;
        const long long denominator = 1 + static_cast<long long>(draw.below(5));
        x = Rational(BigInt(static_cast<long>(numerator)),
                     BigInt(static_cast<long>(denominator)));
    }
    return v;
}

} // namespace

TEST_CASE("wht on pinned examples") {
    const std::vector<Rational> v{Rational(1), Rational(-1), Rational(-1), Rational(1)};
    CHECK(wht(v) == std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(4)});

    const Rational c(BigInt(5), BigInt(3));
    CHECK(wht({c, c}) == std::vector<Rational>{c + c, Rational(0)});

    CHECK(wht({Rational(7)}) == std::vector<Rational>{Rational(7)});

    std::vector<Rational> bad{Rational(1), Rational(2), Rational(3)};
    CHECK(code_of([&] { wht_in_place(bad); }) == Errc::bad_length);
    std::vector<Rational> empty;
    CHECK(code_of([&] { wht_in_place(empty); }) == Errc::bad_length);
}

TEST_CASE("wht twice is 2^n times the identity") {
    Draw draw(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(draw.below(9));  // 0..8
        const std::vector<Rational> v = random_vector(draw, std::size_t{1} << n);
        std::vector<Rational> twice = wht(wht(v));
        const Rational scale(1LL << n);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(twice[i] == scale * v[i]);
    }
}

TEST_CASE("point-index convention: bit set means the variable is -1") {
    // f = x1 on one variable: point 0 is x1=+1, point 1 is x1=-1
    const TruthTable t = expansion_to_table(fn(1, {{VarSet::of({1}), Rational(1)}}));
    CHECK(t.values() == std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("table matches pointwise evaluation on the running example") {
    const FourierExpansion f = running_example();
    const TruthTable t = expansion_to_table(f);
    REQUIRE(t.values().size() == 16);
    for (std::uint64_t b = 0; b < 16; ++b) {
        std::vector<int> point(4);
        for (int i = 0; i < 4; ++i) point[i] = (b >> i) & 1 ? -1 : 1;
        CHECK(t.values()[b] == f.evaluate(point));
    }
}

TEST_CASE("expansion <-> table round-trips exactly") {
    Draw draw(777);
    for (int trial = 0; trial < 20; ++trial) {
        const FourierExpansion f = pbf::testing::random_shape_function(draw, 8, 20);
        CHECK(table_to_expansion(expansion_to_table(f)) == f);

        const int n = static_cast<int>(draw.below(7));
        const TruthTable t(n, random_vector(draw, std::size_t{1} << n));
        CHECK(expansion_to_table(table_to_expansion(t)) == t);
    }

    // all-zero table: every coefficient drops out
    const TruthTable zeros(2, std::vector<Rational>(4));
    CHECK(table_to_expansion(zeros).term_count() == 0);
}

TEST_CASE("dense caps") {
    Limits tight;
    tight.dense_exact_cap = 3;
    const FourierExpansion f = fn(4, {{VarSet::of({4}), Rational(1)}});
    CHECK(code_of([&] { expansion_to_table(f, tight); }) == Errc::too_many_variables);
    Limits float_tight;
    float_tight.dense_float_cap = 3;
    CHECK(code_of([&] { dense_values(f, float_tight); }) == Errc::too_many_variables);
    CHECK(dense_values(f).size() == 16);
}

TEST_CASE("degree and width") {
    const FourierExpansion f = running_example();
    CHECK(degree(f) == 2);
    CHECK(degree(FourierExpansion()) == 0);
    CHECK(degree(fn(2, {{VarSet(), Rational(5)}})) == 0);

    const WidthProfile profile = width(f);
    CHECK(profile.width == 2);
    CHECK(profile.per_variable == std::vector<int>{1, 2, 1, 1});

    const WidthProfile empty = width(fn(3, {}));
    CHECK(empty.width == 0);
    CHECK(empty.per_variable == std::vector<int>{0, 0, 0});

    CHECK(width(example_affine(5)).width == 1);
    CHECK(width(example_full(3)).width == 4);  // 2^{n-1}
    CHECK(width(example_linear(6)).width == 1);
}
