#include <functional>
#include <string>

#include "doctest.h"

#include "helpers.hpp"
#include "pbf/io.hpp"

using namespace pbf;
using pbf::testing::running_example;
using pbf::testing::system_a;

namespace {

struct Caught {
    Errc code;
    int line;
};

Caught catch_error(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return {e.code(), e.line()};
    }
    FAIL("expected a pbf::Error");
    return {Errc::bad_args, 0};
}

} // namespace

TEST_CASE("parse_function on pinned examples") {
    CHECK(parse_function("n 4\n2 1 2\n-3 2 3\n1 4\n") == running_example());
    const FourierExpansion half = parse_function("n 2\n1/2\n");
    CHECK(half.var_count() == 2);
    CHECK(half.terms().at(VarSet()) == Rational(BigInt(1), BigInt(2)));
    CHECK(parse_function("n 0\n") == FourierExpansion());
    // comments, blank lines, indices in any order
    const FourierExpansion commented = parse_function(
        "# header comment\n\nn 4   # four variables\n2 2 1\n-3 3 2 # term\n1 4\n");
    CHECK(commented == running_example());
}

TEST_CASE("parse_function error positions") {
    Caught c = catch_error([] { parse_function("n 2\n1 1 1\n"); });
    CHECK(c.code == Errc::parse_error);  // repeated index
    CHECK(c.line == 2);

    c = catch_error([] { parse_function("n 2\n1 1\n# x\n2 1\n"); });
    CHECK(c.code == Errc::duplicate_term);
    CHECK(c.line == 4);

    c = catch_error([] { parse_function(""); });
    CHECK(c.code == Errc::parse_error);

    c = catch_error([] { parse_function("m 3\n") ; });
    CHECK(c.code == Errc::parse_error);
    CHECK(c.line == 1);

    c = catch_error([] { parse_function("n 2\n0 1\n"); });
    CHECK(c.code == Errc::zero_coefficient);
    CHECK(c.line == 2);

    c = catch_error([] { parse_function("n 2\n1 3\n"); });
    CHECK(c.code == Errc::mask_out_of_range);
    CHECK(c.line == 2);

    c = catch_error([] { parse_function("n 2\nx 1\n"); });
    CHECK(c.code == Errc::parse_error);
    CHECK(c.line == 2);

    c = catch_error([] { parse_function("n 64\n"); });
    CHECK(c.code == Errc::too_many_variables);
    CHECK(c.line == 1);

    // comment lines still count for numbering
    c = catch_error([] { parse_function("# one\n# two\nn 2\n# four\n1 9\n"); });
    CHECK(c.code == Errc::mask_out_of_range);
    CHECK(c.line == 5);
}

TEST_CASE("function format round-trip") {
    const std::string text = format_function(running_example());
    CHECK(text == "n 4\n2 1 2\n-3 2 3\n1 4\n");
    CHECK(parse_function(text) == running_example());

    Draw draw(404);
    for (int trial = 0; trial < 15; ++trial) {
        const FourierExpansion f = pbf::testing::random_shape_function(draw, 10, 20);
        CHECK(parse_function(format_function(f)) == f);
    }

    // rational coefficients survive
    const FourierExpansion g = parse_function("n 1\n-7/3 1\n1/2\n");
    CHECK(parse_function(format_function(g)) == g);
    CHECK(format_function(FourierExpansion()) == "n 0\n");
}

TEST_CASE("parse_maxlin on pinned examples") {
    CHECK(parse_maxlin("maxlin 3 3 1\n1 1 1 2\n1 -1 2 3\n1 1 1 3\n") == system_a());
    const EquationSystem single = parse_maxlin("maxlin 2 1 0\n3 1 1\n");
    CHECK(single.size() == 1);
    CHECK(single.k() == 0);
    CHECK(single.total_weight() == 3);
    CHECK(single.equations()[0].lhs == VarSet::of({1}));
    CHECK(parse_maxlin("maxlin 4 0 2\n").size() == 0);
}

TEST_CASE("parse_maxlin error positions") {
    // header promises three equations, two given: reported at the header
    Caught c = catch_error([] { parse_maxlin("maxlin 3 3 1\n1 1 1 2\n1 -1 2 3\n"); });
    CHECK(c.code == Errc::parse_error);
    CHECK(c.line == 1);

    // extra equation line
    c = catch_error([] { parse_maxlin("maxlin 2 1 0\n1 1 1\n1 -1 2\n"); });
    CHECK(c.code == Errc::parse_error);
    CHECK(c.line == 3);

    c = catch_error([] { parse_maxlin("maxlin 2 1 0\n0 1 1\n"); });
    CHECK(c.code == Errc::nonpositive_weight);
    CHECK(c.line == 2);

    c = catch_error([] { parse_maxlin("maxlin 2 1 0\n1 2 1\n"); });
    CHECK(c.code == Errc::bad_rhs);
    CHECK(c.line == 2);

    c = catch_error([] { parse_maxlin("maxlin 2 1 0\n1 1\n"); });
    CHECK(c.code == Errc::empty_lhs);
    CHECK(c.line == 2);

    c = catch_error([] { parse_maxlin("maxlin 2 2 0\n1 1 1\n2 -1 1\n"); });
    CHECK(c.code == Errc::duplicate_lhs);
    CHECK(c.line == 3);

    c = catch_error([] { parse_maxlin("maxlin 2 1 -1\n1 1 1\n"); });
    CHECK(c.code == Errc::negative_k);
    CHECK(c.line == 1);

    c = catch_error([] { parse_maxlin("pbf 2 1 0\n"); });
    CHECK(c.code == Errc::parse_error);
    CHECK(c.line == 1);

    c = catch_error([] { parse_maxlin("maxlin 2 1 0\n1 1 5\n"); });
    CHECK(c.code == Errc::mask_out_of_range);
    CHECK(c.line == 2);
}

TEST_CASE("maxlin format round-trip") {
    const std::string text = format_maxlin(system_a());
    CHECK(text == "maxlin 3 3 1\n1 1 1 2\n1 -1 2 3\n1 1 1 3\n");
    CHECK(parse_maxlin(text) == system_a());

    Draw draw(515);
    for (int trial = 0; trial < 15; ++trial) {
        const EquationSystem system = pbf::testing::random_system(draw, 8, 14, 3, 3);
        CHECK(parse_maxlin(format_maxlin(system)) == system);
    }
    CHECK(format_maxlin(EquationSystem(0, {}, 0)) == "maxlin 0 0 0\n");
}
