#include "sing/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sing;

namespace {
Monomial mono(long long t, long long z, long long x, long long y) { return {t, z, x, y}; }
}  // namespace

TEST_CASE("literal monomials parse") {
    auto expr = parse_expression("t^2+z^3+x^7+y^11");
    REQUIRE(expr.terms.size() == 4);
    auto poly = instantiate(expr);
    REQUIRE(poly.size() == 4);
    CHECK(poly.terms[0].first == mono(2, 0, 0, 0));
    CHECK(poly.terms.back().first == mono(0, 0, 0, 11));
    for (const auto& [m, tag] : poly.terms) {
        CHECK_FALSE(tag.generic);
        CHECK(tag.value == 1);
    }
}

TEST_CASE("parametric exponents and labeled coefficients") {
    auto expr = parse_expression("x^7 + a*z^2*y^{4n} + b*y^{6n}", {"n"});
    REQUIRE(expr.terms.size() == 3);
    auto poly = instantiate(expr, {{"n", 2}});
    REQUIRE(poly.size() == 3);
    CHECK(poly.terms[0].first == mono(0, 0, 7, 0));  // degree 7 comes first
    bool found = false;
    for (const auto& [m, tag] : poly.terms)
        if (m == mono(0, 2, 0, 8)) {
            found = true;
            CHECK(tag.generic);
            CHECK(tag.label == "a");
        }
    CHECK(found);
}

TEST_CASE("form macro stays unexpanded in the AST") {
    auto expr = parse_expression("t^2 + z^3 + x^i * F{7-i}(x, y^2)", {"i"});
    REQUIRE(expr.terms.size() == 3);
    CHECK(expr.terms[2].forms.size() == 1);
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_expression("t^2 + + z"), ParseError);
    CHECK_THROWS_AS(parse_expression("t^"), ParseError);
    CHECK_THROWS_AS(parse_expression("F{2}(x y)"), ParseError);
    CHECK_THROWS_AS(parse_expression("x^{2n}"), ParseError);  // undeclared parameter
    CHECK_THROWS_AS(parse_expression("q^3", {"n"}), ParseError);  // label with exponent
}

TEST_CASE("instantiate: direct substitution") {
    auto poly = instantiate(parse_expression("x^7+y^{2n}", {"n"}), {{"n", 4}});
    REQUIRE(poly.size() == 2);
    CHECK(poly.terms[0].first == mono(0, 0, 7, 0));
    CHECK(poly.terms[1].first == mono(0, 0, 0, 8));
}

TEST_CASE("instantiate: binary form expansion") {
    auto poly = instantiate(parse_expression("F{2}(x, y^3)"));
    REQUIRE(poly.size() == 3);
    CHECK(poly.terms[0].first == mono(0, 0, 2, 0));
    CHECK(poly.terms[1].first == mono(0, 0, 1, 3));
    CHECK(poly.terms[2].first == mono(0, 0, 0, 6));
    for (const auto& [m, tag] : poly.terms) CHECK(tag.generic);
}

TEST_CASE("instantiate: exact cancellation") {
    auto poly = instantiate(parse_expression("x^2 - x^2 + z^3"));
    REQUIRE(poly.size() == 1);
    CHECK(poly.terms[0].first == mono(0, 3, 0, 0));
}

TEST_CASE("instantiate: generic merge wins over exact") {
    auto poly = instantiate(parse_expression("x^2 + a*x^2"));
    REQUIRE(poly.size() == 1);
    CHECK(poly.terms[0].second.generic);
}

TEST_CASE("instantiate errors") {
    auto expr = parse_expression("x^{n-3}", {"n"});
    CHECK_THROWS_WITH(instantiate(expr, {{"n", 1}}),
                      Catch::Matchers::ContainsSubstring("negative exponent"));
    CHECK_THROWS_WITH(instantiate(expr, {}), Catch::Matchers::ContainsSubstring("unbound"));
}

TEST_CASE("canonical render") {
    CHECK(canonical_render(instantiate(parse_expression("z^3+t^2"))) == "t^2 + z^3");
    SupportedPolynomial empty;
    empty.dim = 4;
    CHECK(canonical_render(empty) == "0");
    CHECK(canonical_render(instantiate(parse_expression("a*x*y^2 - 3/4*t"))) ==
          "-3/4*t + a*x*y^2");
}

TEST_CASE("parse-render-parse is a fixpoint") {
    const std::vector<std::string> sources = {
        "t^2+z^3+x^7+y^11",
        "x^7 + a*z*y^8 + b*y^12",
        "t^2 + z^3 + x^3*F{4}(x, y^2)",
        "2*x^2*y - 1/3*z^5 + t*x*y^3",
    };
    for (const auto& src : sources) {
        auto p1 = instantiate(parse_expression(src));
        auto p2 = instantiate(parse_expression(canonical_render(p1)));
        CHECK(p1 == p2);
        CHECK(canonical_render(p1) == canonical_render(p2));
    }
}

TEST_CASE("instantiate is deterministic") {
    auto expr = parse_expression("t^2 + z^3 + x^i * F{7-i}(x, y^2)", {"i"});
    auto a = instantiate(expr, {{"i", 3}});
    auto b = instantiate(expr, {{"i", 3}});
    CHECK(a == b);
    // i = 3: x^3 * (degree 4 form in x, y^2) -> supports x^{3+j} y^{2(4-j)}
    REQUIRE(a.size() == 2 + 5);
    CHECK(a.terms[2].first == mono(0, 0, 7, 0));
    CHECK(a.terms.back().first == mono(0, 0, 3, 8));
}
