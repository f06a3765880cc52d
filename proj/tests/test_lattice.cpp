#include "sing/lattice.hpp"
#include "sing/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sing;

namespace {
Weight w4(long long a, long long b, long long c, long long d) {
    return {Rat(a), Rat(b), Rat(c), Rat(d)};
}
std::vector<Rat> pt(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("support_value") {
    auto f = parse_poly("t^2+z^3+x^7+y^8");
    CHECK(support_value(w4(84, 56, 24, 21), f) == 168);
    CHECK(support_value(w4(1, 1, 1, 1), f) == 2);
    auto g = parse_poly("t^2+z^3+x^6");  // x1^2+x2^3+x3^6 with a 4th absent variable
    CHECK(support_value(w4(3, 2, 1, 0), g) == 6);
    SupportedPolynomial empty;
    empty.dim = 4;
    CHECK_THROWS_AS(support_value(w4(1, 1, 1, 1), empty), Error);
}

TEST_CASE("support_value homogeneity") {
    auto f = parse_poly("t^2+z^3+x^7+y^8");
    Weight w = {Rat(3, 2), Rat(1), Rat(2, 7), Rat(5)};
    Rat alpha(7, 3);
    Weight scaled;
    for (const Rat& v : w) scaled.push_back(alpha * v);
    CHECK(support_value(scaled, f) == alpha * support_value(w, f));
}

TEST_CASE("leading_part") {
    auto f = parse_poly("t^2+z^3");
    auto lead = leading_part(w4(1, 1, 1, 1), f);
    REQUIRE(lead.size() == 1);
    CHECK(lead.terms[0].first == Monomial{2, 0, 0, 0});

    auto g = parse_poly("t^2+z^3+x^7+y^8");
    CHECK(leading_part(w4(84, 56, 24, 21), g) == g);  // own quasihomogeneous weights

    auto h = parse_poly("t^2+z^3+x^6");
    CHECK(leading_part(w4(3, 2, 1, 0), h) == h);
}

TEST_CASE("gamma membership at the all-ones point") {
    CHECK_FALSE(gamma_contains(parse_poly("t^2+z^3+x^7"), ones(4)));  // 41/42 < 1
    CHECK(gamma_contains(parse_poly("t^2+z^3+x^6*y"), ones(4)));      // lambda = (1/2,1/3,1/6)
    CHECK_FALSE(gamma_contains(parse_poly("t^2"), ones(4)));
}

TEST_CASE("gamma interior") {
    CHECK(gamma_interior_contains(parse_poly("t^2+z^3+x^7+y^8"), ones(4)));
    auto boundary = parse_poly("t^2+z^3+x^6");
    CHECK(gamma_contains(boundary, ones(4)));
    CHECK_FALSE(gamma_interior_contains(boundary, ones(4)));
    auto sq = parse_poly("x^2", {"x", "y"});
    CHECK(gamma_contains(sq, pt({3, 0})));
    CHECK_FALSE(gamma_interior_contains(sq, pt({3, 0})));
}

TEST_CASE("upward closure and interior implies membership") {
    auto f = parse_poly("t^2+z^3+x^6*y");
    std::vector<Rat> v = ones(4);
    REQUIRE(gamma_contains(f, v));
    std::vector<Rat> u = v;
    u[2] += Rat(5, 3);
    CHECK(gamma_contains(f, u));
    auto g = parse_poly("t^2+z^3+x^7+y^8");
    REQUIRE(gamma_interior_contains(g, ones(4)));
    CHECK(gamma_contains(g, ones(4)));
}

TEST_CASE("max compact face dimension") {
    auto point = parse_poly("z^5");
    CHECK(max_compact_face_dim(point, w4(1, 1, 1, 1)) == 0);

    auto full = parse_poly("t^2+z^3+x^7+y^11");
    CHECK(max_compact_face_dim(full, w4(231, 154, 66, 42)) == 3);

    // Binary 5-jet g5(z, x) spans a line in the jet space.
    auto jet = parse_poly("z^5+x^5", {"z", "x", "y"});
    CHECK(max_compact_face_dim(jet, {Rat(1), Rat(1), Rat(7)}) == 1);

    CHECK_THROWS_AS(max_compact_face_dim(full, w4(3, 2, 1, 0)), Error);  // zero entry
    CHECK_THROWS_AS(max_compact_face_dim(parse_poly("t^2+t^3"), w4(1, 1, 1, 1)), Error);
}
