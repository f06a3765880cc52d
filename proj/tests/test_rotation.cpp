#include "sing/parse.hpp"
#include "sing/rotation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace sing;

namespace {

Monomial mono(long long t, long long z, long long x, long long y) { return {t, z, x, y}; }

std::set<Monomial> as_set(std::vector<Monomial> v) { return {v.begin(), v.end()}; }

std::string show(const Monomial& m) {
    SupportedPolynomial p;
    p.dim = 4;
    p.terms.emplace_back(m, CoefficientTag::exact(1));
    return canonical_render(p);
}

/// Independent weight-feasibility check for presets whose fixed part pins
/// the t and z weights (one remaining degree of freedom): breakpoint
/// sampling along the free parameter instead of Fourier-Motzkin.
bool oracle_feasible_upsilon1(const Monomial& m) {
    const Rat wt(1, 2), wz(1, 3);
    const Rat rhs = Rat(1) - wt * m[0] - wz * m[1];
    const long long a = m[2], b = m[3];
    if (a == 0) return false;  // pivots carry x
    // Parametrize by wy; wx = (rhs - b*wy)/a.  Constraints, all linear in wy:
    //   wx > 0, wy > 0, wx >= wy, wz + wx + wy > 1/2 - wt  (threshold).
    struct Lin {
        Rat p, q;  // p*wy + q, required > 0 (strict) or >= 0
        bool strict;
    };
    std::vector<Lin> cons;
    cons.push_back({Rat(-b, a), rhs / a, true});               // wx > 0
    cons.push_back({Rat(1), Rat(0), true});                    // wy > 0
    cons.push_back({Rat(-b, a) - 1, rhs / a, false});          // wx - wy >= 0
    cons.push_back({Rat(1) - Rat(b, a), rhs / a - Rat(1, 6), true});  // wx + wy > 1/6
    std::vector<Rat> samples;
    std::vector<Rat> roots;
    for (const auto& c : cons)
        if (c.p != 0) roots.push_back(-c.q / c.p);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rat& r : roots) samples.push_back(r);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        samples.push_back((roots[i] + roots[i + 1]) / 2);
    if (!roots.empty()) {
        samples.push_back(roots.front() - 1);
        samples.push_back(roots.back() + 1);
    } else {
        samples.push_back(Rat(1, 10));
    }
    for (const Rat& s : samples) {
        bool ok = true;
        for (const auto& c : cons) {
            Rat v = c.p * s + c.q;
            if (c.strict ? !(v > 0) : !(v >= 0)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("upsilon1 reproduces its published 20-monomial list") {
    const auto& preset = lookup_preset("upsilon1");
    auto got = enumerate_pivots(preset, 30);
    CHECK(got.size() == 20);
    CHECK(as_set(got) == as_set(preset.expected));
    // z x^6 sits on the segment from z^3 to x^9 and must be pruned.
    CHECK_FALSE(as_set(got).count(mono(0, 1, 6, 0)));
    CHECK(as_set(got).count(mono(0, 0, 9, 0)));
}

TEST_CASE("theorem_3_23 preset reproduces its published 10-monomial list") {
    const auto& preset = lookup_preset("theorem_3_23");
    auto got = enumerate_pivots(preset, 30);
    CHECK(got.size() == 10);
    CHECK(as_set(got) == as_set(preset.expected));
    CHECK(as_set(got).count(mono(0, 2, 3, 0)));  // z^2 x^3
}

TEST_CASE("every builtin preset reproduces its published list") {
    for (const auto& [name, preset] : builtin_presets()) {
        INFO(name);
        auto got = as_set(enumerate_pivots(preset, 30));
        auto want = as_set(preset.expected);
        for (const auto& m : want) {
            INFO("missing " + show(m));
            CHECK(got.count(m));
        }
        for (const auto& m : got) {
            INFO("extra " + show(m));
            CHECK(want.count(m));
        }
    }
}

TEST_CASE("upsilon2_2 absorbs z x^5 into the x^7 family by collinearity") {
    auto got = as_set(enumerate_pivots(lookup_preset("upsilon2_2"), 30));
    CHECK_FALSE(got.count(mono(0, 1, 5, 0)));
    CHECK(got.count(mono(0, 0, 7, 0)));
}

TEST_CASE("preset lookup and bounds validation") {
    CHECK_THROWS_AS(lookup_preset("nonexistent"), Error);
    CHECK(lookup_preset("upsilon2_1").fixed[1] == mono(0, 4, 0, 0));
    CHECK_THROWS_AS(enumerate_pivots(lookup_preset("upsilon1"), 0), Error);
}

TEST_CASE("upsilon1 agrees with a brute-force scan over the box") {
    const auto& preset = lookup_preset("upsilon1");
    std::set<Monomial> brute;
    std::vector<Monomial> prelim;
    for (int c = 0; c <= 2; ++c)
        for (long long a = 1; a <= 20; ++a)
            for (long long b = 0; b <= 20; ++b) {
                if (a < b) continue;  // the shape constraint of this preset
                if (c + a + b < preset.min_degree) continue;
                Monomial m = mono(0, c, a, b);
                if (!oracle_feasible_upsilon1(m)) continue;
                PolyBuilder pb(4);
                pb.add(mono(2, 0, 0, 0), CoefficientTag::exact(1));
                pb.add(mono(0, 3, 0, 0), CoefficientTag::exact(1));
                pb.add(m, CoefficientTag::generic_nonzero("p"));
                if (gamma_contains(pb.build(), ones(4))) continue;
                prelim.push_back(m);
            }
    for (const Monomial& m : prelim) {
        bool pruned = false;
        for (const Monomial& other : prelim)
            if (other != m && detail::strictly_between(preset.apex, m, other)) pruned = true;
        if (!pruned) brute.insert(m);
    }
    auto got = as_set(enumerate_pivots(preset, 20));
    CHECK(got == brute);
}

TEST_CASE("outputs are non-lc and one-step decrements leave the candidate set") {
    const auto& preset = lookup_preset("upsilon1");
    auto out = enumerate_pivots(preset, 30);
    std::set<Monomial> candidates;  // pre-pruning pass/fail is what a decrement may land on
    for (const Monomial& m : out) candidates.insert(m);
    candidates.insert(mono(0, 1, 6, 0));  // the pruned collinear monomial
    for (const Monomial& m : out) {
        PolyBuilder pb(4);
        for (const Monomial& f : preset.fixed) pb.add(f, CoefficientTag::exact(1));
        pb.add(m, CoefficientTag::generic_nonzero("p"));
        CHECK_FALSE(gamma_contains(pb.build(), ones(4)));
        for (int coord = 1; coord < 4; ++coord) {
            if (m[coord] == 0) continue;
            Monomial less = m;
            --less[coord];
            if (candidates.count(less)) continue;
            bool infeasible = !detail::rotation_weights_feasible(preset, less) || less[2] == 0 ||
                              less[2] < less[3];
            PolyBuilder pb2(4);
            for (const Monomial& f : preset.fixed) pb2.add(f, CoefficientTag::exact(1));
            pb2.add(less, CoefficientTag::generic_nonzero("p"));
            bool lc = gamma_contains(pb2.build(), ones(4));
            CHECK((infeasible || lc));
        }
    }
}
