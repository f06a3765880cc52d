#pragma once

#include "sing/lattice.hpp"

#include <map>

namespace sing {

/**
 * One Newton line rotation problem: the weights of t and of the fixed jet
 * monomial are pinned by <w, m> = 1, the x and y weights rotate subject to
 * the ordering constraint and to the strict threshold that the point
 * (2,2,2) stays over the rotation plane (sum of all weights > 1).
 */
struct RotationPreset {
    std::string name;
    std::vector<Monomial> fixed;   // always contains the t-power first
    Monomial apex;                 // collinearity pruning pivot of the fixed part
    bool strict_order = false;     // wt x > wt y instead of >=
    int max_zexp = 1;              // allowed z-exponents of pivot shapes
    long long min_degree = 0;      // pivots of lower total degree belong to other jet types
    std::vector<Monomial> excluded;  // shapes the classification treats elsewhere
    std::vector<Monomial> expected;  // the published list, kept for regression
};

namespace detail {

/// Feasibility of the rotation weight system for one pivot monomial.
inline bool rotation_weights_feasible(const RotationPreset& preset, const Monomial& pivot) {
    const std::size_t n = 4;
    lp::Matrix eq;
    for (const Monomial& f : preset.fixed) {
        lp::Row row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(f[j]);
        row[n] = 1;
        eq.push_back(std::move(row));
    }
    {
        lp::Row row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(pivot[j]);
        row[n] = 1;
        eq.push_back(std::move(row));
    }
    auto pivots = lp::rref(eq, n);
    for (const auto& row : eq) {
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0) zero = false;
        if (zero && row[n] != 0) return false;
    }
    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> free_cols;
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    // Express the linear functional sum_i c_i w_i over the free variables.
    auto substitute = [&](const std::vector<Rat>& c) {
        std::pair<lp::Row, Rat> out{lp::Row(free_cols.size(), 0), Rat(0)};
        lp::Row coef = c;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            const Rat f = coef[pivots[k]];
            if (f == 0) continue;
            out.second += f * eq[k][n];
            for (std::size_t fi = 0; fi < free_cols.size(); ++fi)
                out.first[fi] -= f * eq[k][free_cols[fi]];
        }
        for (std::size_t fi = 0; fi < free_cols.size(); ++fi) out.first[fi] += coef[free_cols[fi]];
        return out;
    };

    std::vector<lp::FmConstraint> cs;
    // L(w) > c  ==>  -L(w) < -c.
    auto add_gt = [&](const std::vector<Rat>& lin, const Rat& bound, bool strict) {
        auto [a, cst] = substitute(lin);
        lp::FmConstraint fc;
        fc.a.resize(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) fc.a[i] = -a[i];
        fc.rhs = cst - bound;
        fc.strict = strict;
        cs.push_back(std::move(fc));
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, 0);
        e[i] = 1;
        add_gt(e, 0, true);  // every weight strictly positive
    }
    {
        std::vector<Rat> d(n, 0);
        d[2] = 1;
        d[3] = -1;
        add_gt(d, 0, preset.strict_order);  // wt x (>=|>) wt y
    }
    add_gt(std::vector<Rat>(n, 1), 1, true);  // point 2 over the rotation plane
    return lp::fm_feasible(std::move(cs), free_cols.size());
}

/// Is mid strictly between apex and far on one line (exact rational test)?
inline bool strictly_between(const Monomial& apex, const Monomial& mid, const Monomial& far) {
    const std::size_t n = apex.size();
    std::optional<Rat> s;  // far - apex = s * (mid - apex), need s > 1
    for (std::size_t i = 0; i < n; ++i) {
        long long u = mid[i] - apex[i], v = far[i] - apex[i];
        if (u == 0) {
            if (v != 0) return false;
            continue;
        }
        if (u < 0) {
            u = -u;
            v = -v;
        }
        Rat si(v, u);
        if (s && *s != si) return false;
        s = si;
    }
    return s && *s > 1;
}

}  // namespace detail

/**
 * All pivot monomials z^c x^a y^b (a >= 1) in the search box that
 *  (i) admit rotation weights,
 *  (ii) give a non-lc singularity together with the fixed part, and
 *  (iii) are not strictly between the apex and another such monomial.
 * The shape constraint mirrors the weight ordering: the configuration
 * jet + pivot must carry at least as much x-degree as y-degree.
 */
inline std::vector<Monomial> enumerate_pivots(const RotationPreset& preset, long long bounds = 30) {
    if (bounds <= 0) throw Error("enumerate_pivots: unbounded or empty search request");
    const Monomial& jet = preset.fixed.back();
    std::vector<Monomial> candidates;
    for (int c = 0; c <= preset.max_zexp; ++c)
        for (long long a = 1; a <= bounds; ++a)
            for (long long b = 0; b <= bounds; ++b) {
                const long long xdeg = a + jet[2], ydeg = b + jet[3];
                if (preset.strict_order ? xdeg <= ydeg : xdeg < ydeg) continue;
                if (c + a + b < preset.min_degree) continue;
                Monomial m{0, c, a, b};
                if (std::find(preset.excluded.begin(), preset.excluded.end(), m) !=
                    preset.excluded.end())
                    continue;
                if (!detail::rotation_weights_feasible(preset, m)) continue;
                PolyBuilder builder(4);
                long long fresh = 0;
                for (const Monomial& f : preset.fixed)
                    builder.add(f, CoefficientTag::generic_nonzero("f" + std::to_string(++fresh)));
                builder.add(m, CoefficientTag::generic_nonzero("p"));
                if (gamma_contains(builder.build(), ones(4))) continue;  // lc: not a pivot
                candidates.push_back(std::move(m));
            }
    std::vector<Monomial> out;
    for (const Monomial& m : candidates) {
        bool pruned = false;
        for (const Monomial& other : candidates)
            if (other != m && detail::strictly_between(preset.apex, m, other)) {
                pruned = true;
                break;
            }
        if (!pruned) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), grlex_before);
    return out;
}

namespace detail {

inline Monomial mono(long long t, long long z, long long x, long long y) { return {t, z, x, y}; }

inline std::vector<Monomial> xy_list(std::initializer_list<std::pair<long long, long long>> ab,
                                     long long zexp = 0) {
    std::vector<Monomial> v;
    for (auto [a, b] : ab) v.push_back(mono(0, zexp, a, b));
    return v;
}

inline void append(std::vector<Monomial>& dst, std::vector<Monomial> src) {
    for (auto& m : src) dst.push_back(std::move(m));
}

}  // namespace detail

/// The named rotation problems of the classification, each with its
/// published monomial list for regression.
inline const std::map<std::string, RotationPreset>& builtin_presets() {
    static const std::map<std::string, RotationPreset> presets = [] {
        using detail::mono;
        using detail::xy_list;
        std::map<std::string, RotationPreset> m;
        auto add = [&](RotationPreset p) { m.emplace(p.name, std::move(p)); };

        {
            RotationPreset p;
            p.name = "upsilon1";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 0, 0)};
            p.apex = mono(0, 3, 0, 0);
            p.strict_order = false;
            p.min_degree = 4;
            p.expected = xy_list({{7, 0}, {8, 0}, {7, 1}, {9, 0}, {8, 1}, {7, 2}, {10, 0}, {9, 1},
                                  {8, 2}, {7, 3}, {11, 0}, {10, 1}, {9, 2}, {8, 3}, {7, 4}});
            detail::append(p.expected, xy_list({{5, 0}, {5, 1}, {7, 0}, {6, 1}, {5, 2}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon2_1";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 4, 0, 0)};
            p.apex = mono(0, 4, 0, 0);
            p.min_degree = 5;
            p.expected = xy_list({{5, 0}, {6, 0}, {5, 1}, {7, 0}, {6, 1}, {5, 2}});
            detail::append(p.expected, xy_list({{4, 0}, {5, 0}, {4, 1}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon2_2";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 1, 0)};
            p.apex = mono(0, 3, 1, 0);
            p.min_degree = 5;
            p.expected = xy_list({{5, 0}, {6, 0}, {5, 1}, {7, 0}, {6, 1}, {5, 2}, {8, 0}, {7, 1},
                                  {6, 2}, {5, 3}, {9, 0}, {8, 1}, {7, 2}, {6, 3}, {5, 4}});
            detail::append(p.expected, xy_list({{4, 0}, {4, 1}, {6, 0}, {5, 1}, {4, 2}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "theorem_3_23";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 0, 1)};
            p.apex = mono(0, 3, 0, 1);
            p.strict_order = true;
            p.max_zexp = 2;  // this preset alone admits z^2-pivots (its z^2 x^3 entry)
            p.min_degree = 5;
            p.expected = xy_list({{7, 0}, {8, 0}, {7, 1}, {9, 0}, {8, 1}, {7, 2}});
            detail::append(p.expected, xy_list({{5, 0}, {6, 0}, {5, 1}}, 1));
            detail::append(p.expected, xy_list({{3, 0}}, 2));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_1";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 5, 0, 0)};
            p.apex = mono(0, 5, 0, 0);
            p.min_degree = 6;
            p.expected = xy_list({{6, 0}, {5, 1}, {4, 2}});
            detail::append(p.expected, xy_list({{5, 0}, {4, 1}, {3, 2}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_2";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 4, 1, 0)};
            p.apex = mono(0, 4, 1, 0);
            p.min_degree = 6;
            p.expected = xy_list({{6, 0}, {5, 1}, {4, 2}});
            detail::append(p.expected, xy_list({{5, 0}, {4, 1}, {3, 2}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_3";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 4, 0, 1)};
            p.apex = mono(0, 4, 0, 1);
            p.strict_order = true;
            p.min_degree = 6;
            p.expected = xy_list({{6, 0}, {5, 1}});
            detail::append(p.expected, xy_list({{5, 0}, {4, 1}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_4";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 2, 0)};
            p.apex = mono(0, 3, 2, 0);
            p.min_degree = 6;
            p.expected = xy_list({{6, 0}, {5, 1}, {4, 2}, {3, 3}, {7, 0}, {6, 1}, {5, 2}, {4, 3},
                                  {3, 4}});
            detail::append(p.expected, xy_list({{5, 0}, {4, 1}, {3, 2}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_5";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 0, 2)};
            p.apex = mono(0, 3, 0, 2);
            p.strict_order = true;
            p.min_degree = 6;
            p.expected = xy_list({{7, 0}});
            detail::append(p.expected, xy_list({{5, 0}}, 1));
            add(std::move(p));
        }
        {
            RotationPreset p;
            p.name = "upsilon3_6";
            p.fixed = {mono(2, 0, 0, 0), mono(0, 3, 1, 1)};
            p.apex = mono(0, 3, 1, 1);
            p.min_degree = 5;
            // z x^4 pairs with z^3 x y into a one-dimensional 5-jet; that
            // configuration is classified with the M_1 jets, not here.
            p.excluded = {mono(0, 1, 4, 0)};
            p.expected = xy_list({{5, 0}, {6, 0}, {5, 1}, {7, 0}, {6, 1}, {5, 2}});
            detail::append(p.expected, xy_list({{5, 0}, {4, 1}}, 1));
            add(std::move(p));
        }
        return m;
    }();
    return presets;
}

inline const RotationPreset& lookup_preset(const std::string& name) {
    const auto& m = builtin_presets();
    auto it = m.find(name);
    if (it == m.end()) throw Error("unknown rotation preset: " + name);
    return it->second;
}

}  // namespace sing
