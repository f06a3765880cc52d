#pragma once

#include "sing/lattice.hpp"

namespace sing {

/// Primitive integer weight system (p_1..p_n, d): every support exponent m
/// of the associated polynomial satisfies <p, m> = d, and gcd(p) = 1.
struct WeightSystem {
    std::vector<Int> weights;
    Int degree = 0;
};

struct WeightDetection {
    enum Kind { Unique, NotQuasihomogeneous, Underdetermined } kind = NotQuasihomogeneous;
    std::optional<WeightSystem> system;      // Unique
    std::vector<Rat> basepoint;              // Underdetermined: one solution of <w,m> = 1
    std::vector<std::vector<Rat>> kernel;    // Underdetermined: basis of the solution family
};

/**
 * Solves <w, m> = 1 over the support.  A unique nonnegative solution is
 * cleared to a primitive integer weight system; a negative entry means the
 * polynomial is not quasihomogeneous in the admitted (nonnegative) sense;
 * a solution family is reported as such rather than guessed at.
 */
inline WeightDetection detect_weights(const SupportedPolynomial& poly) {
    if (poly.empty()) throw Error("detect_weights: empty polynomial");
    const std::size_t n = poly.dim;
    lp::Matrix M;
    for (const auto& [m, tag] : poly.terms) {
        lp::Row row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = Rat(m[j]);
        row[n] = 1;
        M.push_back(std::move(row));
    }
    auto pivots = lp::rref(M, n);
    WeightDetection det;
    // Inconsistent system: a zero row with nonzero right-hand side.
    for (const auto& row : M) {
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j)
            if (row[j] != 0) zero = false;
        if (zero && row[n] != 0) {
            det.kind = WeightDetection::NotQuasihomogeneous;
            return det;
        }
    }
    std::vector<Rat> base(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) base[pivots[i]] = M[i][n];
    if (pivots.size() == n) {
        for (const Rat& w : base)
            if (w < 0) {
                det.kind = WeightDetection::NotQuasihomogeneous;
                return det;
            }
        // Clear denominators, then divide out the common factor.
        Int scale = 1;
        for (const Rat& w : base) scale = boost::multiprecision::lcm(scale, denominator(w));
        std::vector<Int> p(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = base[j] * scale;
            p[j] = numerator(scaled);
        }
        Int g = vec_gcd(p);
        if (g == 0) {
            det.kind = WeightDetection::NotQuasihomogeneous;  // all-zero solution: 0 = 1 impossible
            return det;
        }
        for (auto& v : p) v /= g;
        det.kind = WeightDetection::Unique;
        det.system = WeightSystem{std::move(p), scale / g};
        return det;
    }
    det.kind = WeightDetection::Underdetermined;
    det.basepoint = base;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> k(n, 0);
        k[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -M[i][free];
        det.kernel.push_back(std::move(k));
    }
    return det;
}

inline bool check_weights(const SupportedPolynomial& poly, const WeightSystem& ws) {
    if (ws.weights.size() != static_cast<std::size_t>(poly.dim))
        throw Error("check_weights: dimension mismatch");
    for (const auto& [m, tag] : poly.terms)
        if (dot(ws.weights, m) != ws.degree) return false;
    return true;
}

inline void require_primitive_blowup_weight(const std::vector<Int>& w) {
    int positive = 0;
    for (const Int& v : w) {
        if (v < 0) throw Error("blow-up weight entries must be nonnegative");
        if (v > 0) ++positive;
    }
    if (positive < 2) throw Error("blow-up weight needs at least two positive entries");
    if (vec_gcd(w) != 1) throw Error("blow-up weight must be primitive");
}

/// Discrepancy of the exceptional divisor of the w-blow-up over {f = 0}:
/// <w, 1> - w(f) - 1.
inline Rat blowup_discrepancy(const std::vector<Int>& w, const SupportedPolynomial& poly) {
    require_primitive_blowup_weight(w);
    Int sum = 0;
    for (const Int& v : w) sum += v;
    return Rat(sum) - support_value(to_weight(w), poly) - 1;
}

/// alpha_q = <q,1> - q(f) - (q_i/p_i) (<p,1> - p(f)) - 1 for a chart index i
/// of the p-blow-up.
inline Rat relative_discrepancy(const std::vector<Int>& q, const std::vector<Int>& p,
                                std::size_t chart, const SupportedPolynomial& poly) {
    if (q.size() != p.size() || static_cast<int>(p.size()) != poly.dim)
        throw Error("relative_discrepancy: dimension mismatch");
    if (chart >= p.size()) throw Error("relative_discrepancy: bad chart index");
    if (p[chart] == 0) throw Error("relative_discrepancy: chart weight p_i is zero");
    Int qsum = 0, psum = 0;
    for (const Int& v : q) qsum += v;
    for (const Int& v : p) psum += v;
    const Rat qf = support_value(to_weight(q), poly);
    const Rat pf = support_value(to_weight(p), poly);
    return Rat(qsum) - qf - Rat(q[chart], p[chart]) * (Rat(psum) - pf) - 1;
}

/**
 * The numeric halves of the quasihomogeneous classification criteria.
 * All verdicts are necessary conditions only; sufficiency needs hypotheses
 * (canonical / lc outside the origin, or non-degeneracy) that the library
 * does not certify.
 */
struct NumericCriteria {
    Int sum_weights = 0;
    Int degree = 0;
    Int sum_minus_degree = 0;
    bool canonical_bound = false;  // sum p_i >= d + 1
    bool lc_bound = false;         // sum p_i >= d
    bool one_in_polyhedron = false;
    bool one_in_interior = false;
};

inline NumericCriteria numeric_criteria(const WeightSystem& ws, const SupportedPolynomial& poly) {
    if (!check_weights(poly, ws)) throw Error("numeric_criteria: weights do not fit polynomial");
    NumericCriteria r;
    for (const Int& v : ws.weights) r.sum_weights += v;
    r.degree = ws.degree;
    r.sum_minus_degree = r.sum_weights - ws.degree;
    r.canonical_bound = r.sum_minus_degree >= 1;
    r.lc_bound = r.sum_minus_degree >= 0;
    r.one_in_polyhedron = gamma_contains(poly, ones(poly.dim));
    r.one_in_interior = gamma_interior_contains(poly, ones(poly.dim));
    return r;
}

}  // namespace sing
