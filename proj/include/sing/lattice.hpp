#pragma once

#include "sing/poly.hpp"
#include "sing/simplex.hpp"

namespace sing {

/// Weight vector with exact rational entries.
using Weight = std::vector<Rat>;

inline Weight to_weight(const std::vector<Int>& w) {
    Weight r;
    r.reserve(w.size());
    for (const Int& v : w) r.emplace_back(v);
    return r;
}

/// p(f) = min over the support of <p, m>.
inline Rat support_value(const Weight& w, const SupportedPolynomial& poly) {
    if (poly.empty()) throw Error("support_value: empty polynomial");
    if (static_cast<int>(w.size()) != poly.dim) throw Error("support_value: dimension mismatch");
    Rat best;
    bool first = true;
    for (const auto& [m, tag] : poly.terms) {
        Rat v = dot(w, m);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

/// Sub-polynomial on which <w, m> attains the support value; tags preserved.
inline SupportedPolynomial leading_part(const Weight& w, const SupportedPolynomial& poly) {
    const Rat val = support_value(w, poly);
    SupportedPolynomial out;
    out.dim = poly.dim;
    for (const auto& term : poly.terms)
        if (dot(w, term.first) == val) out.terms.push_back(term);
    return out;
}

/**
 * Membership of a rational point in the Newton polyhedron Gamma_+(f),
 * the convex hull of the sets m + R_{>=0}^n over the support.  Decided as
 * exact LP feasibility: some convex combination of support points is
 * componentwise <= v.
 */
inline bool gamma_contains(const SupportedPolynomial& poly, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != poly.dim) throw Error("gamma_contains: dimension mismatch");
    if (poly.empty()) return false;
    const std::size_t k = poly.terms.size(), n = poly.dim;
    // Variables: lambda_1..lambda_k, slack_1..slack_n.
    lp::Matrix A(n + 1, lp::Row(k + n, 0));
    lp::Row b(n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = poly.terms[i].first[j];
        A[j][k + j] = 1;
        b[j] = v[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[n][i] = 1;
    b[n] = 1;
    return lp::feasible(A, b);
}

inline bool gamma_contains(const SupportedPolynomial& poly, const std::vector<Int>& v) {
    std::vector<Rat> r(v.begin(), v.end());
    return gamma_contains(poly, r);
}

/// All-ones point, the membership probe of the log-canonicity criteria.
inline std::vector<Rat> ones(int dim) { return std::vector<Rat>(dim, 1); }

/**
 * Interior membership, solved as one LP: maximize eps subject to
 * v - eps*(1,..,1) in Gamma_+(f); the point is interior iff the optimum is
 * strictly positive.  Upward closure of Gamma_+ makes this equivalent to
 * the standard open-interior condition, coordinate facets included.
 */
inline bool gamma_interior_contains(const SupportedPolynomial& poly, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != poly.dim)
        throw Error("gamma_interior_contains: dimension mismatch");
    if (poly.empty()) return false;
    const std::size_t k = poly.terms.size(), n = poly.dim;
    // Variables: lambda_1..k, slack_1..n, eps_plus, eps_minus.
    lp::Matrix A(n + 1, lp::Row(k + n + 2, 0));
    lp::Row b(n + 1), c(k + n + 2, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = poly.terms[i].first[j];
        A[j][k + j] = 1;
        A[j][k + n] = 1;
        A[j][k + n + 1] = -1;
        b[j] = v[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[n][i] = 1;
    b[n] = 1;
    c[k + n] = -1;  // maximize eps
    c[k + n + 1] = 1;
    auto res = lp::solve_min(A, b, c);
    if (res.status == lp::Status::Infeasible) return false;
    if (res.status != lp::Status::Optimal) throw Error("interior LP unbounded");
    return -res.value > 0;
}

inline bool gamma_interior_contains(const SupportedPolynomial& poly, const std::vector<Int>& v) {
    std::vector<Rat> r(v.begin(), v.end());
    return gamma_interior_contains(poly, r);
}

/**
 * Dimension of the maximal compact face of Gamma_+(f) cut out by a strictly
 * positive weight w under which f is quasihomogeneous; this is the affine
 * dimension of the support.  Classifies the type M_i of the polynomial.
 */
inline int max_compact_face_dim(const SupportedPolynomial& poly, const Weight& w) {
    if (poly.empty()) throw Error("max_compact_face_dim: empty polynomial");
    if (static_cast<int>(w.size()) != poly.dim)
        throw Error("max_compact_face_dim: dimension mismatch");
    for (const Rat& wi : w)
        if (wi <= 0) throw Error("max_compact_face_dim: weight must be strictly positive");
    const Rat val = dot(w, poly.terms[0].first);
    for (const auto& [m, tag] : poly.terms)
        if (dot(w, m) != val)
            throw Error("max_compact_face_dim: polynomial is not quasihomogeneous for this weight");
    lp::Matrix M;
    const Monomial& m0 = poly.terms[0].first;
    for (std::size_t i = 1; i < poly.terms.size(); ++i) {
        lp::Row row(poly.dim);
        for (int j = 0; j < poly.dim; ++j) row[j] = Rat(poly.terms[i].first[j] - m0[j]);
        M.push_back(std::move(row));
    }
    return static_cast<int>(lp::rank(std::move(M)));
}

}  // namespace sing
