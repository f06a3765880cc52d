#pragma once

#include "sing/quasihom.hpp"

namespace sing {

struct NotWellFormedError : Error {
    explicit NotWellFormedError(const std::string& what) : Error(what) {}
};
struct DivisibilityError : Error {
    explicit DivisibilityError(const std::string& what) : Error(what) {}
};

/// gcd of all entries except the i-th.
inline Int complement_gcd(const std::vector<Int>& a, std::size_t skip) {
    Int g = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != skip) g = boost::multiprecision::gcd(g, a[j]);
    return g;
}

inline bool is_well_defined(const std::vector<Int>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (complement_gcd(a, i) != 1) return false;
    return true;
}

struct WpsWeights {
    std::vector<Int> a;
    bool well_defined = false;
};

/// Normalizes weighted projective space weights: divides out the overall
/// gcd, then applies the q_i-reduction pass (smallest index first) until
/// the weights are well-defined.
inline WpsWeights normalize_weights(std::vector<Int> a) {
    if (a.empty()) throw Error("normalize_weights: empty weight vector");
    for (const Int& v : a)
        if (v <= 0) throw Error("normalize_weights: weights must be positive");
    Int g = vec_gcd(a);
    for (auto& v : a) v /= g;
    for (;;) {
        bool reduced = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Int q = complement_gcd(a, i);
            if (q > 1) {
                for (std::size_t j = 0; j < a.size(); ++j)
                    if (j != i) a[j] /= q;
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return WpsWeights{std::move(a), true};
}

/// Hypersurface well-formedness: for all i != j the gcd of the remaining
/// weights divides the degree.  Requires well-defined weights.
inline bool is_well_formed(const std::vector<Int>& a, const Int& d) {
    if (!is_well_defined(a)) throw Error("is_well_formed: weights are not well-defined");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Int g = 0;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (k != i && k != j) g = boost::multiprecision::gcd(g, a[k]);
            if (g > 1 && d % g != 0) return false;
        }
    return true;
}

/// Quasihomogeneous hypersurface datum in a weighted projective space.
struct HypersurfaceDatum {
    std::vector<Int> a;
    Int d = 0;
    SupportedPolynomial poly;
};

inline HypersurfaceDatum make_hypersurface(std::vector<Int> a, Int d, SupportedPolynomial poly) {
    if (a.size() != static_cast<std::size_t>(poly.dim))
        throw Error("hypersurface: dimension mismatch");
    for (const Int& v : a)
        if (v <= 0) throw Error("hypersurface: weights must be positive");
    if (poly.empty()) throw Error("hypersurface: empty polynomial");
    WeightSystem ws{a, d};
    if (!check_weights(poly, ws))
        throw Error("hypersurface: polynomial is not quasihomogeneous of the stated degree");
    return HypersurfaceDatum{std::move(a), std::move(d), std::move(poly)};
}

struct LinearCone {
    std::size_t k = 0;                 // eliminated variable
    std::vector<Int> space;            // P(atilde minus k)
    Rat reattached_diff = 0;           // diff entry carried to the image hypersurface
};

/**
 * The well-formed presentation of a p-blow-up exceptional surface: reduced
 * weights and degree, accumulated per-variable multiplicities q_i, the Diff
 * coefficient vector (q_i - 1)/q_i and the reduced equation.  The unreduced
 * 4-tuple (atilde, dtilde, q, diff) is what all complement arithmetic uses.
 */
struct WellFormedDatum {
    std::vector<Int> atilde;
    Int dtilde = 0;
    std::vector<Int> q;
    std::vector<Rat> diff;
    SupportedPolynomial reduced_poly;
    std::optional<LinearCone> linear_cone;
    std::vector<Int> a_orig;
    Int d_orig = 0;
};

inline WellFormedDatum well_formize(const HypersurfaceDatum& hd) {
    const std::size_t n = hd.a.size();
    if (vec_gcd(hd.a) != 1) throw Error("well_formize: weights must be primitive");
    WellFormedDatum out;
    out.a_orig = hd.a;
    out.d_orig = hd.d;
    out.atilde = hd.a;
    out.dtilde = hd.d;
    out.q.assign(n, 1);
    out.reduced_poly = hd.poly;

    for (int pass = 0; pass < 64; ++pass) {
        std::vector<Int> q(n);
        Int Q = 1;
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = complement_gcd(out.atilde, i);
            Q *= q[i];
        }
        if (Q == 1) {
            if (!is_well_formed(out.atilde, out.dtilde))
                throw NotWellFormedError(
                    "well_formize: hypersurface is not well-formed and no further reduction applies");
            break;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (boost::multiprecision::gcd(q[i], q[j]) != 1)
                    throw Error("well_formize: reduction multiplicities are not coprime");
        // Divide every x_i-exponent by q_i; fails exactly when some variable
        // divides the polynomial, which is outside the reduced-datum contract.
        PolyBuilder builder(static_cast<int>(n));
        for (const auto& [m, tag] : out.reduced_poly.terms) {
            Monomial r(m);
            for (std::size_t i = 0; i < n; ++i) {
                if (q[i] == 1) continue;
                if (m[i] % to_ll(q[i]) != 0)
                    throw DivisibilityError("well_formize: exponent of variable " +
                                            std::to_string(i) + " not divisible by q=" + q[i].str());
                r[i] = m[i] / to_ll(q[i]);
            }
            builder.add(r, tag);
        }
        out.reduced_poly = builder.build();
        if (out.dtilde % Q != 0) throw Error("well_formize: degree not divisible by product of q");
        for (std::size_t i = 0; i < n; ++i) {
            Int na = out.atilde[i] * q[i];
            if (na % Q != 0) throw Error("well_formize: inconsistent weight reduction");
            out.atilde[i] = na / Q;
            out.q[i] *= q[i];
        }
        out.dtilde /= Q;
    }

    for (std::size_t i = 0; i < n; ++i) out.diff.push_back(Rat(out.q[i] - 1, out.q[i]));

    // Bookkeeping identity tying the reduced data to the blow-up discrepancy.
    Rat lhs = -Rat(out.dtilde);
    Int qprod = 1, asum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        lhs += Rat(out.atilde[i], out.q[i]);
        qprod *= out.q[i];
        asum += hd.a[i];
    }
    if (lhs != Rat(asum - hd.d, qprod)) throw Error("well_formize: bookkeeping identity violated");
    return out;
}

/// Records the linear-cone presentation when dtilde equals some atilde_k and
/// the monomial x_k itself appears in the reduced equation; the numeric
/// 4-tuple is left untouched.
inline WellFormedDatum linear_cone_reduce(WellFormedDatum wfd) {
    const std::size_t n = wfd.atilde.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (wfd.atilde[k] != wfd.dtilde) continue;
        Monomial unit(n, 0);
        unit[k] = 1;
        bool present = false;
        for (const auto& [m, tag] : wfd.reduced_poly.terms)
            if (m == unit) present = true;
        if (!present) continue;
        LinearCone cone;
        cone.k = k;
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) cone.space.push_back(wfd.atilde[j]);
        cone.reattached_diff = wfd.diff[k];
        wfd.linear_cone = std::move(cone);
        break;
    }
    return wfd;
}

struct DegreeData {
    Rat canonical_deg;  // K_E = O_E(dtilde - sum atilde)
    Rat o1_power;       // O_E(1)^{n-2} on E
    Rat fano_deg;       // -(K_E + Diff) = O_E(sum atilde_i/q_i - dtilde)
};

inline DegreeData degree_data(const WellFormedDatum& wfd) {
    DegreeData dd;
    Int asum = 0, aprod = 1;
    Rat weighted = 0;
    for (std::size_t i = 0; i < wfd.atilde.size(); ++i) {
        asum += wfd.atilde[i];
        aprod *= wfd.atilde[i];
        weighted += Rat(wfd.atilde[i], wfd.q[i]);
    }
    dd.canonical_deg = Rat(wfd.dtilde - asum);
    dd.o1_power = Rat(wfd.dtilde, aprod);
    dd.fano_deg = weighted - Rat(wfd.dtilde);
    return dd;
}

}  // namespace sing
