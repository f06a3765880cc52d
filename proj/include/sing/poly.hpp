#pragma once

#include "sing/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace sing {

/// Exponent vector of one monomial; entries are nonnegative.
using Monomial = std::vector<long long>;

inline long long total_degree(const Monomial& m) {
    long long d = 0;
    for (long long e : m) d += e;
    return d;
}

/// Graded order: total degree ascending, then lexicographically descending,
/// so that within one degree x^8 precedes x^7*y.
inline bool grlex_before(const Monomial& a, const Monomial& b) {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

/**
 * Coefficient tag of a supported monomial.  A generic tag stands for an
 * arbitrary nonzero complex number; an exact tag is a concrete nonzero
 * rational.  The zero tag never appears in a built polynomial, terms
 * cancelling to zero are dropped.
 */
struct CoefficientTag {
    bool generic = true;
    std::string label;  // only for generic tags
    Rat value = 1;      // only for exact tags, never 0

    static CoefficientTag generic_nonzero(std::string lab) {
        CoefficientTag t;
        t.generic = true;
        t.label = std::move(lab);
        return t;
    }
    static CoefficientTag exact(Rat v) {
        if (v == 0) throw Error("exact coefficient tag must be nonzero");
        CoefficientTag t;
        t.generic = false;
        t.value = std::move(v);
        return t;
    }
    bool operator==(const CoefficientTag& o) const {
        if (generic != o.generic) return false;
        return generic ? label == o.label : value == o.value;
    }
};

/// A polynomial reduced to the data the geometry cares about: its support
/// and the nonzero-ness class of each coefficient.
struct SupportedPolynomial {
    int dim = 0;
    std::vector<std::pair<Monomial, CoefficientTag>> terms;  // grlex sorted, duplicate-free

    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    std::vector<Monomial> support() const {
        std::vector<Monomial> s;
        s.reserve(terms.size());
        for (const auto& [m, t] : terms) s.push_back(m);
        return s;
    }

    bool operator==(const SupportedPolynomial& o) const {
        return dim == o.dim && terms == o.terms;
    }
};

/// Accumulates terms, merging like monomials.  A generic coefficient
/// absorbs anything it is added to; two exact coefficients are summed and
/// the term is dropped when the sum vanishes.
class PolyBuilder {
  public:
    explicit PolyBuilder(int dim) : dim_(dim) {
        if (dim <= 0) throw Error("polynomial dimension must be positive");
    }

    void add(const Monomial& m, const CoefficientTag& tag) {
        if (static_cast<int>(m.size()) != dim_) throw Error("monomial has wrong dimension");
        for (long long e : m)
            if (e < 0) throw Error("negative exponent in monomial");
        auto it = acc_.find(m);
        if (it == acc_.end()) {
            acc_.emplace(m, tag);
            return;
        }
        CoefficientTag& cur = it->second;
        if (cur.generic || tag.generic) {
            if (!cur.generic) cur = tag;
        } else {
            cur.value += tag.value;
            if (cur.value == 0) acc_.erase(it);
        }
    }

    SupportedPolynomial build() const {
        SupportedPolynomial p;
        p.dim = dim_;
        p.terms.assign(acc_.begin(), acc_.end());
        return p;
    }

  private:
    struct Cmp {
        bool operator()(const Monomial& a, const Monomial& b) const { return grlex_before(a, b); }
    };
    int dim_;
    std::map<Monomial, CoefficientTag, Cmp> acc_;
};

inline std::vector<std::string> default_var_names(int dim) {
    static const std::vector<std::string> base = {"t", "z", "x", "y"};
    if (dim <= 4) return {base.begin(), base.begin() + dim};
    std::vector<std::string> v;
    for (int i = 0; i < dim; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

/// Deterministic rendering; re-parsing the result reproduces the same
/// support and tags.
inline std::string canonical_render(const SupportedPolynomial& poly,
                                    std::vector<std::string> names = {}) {
    if (names.empty()) names = default_var_names(poly.dim);
    if (static_cast<int>(names.size()) != poly.dim) throw Error("wrong number of variable names");
    if (poly.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, tag] : poly.terms) {
        std::string mono;
        for (int i = 0; i < poly.dim; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coef;
        bool neg = false;
        if (tag.generic) {
            coef = tag.label.empty() ? "c" : tag.label;
        } else {
            Rat v = tag.value;
            if (v < 0) {
                neg = true;
                v = -v;
            }
            if (v != 1 || mono.empty()) coef = rat_str(v);
        }
        std::string body = coef;
        if (!coef.empty() && !mono.empty()) body += "*";
        body += mono;
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace sing
