#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sing {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_floor(const Rat& r) {
    Int n = numerator(r), d = denominator(r);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x < 0 ? Int(-x) : x);
    return g;
}

template <class W, class M>
W dot(const std::vector<W>& w, const std::vector<M>& m) {
    if (w.size() != m.size()) throw Error("dot: dimension mismatch");
    W acc(0);
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * m[i];
    return acc;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

/// Parses "p", "-p" or "p/q" with q > 0.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
            throw Error("bad rational literal: " + s);
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        throw Error("bad rational literal: " + s);
    }
}

inline std::string int_str(const Int& n) { return n.str(); }

inline long long to_ll(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw Error("integer out of range: " + n.str());
    return static_cast<long long>(n);
}

}  // namespace sing
