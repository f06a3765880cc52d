#pragma once

#include "sing/wps.hpp"

#include <map>

namespace sing {

enum class Rounding { Floor, Ceil };

/**
 * r_n = sum atilde_i - dtilde - (1/n) sum round((n+1)(q_i-1)/q_i) atilde_i.
 * With floor rounding this is the existence bound coming from the integral
 * part condition n D+ >= n S + floor((n+1) B); the ceiling variant is what
 * the regular-complement screen uses.
 */
inline Rat r_n(const WellFormedDatum& wfd, long long n, Rounding rounding = Rounding::Floor) {
    if (n <= 0) throw Error("r_n: index must be positive");
    Rat r = -Rat(wfd.dtilde);
    Int correction = 0;
    for (std::size_t i = 0; i < wfd.atilde.size(); ++i) {
        r += Rat(wfd.atilde[i]);
        Int num = Int(n + 1) * (wfd.q[i] - 1);
        Int rounded;
        if (rounding == Rounding::Floor) rounded = num / wfd.q[i];
        else rounded = (num + wfd.q[i] - 1) / wfd.q[i];
        correction += rounded * wfd.atilde[i];
    }
    return r - Rat(correction, n);
}

/// Can n*r_n be written as sum atilde_i b_i with nonnegative integers b_i?
inline bool representable(const WellFormedDatum& wfd, long long n) {
    Rat r = r_n(wfd, n, Rounding::Floor);
    if (r < 0) throw Error("representable: r_n is negative");
    Rat target_rat = r * n;
    if (denominator(target_rat) != 1) throw Error("representable: n*r_n is not an integer");
    Int target = numerator(target_rat);
    if (target == 0) return true;
    if (target > 2'000'000) throw Error("representable: target out of supported range");
    const std::size_t t = static_cast<std::size_t>(to_ll(target));
    std::vector<char> reach(t + 1, 0);
    reach[0] = 1;
    for (const Int& coin_i : wfd.atilde) {
        const std::size_t coin = static_cast<std::size_t>(to_ll(coin_i));
        if (coin == 0 || coin > t) continue;
        for (std::size_t v = coin; v <= t; ++v)
            if (reach[v - coin]) reach[v] = 1;
    }
    return reach[t] != 0;
}

/// Least n <= n_max passing both numeric complement-existence conditions.
inline std::optional<long long> candidate_min_index(const WellFormedDatum& wfd,
                                                    long long n_max = 100) {
    for (long long n = 1; n <= n_max; ++n) {
        if (r_n(wfd, n, Rounding::Floor) < 0) continue;
        if (representable(wfd, n)) return n;
    }
    return std::nullopt;
}

/// True when K_E + ceil((n+1)D)/n stays ample for n = 1,2,3,4,6, i.e. no
/// regular complement can exist and the pair is exceptional.
inline bool screen_regular_complements(const WellFormedDatum& wfd) {
    for (long long n : {1, 2, 3, 4, 6})
        if (r_n(wfd, n, Rounding::Ceil) >= 0) return false;
    return true;
}

/// True when some Diff coefficient is >= 6/7 (the big-coefficient screen;
/// applies under the hyperplane-section hypothesis of the source result).
inline bool screen_big_coefficient(const WellFormedDatum& wfd) {
    for (const Rat& d : wfd.diff)
        if (d >= Rat(6, 7)) return true;
    return false;
}

struct ComplementEntry {
    Rat r_floor, r_ceil;
    bool representable = false;
};

struct ComplementProfile {
    std::map<long long, ComplementEntry> by_index;
    std::optional<long long> candidate;
    bool regular_complement_absent = false;
    bool big_coefficient = false;
};

inline ComplementProfile complement_profile(const WellFormedDatum& wfd, long long n_max = 100) {
    ComplementProfile prof;
    for (long long n = 1; n <= n_max; ++n) {
        ComplementEntry e;
        e.r_floor = r_n(wfd, n, Rounding::Floor);
        e.r_ceil = r_n(wfd, n, Rounding::Ceil);
        e.representable = e.r_floor >= 0 && representable(wfd, n);
        if (!prof.candidate && e.representable) prof.candidate = n;
        prof.by_index.emplace(n, std::move(e));
    }
    prof.regular_complement_absent = screen_regular_complements(wfd);
    prof.big_coefficient = screen_big_coefficient(wfd);
    return prof;
}

}  // namespace sing
