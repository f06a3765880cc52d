#pragma once

#include "sing/rational.hpp"

namespace sing::lp {

using Row = std::vector<Rat>;
using Matrix = std::vector<Row>;

enum class Status { Optimal, Infeasible, Unbounded };

struct LpResult {
    Status status = Status::Infeasible;
    Rat value = 0;
    std::vector<Rat> x;
};

/**
 * Exact two-phase simplex for  min c.x  s.t.  A x = b, x >= 0.
 * Bland's rule throughout, so it terminates on every input.
 */
class Simplex {
  public:
    Simplex(Matrix A, Row b, Row c) : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
        m_ = A_.size();
        n_ = m_ ? A_[0].size() : c_.size();
        if (b_.size() != m_ || c_.size() != n_) throw Error("simplex: inconsistent sizes");
    }

    LpResult solve() {
        // Phase 1: artificial variables, minimize their sum.
        for (std::size_t i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& v : A_[i]) v = -v;
                b_[i] = -b_[i];
            }
        T_.assign(m_, Row(n_ + m_ + 1, 0));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) T_[i][j] = A_[i][j];
            T_[i][n_ + i] = 1;
            T_[i].back() = b_[i];
            basis_[i] = n_ + i;
        }
        Row obj(n_ + m_, 0);
        Rat objval = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) obj[j] -= T_[i][j];
            objval -= T_[i].back();
        }
        if (!run(obj, objval, n_ + m_)) throw Error("simplex: phase 1 unbounded");
        if (objval != 0) return {Status::Infeasible, 0, {}};
        drop_artificials();

        // Phase 2.
        obj.assign(n_, 0);
        for (std::size_t j = 0; j < n_; ++j) obj[j] = c_[j];
        objval = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;  // zero-valued leftover artificial
            const Rat f = c_[basis_[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) obj[j] -= f * T_[i][j];
            objval -= f * T_[i].back();
        }
        if (!run(obj, objval, n_)) return {Status::Unbounded, 0, {}};

        LpResult res;
        res.status = Status::Optimal;
        res.value = -objval;
        res.x.assign(n_, 0);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) res.x[basis_[i]] = T_[i].back();
        return res;
    }

  private:
    // Bland's rule simplex over the first `limit` columns; returns false on
    // unboundedness.  `obj` holds reduced costs, `objval` the negated value.
    bool run(Row& obj, Rat& objval, std::size_t limit) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;
            std::size_t leave = m_;
            Rat best = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (T_[i][enter] <= 0) continue;
                Rat ratio = T_[i].back() / T_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return false;
            pivot(leave, enter, obj, objval);
        }
    }

    void pivot(std::size_t r, std::size_t c, Row& obj, Rat& objval) {
        const Rat p = T_[r][c];
        for (auto& v : T_[r]) v /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || T_[i][c] == 0) continue;
            const Rat f = T_[i][c];
            for (std::size_t j = 0; j < T_[i].size(); ++j) T_[i][j] -= f * T_[r][j];
        }
        if (obj[c] != 0) {
            const Rat f = obj[c];
            for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * T_[r][j];
            objval -= f * T_[r].back();
        }
        basis_[r] = c;
    }

    // After phase 1 every artificial in the basis sits at value zero; pivot
    // it out where possible so phase 2 works on original columns.
    void drop_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t c = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (T_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c == n_) continue;  // redundant row
            Row dummy_obj(n_ + m_, 0);
            Rat dummy_val = 0;
            pivot(i, c, dummy_obj, dummy_val);
        }
    }

    Matrix A_;
    Row b_, c_;
    std::size_t m_ = 0, n_ = 0;
    Matrix T_;
    std::vector<std::size_t> basis_;
};

inline LpResult solve_min(const Matrix& A, const Row& b, const Row& c) {
    return Simplex(A, b, c).solve();
}

/// Is {x >= 0 : A x = b} nonempty?
inline bool feasible(const Matrix& A, const Row& b) {
    Row c(A.empty() ? 0 : A[0].size(), 0);
    return Simplex(A, b, c).solve().status == Status::Optimal;
}

/// One linear constraint  a.x <= rhs  (strict when `strict` is set).
struct FmConstraint {
    Row a;
    Rat rhs;
    bool strict = false;
};

/**
 * Fourier-Motzkin feasibility over the rationals with strict/non-strict
 * constraints.  Intended for the tiny systems of the rotation enumerator
 * and test oracles.
 */
inline bool fm_feasible(std::vector<FmConstraint> cs, std::size_t nvars) {
    for (std::size_t v = nvars; v-- > 0;) {
        std::vector<FmConstraint> lower, upper, rest;
        for (auto& c : cs) {
            if (c.a[v] > 0) upper.push_back(std::move(c));
            else if (c.a[v] < 0) lower.push_back(std::move(c));
            else rest.push_back(std::move(c));
        }
        for (const auto& up : upper)
            for (const auto& lo : lower) {
                FmConstraint nc;
                nc.a.assign(v, 0);
                const Rat ku = up.a[v], kl = -lo.a[v];
                for (std::size_t j = 0; j < v; ++j) nc.a[j] = kl * up.a[j] + ku * lo.a[j];
                nc.rhs = kl * up.rhs + ku * lo.rhs;
                nc.strict = up.strict || lo.strict;
                rest.push_back(std::move(nc));
            }
        for (auto& c : rest) c.a.resize(v);
        cs = std::move(rest);
    }
    for (const auto& c : cs) {
        if (c.strict ? !(Rat(0) < c.rhs) : !(Rat(0) <= c.rhs)) return false;
    }
    return true;
}

/// Reduced row echelon form in place; returns the pivot column of each row
/// processed (matrix may have more columns than pivots, e.g. an augmented
/// right-hand side).
inline std::vector<std::size_t> rref(Matrix& M, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
        std::size_t sel = row;
        while (sel < M.size() && M[sel][col] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[row], M[sel]);
        const Rat p = M[row][col];
        for (auto& v : M[row]) v /= p;
        for (std::size_t i = 0; i < M.size(); ++i) {
            if (i == row || M[i][col] == 0) continue;
            const Rat f = M[i][col];
            for (std::size_t j = 0; j < M[i].size(); ++j) M[i][j] -= f * M[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Rank of a rational matrix.
inline std::size_t rank(Matrix M) {
    if (M.empty()) return 0;
    return rref(M, M[0].size()).size();
}

}  // namespace sing::lp
