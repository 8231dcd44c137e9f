#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lzcrystal/partition.hpp"
#include "lzcrystal/util.hpp"

namespace lzc {

/// Exponent vector over a fixed finite variable list x_1..x_m.
using Monomial = std::vector<int>;

/// Polynomial with exact integer coefficients, stored sparsely with no
/// zero terms.  Ordered term map keeps every traversal deterministic.
class FormalPolynomial {
public:
    explicit FormalPolynomial(int vars = 0) : vars_(vars) {
        if (vars < 0) throw std::invalid_argument("FormalPolynomial: negative variable count");
    }

    static FormalPolynomial one(int vars) {
        FormalPolynomial p(vars);
        p.add_term(Monomial(static_cast<std::size_t>(vars), 0), 1);
        return p;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Monomial& m, Int c) {
        if (static_cast<int>(m.size()) != vars_)
            throw std::invalid_argument("FormalPolynomial: monomial arity mismatch");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("FormalPolynomial: negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    FormalPolynomial& operator+=(const FormalPolynomial& o) {
        require_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    FormalPolynomial& operator-=(const FormalPolynomial& o) {
        require_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, checked_sub(0, c));
        return *this;
    }
    friend FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b) { return a += b; }
    friend FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b) { return a -= b; }

    FormalPolynomial operator*(const FormalPolynomial& o) const {
        require_same_vars(o);
        FormalPolynomial out(vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(static_cast<std::size_t>(vars_));
                for (int k = 0; k < vars_; ++k)
                    m[static_cast<std::size_t>(k)] =
                        ma[static_cast<std::size_t>(k)] + mb[static_cast<std::size_t>(k)];
                out.add_term(m, checked_mul(ca, cb));
            }
        return out;
    }

    bool operator==(const FormalPolynomial&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (int k = 0; k < vars_; ++k) {
                int e = m[static_cast<std::size_t>(k)];
                if (e == 0) continue;
                os << "*x" << (k + 1);
                if (e > 1) os << '^' << e;
            }
        }
        return os.str();
    }

private:
    void require_same_vars(const FormalPolynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("FormalPolynomial: variable count mismatch");
    }

    std::map<Monomial, Int> terms_;
    int vars_ = 0;
};

/// Elementary symmetric polynomial e_k(x_1..x_m); e_0 = 1, and zero for
/// k < 0 or k > m.
inline FormalPolynomial elementary_symmetric(int k, int vars) {
    FormalPolynomial out(vars);
    if (k < 0 || k > vars) return out;
    std::vector<int> sel;
    auto rec = [&](auto&& self, int next, int left) -> void {
        if (left == 0) {
            Monomial m(static_cast<std::size_t>(vars), 0);
            for (int v : sel) m[static_cast<std::size_t>(v)] = 1;
            out.add_term(m, 1);
            return;
        }
        for (int v = next; v <= vars - left; ++v) {
            sel.push_back(v);
            self(self, v + 1, left - 1);
            sel.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Schur polynomial by direct enumeration of semistandard tableaux of
/// the given shape with entries in {1..vars}: rows weakly increase,
/// columns strictly increase.  Serves as the combinatorial oracle for
/// the determinant route; vanishes exactly when l(shape) > vars.
inline FormalPolynomial schur_by_tableaux(const Partition& shape, int vars) {
    if (vars < 0) throw std::invalid_argument("schur_by_tableaux: negative variable count");
    FormalPolynomial out(vars);
    if (shape.empty()) return FormalPolynomial::one(vars);
    if (shape.length() > vars) return out;

    const auto& rows = shape.parts();
    std::vector<std::vector<int>> t(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) t[r].assign(static_cast<std::size_t>(rows[r]), 0);

    Monomial content(static_cast<std::size_t>(vars), 0);
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == t.size()) {
            out.add_term(content, 1);
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == t[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= vars; ++v) {
            t[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, nr, nc);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

/// Determinant of a square polynomial matrix by Laplace expansion with
/// zero-entry pruning; exact, fine at the sizes the shapes here produce.
inline FormalPolynomial poly_det(const std::vector<std::vector<FormalPolynomial>>& m, int vars) {
    const std::size_t t = m.size();
    if (t == 0) return FormalPolynomial::one(vars);
    std::vector<bool> used(t, false);
    FormalPolynomial acc(vars);
    auto rec = [&](auto&& self, std::size_t row, int sign, const FormalPolynomial& partial) -> void {
        if (row == t) {
            if (sign > 0)
                acc += partial;
            else
                acc -= partial;
            return;
        }
        int swaps = 0;
        for (std::size_t col = 0; col < t; ++col) {
            if (used[col]) continue;
            if (!m[row][col].is_zero()) {
                used[col] = true;
                self(self, row + 1, sign * (swaps % 2 == 0 ? 1 : -1), partial * m[row][col]);
                used[col] = false;
            }
            ++swaps;
        }
    };
    rec(rec, 0, 1, FormalPolynomial::one(vars));
    return acc;
}

}  // namespace detail

/// Schur polynomial as the dual Jacobi-Trudi determinant
/// det(e_{shape'_k - k + j})_{1<=k,j<=t} in the elementary symmetric
/// polynomials of x_1..vars.  det_size 0 means the minimal valid size
/// t = l(shape') = shape_1; any larger t gives the same polynomial.
inline FormalPolynomial schur_by_jacobi_trudi(const Partition& shape, int vars, int det_size = 0) {
    if (vars < 0) throw std::invalid_argument("schur_by_jacobi_trudi: negative variable count");
    const Partition conj = shape.conjugate();
    const int min_t = conj.length();
    const int t = det_size == 0 ? min_t : det_size;
    if (t < min_t) throw std::invalid_argument("schur_by_jacobi_trudi: determinant size below l(shape')");
    std::vector<std::vector<FormalPolynomial>> m(static_cast<std::size_t>(t));
    for (int k = 1; k <= t; ++k) {
        auto& row = m[static_cast<std::size_t>(k - 1)];
        row.reserve(static_cast<std::size_t>(t));
        for (int j = 1; j <= t; ++j) row.push_back(elementary_symmetric(conj.part(k) - k + j, vars));
    }
    return detail::poly_det(m, vars);
}

/// Per-color Schur expansions s_{rho^(i)}(x_{i,1}..x_{i,m_i}); the
/// product over colors is taken downstream over disjoint variable sets.
inline std::vector<FormalPolynomial> schur_tuple(const PartitionTuple& tuple, const std::vector<int>& var_counts) {
    if (tuple.colors() != static_cast<int>(var_counts.size()))
        throw std::invalid_argument("schur_tuple: color count mismatch");
    std::vector<FormalPolynomial> out;
    out.reserve(var_counts.size());
    for (int i = 1; i <= tuple.colors(); ++i)
        out.push_back(schur_by_tableaux(tuple.component(i), var_counts[static_cast<std::size_t>(i - 1)]));
    return out;
}

}  // namespace lzc
