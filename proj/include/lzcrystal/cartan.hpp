#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lzcrystal/util.hpp"

namespace lzc {

/// Element of the affine weight lattice P, stored in the basis
/// (Lambda_0, ..., Lambda_n, delta).  The delta coordinate is kept
/// explicitly: z-grades of affinized crystals live there.
class Weight {
public:
    Weight() = default;
    Weight(std::vector<Int> fundamental_coords, Int delta_coord)
        : coords_(std::move(fundamental_coords)), delta_(delta_coord) {}

    static Weight zero(int rank) { return Weight(std::vector<Int>(rank + 1, 0), 0); }

    // Lambda_i
    static Weight fundamental(int rank, int i) {
        if (i < 0 || i > rank) throw std::out_of_range("Weight::fundamental: index out of range");
        Weight w = zero(rank);
        w.coords_[static_cast<std::size_t>(i)] = 1;
        return w;
    }

    // delta
    static Weight null_root(int rank) {
        Weight w = zero(rank);
        w.delta_ = 1;
        return w;
    }

    int rank() const { return static_cast<int>(coords_.size()) - 1; }

    /// <h_i, w>; delta pairs to zero with every coroot.
    Int pairing(int h_index) const {
        if (h_index < 0 || h_index > rank()) throw std::out_of_range("Weight::pairing: index out of range");
        return coords_[static_cast<std::size_t>(h_index)];
    }

    Int delta_coord() const { return delta_; }
    const std::vector<Int>& fundamental_coords() const { return coords_; }

    Weight& operator+=(const Weight& o) {
        require_same_rank(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] = checked_add(coords_[k], o.coords_[k]);
        delta_ = checked_add(delta_, o.delta_);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        require_same_rank(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] = checked_sub(coords_[k], o.coords_[k]);
        delta_ = checked_sub(delta_, o.delta_);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const {
        Weight w = *this;
        for (auto& c : w.coords_) c = checked_sub(0, c);
        w.delta_ = checked_sub(0, w.delta_);
        return w;
    }
    friend Weight operator*(Int s, Weight w) {
        for (auto& c : w.coords_) c = checked_mul(s, c);
        w.delta_ = checked_mul(s, w.delta_);
        return w;
    }

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            if (k) os << ',';
            os << coords_[k];
        }
        os << ";d=" << delta_ << ')';
        return os.str();
    }

private:
    void require_same_rank(const Weight& o) const {
        if (coords_.size() != o.coords_.size())
            throw std::invalid_argument("Weight: rank mismatch");
    }

    std::vector<Int> coords_;
    Int delta_ = 0;
};

namespace detail {

/// Exact determinant of a small integer matrix (Bareiss elimination).
inline Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
                m[i][j] = num / prev;  // exact by Bareiss
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return checked_mul(sign, m[n - 1][n - 1]);
}

/// Cofactor C_{ij} = (-1)^{i+j} det(M with row i, column j removed).
inline Int cofactor(const std::vector<std::vector<Int>>& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    std::vector<std::vector<Int>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Int> row;
        row.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (c == j) continue;
            row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
    }
    Int d = int_det(std::move(minor));
    return ((i + j) % 2 == 0) ? d : checked_sub(0, d);
}

/// Primitive positive spanning vector of the kernel of a square integer
/// matrix whose corank is exactly one.  Uses a column of the adjugate:
/// M * adj(M) = det(M) * I = 0, and adj(M) has rank one when corank(M) = 1.
inline std::vector<Int> primitive_kernel_vector(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (int_det(m) != 0) throw std::invalid_argument("Cartan matrix is nonsingular (not affine)");
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> col(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            // adj(M)[i][j] = cofactor over the transposed index pair
            col[i] = cofactor(m, j, i);
            if (col[i] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        Int g = 0;
        for (Int v : col) g = std::gcd(g, v);
        for (auto& v : col) v /= g;
        Int lead = 0;
        for (Int v : col)
            if (v != 0) {
                lead = v;
                break;
            }
        if (lead < 0)
            for (auto& v : col) v = -v;
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc = checked_add(acc, checked_mul(m[i][k], col[k]));
            if (acc != 0) throw std::logic_error("kernel vector check failed");
        }
        for (Int v : col)
            if (v <= 0) throw std::invalid_argument("kernel vector not strictly positive (corank > 1 or non-affine)");
        return col;
    }
    throw std::invalid_argument("Cartan matrix has corank > 1");
}

}  // namespace detail

/// Affine Cartan datum: a symmetric generalized Cartan matrix of affine
/// type together with its marks (delta = sum a_i alpha_i) and comarks
/// (c = sum a_i^vee h_i), both computed as the primitive positive kernel
/// vectors of the matrix rather than read from tables.
class CartanDatum {
public:
    explicit CartanDatum(std::vector<std::vector<Int>> cartan_matrix)
        : matrix_(std::move(cartan_matrix)) {
        const std::size_t d = matrix_.size();
        if (d < 2) throw std::invalid_argument("CartanDatum: need at least two nodes");
        n_ = static_cast<int>(d) - 1;
        for (const auto& row : matrix_)
            if (row.size() != d) throw std::invalid_argument("CartanDatum: matrix not square");
        for (std::size_t i = 0; i < d; ++i) {
            if (matrix_[i][i] != 2) throw std::invalid_argument("CartanDatum: diagonal entries must be 2");
            for (std::size_t j = 0; j < d; ++j) {
                if (matrix_[i][j] != matrix_[j][i]) throw std::invalid_argument("CartanDatum: matrix not symmetric");
                if (i != j && matrix_[i][j] > 0) throw std::invalid_argument("CartanDatum: positive off-diagonal entry");
            }
        }
        marks_ = detail::primitive_kernel_vector(matrix_);
        std::vector<std::vector<Int>> t(d, std::vector<Int>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) t[i][j] = matrix_[j][i];
        comarks_ = detail::primitive_kernel_vector(t);
        if (marks_[0] != 1)
            throw std::invalid_argument("CartanDatum: mark a_0 != 1 (only untwisted data supported)");
    }

    /// Type A_n^(1): the cycle on n+1 nodes for n >= 2, and the n = 1
    /// matrix [[2,-2],[-2,2]].
    static CartanDatum affine_a(int n) {
        if (n < 1) throw std::invalid_argument("affine_a: rank must be >= 1");
        const int d = n + 1;
        std::vector<std::vector<Int>> m(d, std::vector<Int>(d, 0));
        for (int i = 0; i < d; ++i) m[i][i] = 2;
        if (n == 1) {
            m[0][1] = m[1][0] = -2;
        } else {
            for (int i = 0; i < d; ++i) {
                m[i][(i + 1) % d] = -1;
                m[(i + 1) % d][i] = -1;
            }
        }
        return CartanDatum(std::move(m));
    }

    int rank() const { return n_; }
    int node_count() const { return n_ + 1; }

    Int entry(int i, int j) const {
        check_node(i);
        check_node(j);
        return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    const std::vector<std::vector<Int>>& matrix() const { return matrix_; }
    const std::vector<Int>& marks() const { return marks_; }
    const std::vector<Int>& comarks() const { return comarks_; }

    /// alpha_j = sum_i a_{ij} Lambda_i + [j = 0] delta, so that
    /// delta = sum_j a_j alpha_j holds exactly in coordinates.
    Weight simple_root(int j) const {
        check_node(j);
        std::vector<Int> c(static_cast<std::size_t>(n_) + 1);
        for (int i = 0; i <= n_; ++i) c[static_cast<std::size_t>(i)] = entry(i, j);
        return Weight(std::move(c), j == 0 ? 1 : 0);
    }

    /// varpi_i = Lambda_i - a_i^vee Lambda_0, the level-zero fundamental weight.
    Weight level_zero_fundamental(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("level_zero_fundamental: need 1 <= i <= n");
        std::vector<Int> c(static_cast<std::size_t>(n_) + 1, 0);
        c[0] = checked_sub(0, comarks_[static_cast<std::size_t>(i)]);
        c[static_cast<std::size_t>(i)] = 1;
        return Weight(std::move(c), 0);
    }

    Weight null_root_weight() const { return Weight::null_root(n_); }

    /// level(w) = <c, w> = sum_i a_i^vee <h_i, w>
    Int level(const Weight& w) const {
        if (w.rank() != n_) throw std::invalid_argument("level: rank mismatch");
        Int acc = 0;
        for (int i = 0; i <= n_; ++i)
            acc = checked_add(acc, checked_mul(comarks_[static_cast<std::size_t>(i)], w.pairing(i)));
        return acc;
    }

    /// True for the A_n^(1) matrices produced by affine_a.  The column
    /// crystal realization downstream is only valid in type A.
    bool is_type_a() const {
        if (n_ == 1) return matrix_[0][1] == -2;
        for (int i = 0; i <= n_; ++i)
            for (int j = 0; j <= n_; ++j) {
                if (i == j) continue;
                const bool adj = (j == (i + 1) % (n_ + 1)) || (i == (j + 1) % (n_ + 1));
                if (entry(i, j) != (adj ? -1 : 0)) return false;
            }
        return true;
    }

private:
    void check_node(int i) const {
        if (i < 0 || i > n_) throw std::out_of_range("CartanDatum: node index out of range");
    }

    std::vector<std::vector<Int>> matrix_;
    std::vector<Int> marks_;
    std::vector<Int> comarks_;
    int n_ = 0;
};

}  // namespace lzc
