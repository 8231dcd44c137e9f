#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lzcrystal/cartan.hpp"
#include "lzcrystal/crystal.hpp"
#include "lzcrystal/util.hpp"

namespace lzc {

/// Exact integer matrix acting on (Lambda_0..Lambda_n, delta)
/// coordinates; Weyl group elements are canonicalized by these matrices,
/// which makes reduced-word equivalence automatic.
class WeightMatrix {
public:
    explicit WeightMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {}

    static WeightMatrix identity(int dim) {
        WeightMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    int dim() const { return dim_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    Int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    WeightMatrix operator*(const WeightMatrix& o) const {
        WeightMatrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const Int v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < dim_; ++j)
                    out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, o.at(k, j)));
            }
        return out;
    }

    Weight apply(const Weight& w) const {
        if (w.rank() + 2 != dim_) throw std::invalid_argument("WeightMatrix::apply: rank mismatch");
        std::vector<Int> in(w.fundamental_coords());
        in.push_back(w.delta_coord());
        std::vector<Int> out(static_cast<std::size_t>(dim_), 0);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                out[static_cast<std::size_t>(i)] =
                    checked_add(out[static_cast<std::size_t>(i)],
                                checked_mul(at(i, j), in[static_cast<std::size_t>(j)]));
        Int d = out.back();
        out.pop_back();
        return Weight(std::move(out), d);
    }

    bool operator==(const WeightMatrix&) const = default;
    auto operator<=>(const WeightMatrix&) const = default;

private:
    int dim_;
    std::vector<Int> a_;
};

/// Matrix of the simple reflection s_i: w -> w - <h_i, w> alpha_i.
inline WeightMatrix simple_reflection_matrix(const CartanDatum& datum, int i) {
    const int dim = datum.rank() + 2;
    const Weight alpha = datum.simple_root(i);
    WeightMatrix m = WeightMatrix::identity(dim);
    for (int r = 0; r <= datum.rank(); ++r) m.at(r, i) -= alpha.pairing(r);
    m.at(dim - 1, i) -= alpha.delta_coord();
    return m;
}

/// Word in the simple reflections together with its cached action.
/// Composition is right to left: the last letter acts first.
struct WeylWord {
    std::vector<int> letters;
    WeightMatrix action{2};

    static WeylWord from_letters(const CartanDatum& datum, std::vector<int> letters) {
        WeylWord w;
        w.action = WeightMatrix::identity(datum.rank() + 2);
        for (int l : letters) w.action = w.action * simple_reflection_matrix(datum, l);
        w.letters = std::move(letters);
        return w;
    }

    std::string str() const {
        std::ostringstream os;
        os << 's';
        if (letters.empty()) os << "(e)";
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (k) os << '.';
            os << letters[k];
        }
        return os.str();
    }
};

/// S_{s_i} b = f_i^k b when k = <h_i, wt b> >= 0, else e_i^{-k} b.
/// Never null on a regular crystal; a null mid-string is a regularity
/// violation and is reported loudly.
template <CrystalModel M>
typename M::Element apply_simple(const M& m, int color, const typename M::Element& x) {
    const Int k = m.weight(x).pairing(color);
    typename M::Element cur = x;
    for (Int step = 0; step < (k >= 0 ? k : -k); ++step) {
        auto next = k >= 0 ? m.f(color, cur) : m.e(color, cur);
        if (!next)
            throw std::runtime_error("apply_simple: operator string ended early (crystal not regular) at " +
                                     m.label(cur));
        cur = *next;
    }
    return cur;
}

/// S_w: letters applied right to left.
template <CrystalModel M>
typename M::Element apply_word(const M& m, const std::vector<int>& letters, const typename M::Element& x) {
    typename M::Element cur = x;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) cur = apply_simple(m, *it, cur);
    return cur;
}

template <CrystalModel M>
typename M::Element apply_word(const M& m, const WeylWord& w, const typename M::Element& x) {
    return apply_word(m, w.letters, x);
}

/// Matrix of the translation t(alpha_i) in the affine Weyl group:
///   w  ->  w + level(w) alpha_i - (<h_i, w> + level(w)) delta,
/// the standard translation action specialized to a simply laced datum.
/// On level-zero weights this is the pure delta-shift sending varpi_j to
/// varpi_j - [i = j] delta.
inline WeightMatrix translation_matrix(const CartanDatum& datum, int i) {
    if (i < 1 || i > datum.rank()) throw std::out_of_range("translation_matrix: need 1 <= i <= n");
    const int dim = datum.rank() + 2;
    const Weight alpha = datum.simple_root(i);
    WeightMatrix m = WeightMatrix::identity(dim);
    for (int c = 0; c <= datum.rank(); ++c) {
        const Int lv = datum.comarks()[static_cast<std::size_t>(c)];  // level(Lambda_c)
        for (int r = 0; r <= datum.rank(); ++r)
            m.at(r, c) = checked_add(m.at(r, c), checked_mul(lv, alpha.pairing(r)));
        Int dshift = checked_add(c == i ? 1 : 0, lv);
        m.at(dim - 1, c) = checked_add(m.at(dim - 1, c),
                                       checked_sub(checked_mul(lv, alpha.delta_coord()), dshift));
    }
    return m;
}

/// Shortest word whose action matrix equals t(alpha_i), found by BFS
/// over the Weyl group with matrix deduplication.  paths longer than
/// length_cap abort with an explicit error.
inline WeylWord find_translation_word(const CartanDatum& datum, int i, int length_cap = 16) {
    const WeightMatrix target = translation_matrix(datum, i);
    const int dim = datum.rank() + 2;
    std::vector<WeightMatrix> gens;
    for (int j = 0; j <= datum.rank(); ++j) gens.push_back(simple_reflection_matrix(datum, j));

    std::map<WeightMatrix, std::vector<int>> seen;
    std::deque<WeightMatrix> queue;
    WeightMatrix id = WeightMatrix::identity(dim);
    seen.emplace(id, std::vector<int>{});
    queue.push_back(id);
    if (id == target) return WeylWord::from_letters(datum, {});
    while (!queue.empty()) {
        WeightMatrix cur = queue.front();
        queue.pop_front();
        const auto& word = seen.at(cur);
        if (static_cast<int>(word.size()) >= length_cap) continue;
        for (int j = 0; j <= datum.rank(); ++j) {
            WeightMatrix next = cur * gens[static_cast<std::size_t>(j)];
            if (seen.contains(next)) continue;
            std::vector<int> next_word = word;
            next_word.push_back(j);
            if (next == target) return WeylWord::from_letters(datum, std::move(next_word));
            seen.emplace(std::move(next), std::move(next_word));
            queue.push_back(seen.find(cur * gens[static_cast<std::size_t>(j)])->first);
        }
    }
    throw std::runtime_error("find_translation_word: not found within length cap (raise the cap)");
}

/// Verdict of the extremality audit, with the violating classical
/// projection when not extremal, or the full closure otherwise.
template <typename E>
struct ExtremalityResult {
    bool extremal = false;
    std::vector<E> closure;
    std::optional<E> witness;
    int witness_color = -1;
    std::string clause;
};

/// Exact extremality check.  Grade shifts commute with every operator
/// and delta pairs to zero with every coroot, so every string condition
/// along the Weyl orbit is grade-independent; the closure therefore runs
/// on classical projections, which form a finite state space.  From each
/// reached projection x and color i with k = <h_i, wt x>: k >= 0 demands
/// epsilon_i(x) = 0 and steps to f_i^k x; k <= 0 demands phi_i(x) = 0
/// and steps to e_i^{-k} x.
template <CrystalModel M>
ExtremalityResult<typename M::Element> check_extremal(const M& m, const typename M::Element& x) {
    using E = typename M::Element;
    ExtremalityResult<E> res;
    std::set<E> visited;
    std::deque<E> queue;
    E start = m.strip_grades(x);
    visited.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        E cur = queue.front();
        queue.pop_front();
        const Weight w = m.weight(cur);
        for (int color = m.min_color(); color <= m.max_color(); ++color) {
            const Int k = w.pairing(color);
            if (k >= 0 && m.epsilon(color, cur) != 0) {
                res.witness = cur;
                res.witness_color = color;
                res.clause = "<h_i, wt> >= 0 but epsilon_i > 0";
                return res;
            }
            if (k <= 0 && m.phi(color, cur) != 0) {
                res.witness = cur;
                res.witness_color = color;
                res.clause = "<h_i, wt> <= 0 but phi_i > 0";
                return res;
            }
            E next = m.strip_grades(apply_simple(m, color, cur));
            if (visited.insert(next).second) queue.push_back(next);
        }
    }
    res.extremal = true;
    res.closure.assign(visited.begin(), visited.end());
    return res;
}

}  // namespace lzc
