#pragma once

#include <concepts>
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
#include "lzcrystal/util.hpp"

namespace lzc {

/// A crystal is presented as a model object acting on immutable element
/// values: weight, raising/lowering operators e_i/f_i (null = absent
/// arrow), string statistics epsilon_i/phi_i, per-factor z-grades and
/// their classical projection, and a stable printable label.  Elements
/// must carry a total deterministic order so graphs and sums have
/// canonical keys.
template <typename M>
concept CrystalModel = requires(const M& m, const typename M::Element& x, int i) {
    typename M::Element;
    requires std::totally_ordered<typename M::Element>;
    { m.datum() } -> std::convertible_to<const CartanDatum&>;
    { m.min_color() } -> std::convertible_to<int>;
    { m.max_color() } -> std::convertible_to<int>;
    { m.weight(x) } -> std::convertible_to<Weight>;
    { m.e(i, x) } -> std::convertible_to<std::optional<typename M::Element>>;
    { m.f(i, x) } -> std::convertible_to<std::optional<typename M::Element>>;
    { m.epsilon(i, x) } -> std::convertible_to<Int>;
    { m.phi(i, x) } -> std::convertible_to<Int>;
    { m.grades(x) } -> std::convertible_to<std::vector<Int>>;
    { m.strip_grades(x) } -> std::convertible_to<typename M::Element>;
    { m.label(x) } -> std::convertible_to<std::string>;
};

template <CrystalModel M>
Int total_grade(const M& m, const typename M::Element& x) {
    Int acc = 0;
    for (Int g : m.grades(x)) acc = checked_add(acc, g);
    return acc;
}

/// Grade window for exploring infinite (affinized) crystals: elements
/// with total z-grade outside [min_grade, max_grade] are recorded but
/// never expanded, and a hard node cap guards against runaway growth.
struct Window {
    Int min_grade = 0;
    Int max_grade = 0;
    std::size_t node_cap = 100000;
};

/// Colored directed graph of f-arrows discovered by exploration.  Node
/// ids are BFS discovery order; `truncated` marks nodes that were not
/// expanded (outside the window or beyond the node cap).
template <typename E>
struct CrystalGraph {
    struct Edge {
        int src;
        int dst;
        int color;
        auto operator<=>(const Edge&) const = default;
    };

    std::vector<E> nodes;
    std::vector<bool> truncated;
    std::vector<Edge> edges;  // sorted, deduplicated
    bool cap_exceeded = false;

    int find(const E& x) const {
        auto it = index_.find(x);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const E& x) const { return find(x) >= 0; }

    std::size_t size() const { return nodes.size(); }
    std::size_t expanded_count() const {
        std::size_t c = 0;
        for (bool t : truncated)
            if (!t) ++c;
        return c;
    }
    std::vector<int> truncated_ids() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(nodes.size()); ++v)
            if (truncated[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    /// Undirected adjacency over non-truncated nodes only: a connecting
    /// path that leaves the window is not a path.
    std::vector<std::vector<int>> expanded_adjacency() const {
        std::vector<std::vector<int>> adj(nodes.size());
        for (const auto& ed : edges) {
            if (truncated[static_cast<std::size_t>(ed.src)] || truncated[static_cast<std::size_t>(ed.dst)]) continue;
            adj[static_cast<std::size_t>(ed.src)].push_back(ed.dst);
            adj[static_cast<std::size_t>(ed.dst)].push_back(ed.src);
        }
        return adj;
    }

    // internal, used by explore()
    std::map<E, int> index_;
};

/// BFS closure of a seed under all e_i, f_i inside the window.  For each
/// expanded node both directions are probed per color, colors ascending,
/// e before f; each f-arrow is recorded once as (src -> dst, color).
/// Nodes whose grade falls outside the window (or that would exceed the
/// node cap) are kept as truncated frontier markers, never expanded.
template <CrystalModel M>
CrystalGraph<typename M::Element> explore(const M& m, const typename M::Element& seed, const Window& w) {
    using E = typename M::Element;
    CrystalGraph<E> g;
    auto in_window = [&](const E& x) {
        Int t = total_grade(m, x);
        return t >= w.min_grade && t <= w.max_grade;
    };
    std::deque<int> queue;
    auto add_node = [&](const E& x) -> int {
        auto it = g.index_.find(x);
        if (it != g.index_.end()) return it->second;
        if (g.nodes.size() >= w.node_cap) {
            g.cap_exceeded = true;
            return -1;
        }
        int id = static_cast<int>(g.nodes.size());
        g.nodes.push_back(x);
        g.truncated.push_back(!in_window(x));
        g.index_.emplace(x, id);
        if (!g.truncated[static_cast<std::size_t>(id)]) queue.push_back(id);
        return id;
    };

    std::set<typename CrystalGraph<E>::Edge> edges;
    add_node(seed);
    while (!queue.empty()) {
        int uid = queue.front();
        queue.pop_front();
        const E u = g.nodes[static_cast<std::size_t>(uid)];
        for (int color = m.min_color(); color <= m.max_color(); ++color) {
            if (auto up = m.e(color, u)) {
                int vid = add_node(*up);
                if (vid >= 0) edges.insert({vid, uid, color});
            }
            if (auto down = m.f(color, u)) {
                int vid = add_node(*down);
                if (vid >= 0) edges.insert({uid, vid, color});
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

/// Result of the axiom audit: success, or the first violated clause
/// with the offending node and color.
struct AxiomReport {
    bool ok = true;
    std::string clause;
    std::string node_label;
    int color = -1;

    std::string str() const {
        if (ok) return "all crystal axioms hold";
        std::ostringstream os;
        os << "violation at node " << node_label << ", color " << color << ": " << clause;
        return os.str();
    }
};

namespace detail {

template <CrystalModel M>
Int walk_string(const M& m, int color, typename M::Element x, bool up) {
    constexpr Int kStringCap = 100000;
    Int n = 0;
    while (true) {
        auto next = up ? m.e(color, x) : m.f(color, x);
        if (!next) return n;
        x = *next;
        if (++n > kStringCap) throw std::runtime_error("walk_string: string does not terminate");
    }
}

}  // namespace detail

/// Verifies, on every non-truncated node of the graph, that e/f are
/// mutually inverse, that weights shift by the simple roots, that
/// phi - epsilon matches the coroot pairing, that epsilon/phi equal the
/// actual string lengths, and that the recorded edges agree with the
/// model.  Stops at the first counterexample.
template <CrystalModel M>
AxiomReport check_axioms(const M& m, const CrystalGraph<typename M::Element>& g) {
    const CartanDatum& datum = m.datum();
    auto fail = [&](const typename M::Element& x, int color, std::string clause) {
        return AxiomReport{false, std::move(clause), m.label(x), color};
    };

    std::set<typename CrystalGraph<typename M::Element>::Edge> recorded(g.edges.begin(), g.edges.end());
    for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id) {
        if (g.truncated[static_cast<std::size_t>(id)]) continue;
        const auto& x = g.nodes[static_cast<std::size_t>(id)];
        const Weight wx = m.weight(x);
        for (int color = m.min_color(); color <= m.max_color(); ++color) {
            const Weight alpha = datum.simple_root(color);
            if (auto down = m.f(color, x)) {
                auto back = m.e(color, *down);
                if (!back || !(*back == x)) return fail(x, color, "e(f(x)) != x");
                if (m.weight(*down) != wx - alpha) return fail(x, color, "wt(f(x)) != wt(x) - alpha");
                int vid = g.find(*down);
                if (vid >= 0 && !recorded.contains({id, vid, color}))
                    return fail(x, color, "model f-arrow missing from graph");
            }
            if (auto up = m.e(color, x)) {
                auto back = m.f(color, *up);
                if (!back || !(*back == x)) return fail(x, color, "f(e(x)) != x");
                if (m.weight(*up) != wx + alpha) return fail(x, color, "wt(e(x)) != wt(x) + alpha");
            }
            const Int eps = m.epsilon(color, x);
            const Int ph = m.phi(color, x);
            if (ph - eps != wx.pairing(color)) return fail(x, color, "phi - epsilon != <h_i, wt>");
            if (eps != detail::walk_string(m, color, x, true)) return fail(x, color, "epsilon != e-string length");
            if (ph != detail::walk_string(m, color, x, false)) return fail(x, color, "phi != f-string length");
        }
    }
    // recorded edges must be genuine f-arrows of the model
    for (const auto& ed : g.edges) {
        if (g.truncated[static_cast<std::size_t>(ed.src)]) continue;
        const auto& u = g.nodes[static_cast<std::size_t>(ed.src)];
        auto down = m.f(ed.color, u);
        if (!down || !(*down == g.nodes[static_cast<std::size_t>(ed.dst)]))
            return AxiomReport{false, "graph edge is not a model f-arrow", m.label(u), ed.color};
    }
    return {};
}

enum class TensorRule { Binary, Signature };

namespace detail {

// epsilon/phi of the tensor prefix b_1 x ... x b_k, folded left to right
template <CrystalModel M>
std::pair<Int, Int> fold_eps_phi(const std::vector<M>& factors, int color,
                                 const std::vector<typename M::Element>& x, std::size_t count) {
    Int eps = 0, phi = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const Int ek = factors[k].epsilon(color, x[k]);
        const Int pk = factors[k].phi(color, x[k]);
        const Int new_eps = eps + std::max<Int>(0, ek - phi);
        const Int new_phi = pk + std::max<Int>(0, phi - ek);
        eps = new_eps;
        phi = new_phi;
    }
    return {eps, phi};
}

}  // namespace detail

/// Tensor product of crystals sharing one Cartan datum, with elements as
/// flat factor lists.  Both standard realizations of the operators are
/// provided and must agree: the left-associated binary rule
///   e(b1 x b2) = e(b1) x b2  if phi(b1) >= eps(b2), else b1 x e(b2)
///   f(b1 x b2) = f(b1) x b2  if phi(b1) >  eps(b2), else b1 x f(b2)
/// and the signature rule (per factor, epsilon_k minus signs then phi_k
/// plus signs; cancel "+-" pairs; e acts at the rightmost surviving
/// minus, f at the leftmost surviving plus).
///
/// `reversed` flips which factor the operators act on without touching
/// the epsilon/phi bookkeeping; it exists solely so the verification
/// harness can demonstrate that such a convention bug is caught.
template <CrystalModel M>
class TensorProduct {
public:
    using Element = std::vector<typename M::Element>;

    explicit TensorProduct(std::vector<M> factors, TensorRule rule = TensorRule::Signature, bool reversed = false)
        : factors_(std::move(factors)), rule_(rule), reversed_(reversed) {
        if (factors_.empty()) throw std::invalid_argument("TensorProduct: need at least one factor");
        for (const auto& fac : factors_) {
            if (fac.datum().matrix() != factors_[0].datum().matrix())
                throw std::invalid_argument("TensorProduct: mismatched Cartan data");
            if (fac.min_color() != factors_[0].min_color() || fac.max_color() != factors_[0].max_color())
                throw std::invalid_argument("TensorProduct: mismatched color ranges");
        }
    }

    const std::vector<M>& factors() const { return factors_; }
    TensorRule rule() const { return rule_; }

    const CartanDatum& datum() const { return factors_[0].datum(); }
    int min_color() const { return factors_[0].min_color(); }
    int max_color() const { return factors_[0].max_color(); }

    Weight weight(const Element& x) const {
        check_arity(x);
        Weight acc = Weight::zero(datum().rank());
        for (std::size_t k = 0; k < factors_.size(); ++k) acc += factors_[k].weight(x[k]);
        return acc;
    }

    Int epsilon(int color, const Element& x) const {
        check_arity(x);
        return detail::fold_eps_phi(factors_, color, x, factors_.size()).first;
    }
    Int phi(int color, const Element& x) const {
        check_arity(x);
        return detail::fold_eps_phi(factors_, color, x, factors_.size()).second;
    }

    std::optional<Element> e(int color, const Element& x) const {
        check_arity(x);
        int k = rule_ == TensorRule::Binary ? pick_binary(color, x, true) : pick_signature(color, x, true);
        return apply_at(color, x, k, true);
    }
    std::optional<Element> f(int color, const Element& x) const {
        check_arity(x);
        int k = rule_ == TensorRule::Binary ? pick_binary(color, x, false) : pick_signature(color, x, false);
        return apply_at(color, x, k, false);
    }

    std::vector<Int> grades(const Element& x) const {
        check_arity(x);
        std::vector<Int> out;
        for (std::size_t k = 0; k < factors_.size(); ++k)
            for (Int gr : factors_[k].grades(x[k])) out.push_back(gr);
        return out;
    }

    Element strip_grades(const Element& x) const {
        check_arity(x);
        Element out(x.size());
        for (std::size_t k = 0; k < factors_.size(); ++k) out[k] = factors_[k].strip_grades(x[k]);
        return out;
    }

    std::string label(const Element& x) const {
        check_arity(x);
        std::string out;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) out += 'x';
            out += factors_[k].label(x[k]);
        }
        return out;
    }

private:
    void check_arity(const Element& x) const {
        if (x.size() != factors_.size()) throw std::invalid_argument("TensorProduct: factor count mismatch");
    }

    // factor index the operator acts on, or -1 for null; walks the
    // left-associated bracketing, peeling the rightmost factor per step
    int pick_binary(int color, const Element& x, bool up) const {
        const std::size_t n = factors_.size();
        auto [eps, phi] = detail::fold_eps_phi(factors_, color, x, n);
        if (up ? eps == 0 : phi == 0) return -1;
        std::size_t hi = n;
        while (hi > 1) {
            const Int left_phi = detail::fold_eps_phi(factors_, color, x, hi - 1).second;
            const Int right_eps = factors_[hi - 1].epsilon(color, x[hi - 1]);
            bool act_left = up ? (left_phi >= right_eps) : (left_phi > right_eps);
            if (reversed_) act_left = !act_left;
            if (!act_left) return static_cast<int>(hi - 1);
            --hi;
        }
        return 0;
    }

    int pick_signature(int color, const Element& x, bool up) const {
        std::vector<int> minus_owner;   // surviving '-' symbols, left to right
        std::vector<int> plus_stack;    // surviving '+' symbols, left to right
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            const Int ek = factors_[k].epsilon(color, x[k]);
            const Int pk = factors_[k].phi(color, x[k]);
            for (Int t = 0; t < ek; ++t) {
                if (!plus_stack.empty())
                    plus_stack.pop_back();
                else
                    minus_owner.push_back(static_cast<int>(k));
            }
            for (Int t = 0; t < pk; ++t) plus_stack.push_back(static_cast<int>(k));
        }
        if (up) {
            if (minus_owner.empty()) return -1;
            return reversed_ ? minus_owner.front() : minus_owner.back();
        }
        if (plus_stack.empty()) return -1;
        return reversed_ ? plus_stack.back() : plus_stack.front();
    }

    std::optional<Element> apply_at(int color, const Element& x, int k, bool up) const {
        if (k < 0) return std::nullopt;
        auto moved = up ? factors_[static_cast<std::size_t>(k)].e(color, x[static_cast<std::size_t>(k)])
                        : factors_[static_cast<std::size_t>(k)].f(color, x[static_cast<std::size_t>(k)]);
        if (!moved) throw std::logic_error("TensorProduct: chosen factor refuses the operator");
        Element out = x;
        out[static_cast<std::size_t>(k)] = *moved;
        return out;
    }

    std::vector<M> factors_;
    TensorRule rule_;
    bool reversed_;
};

/// Two-factor tensor over possibly different models; exists so that
/// re-bracketed products like (B1 x B2) x B3 can be built literally and
/// compared against the flat product.
template <CrystalModel M1, CrystalModel M2>
class PairTensor {
public:
    using Element = std::pair<typename M1::Element, typename M2::Element>;

    PairTensor(M1 left, M2 right) : left_(std::move(left)), right_(std::move(right)) {
        if (left_.datum().matrix() != right_.datum().matrix())
            throw std::invalid_argument("PairTensor: mismatched Cartan data");
        if (left_.min_color() != right_.min_color() || left_.max_color() != right_.max_color())
            throw std::invalid_argument("PairTensor: mismatched color ranges");
    }

    const M1& left() const { return left_; }
    const M2& right() const { return right_; }

    const CartanDatum& datum() const { return left_.datum(); }
    int min_color() const { return left_.min_color(); }
    int max_color() const { return left_.max_color(); }

    Weight weight(const Element& x) const { return left_.weight(x.first) + right_.weight(x.second); }

    Int epsilon(int color, const Element& x) const {
        const Int e1 = left_.epsilon(color, x.first);
        const Int p1 = left_.phi(color, x.first);
        const Int e2 = right_.epsilon(color, x.second);
        return e1 + std::max<Int>(0, e2 - p1);
    }
    Int phi(int color, const Element& x) const {
        const Int p1 = left_.phi(color, x.first);
        const Int e2 = right_.epsilon(color, x.second);
        const Int p2 = right_.phi(color, x.second);
        return p2 + std::max<Int>(0, p1 - e2);
    }

    std::optional<Element> e(int color, const Element& x) const {
        if (left_.phi(color, x.first) >= right_.epsilon(color, x.second)) {
            auto up = left_.e(color, x.first);
            if (!up) return std::nullopt;
            return Element{*up, x.second};
        }
        auto up = right_.e(color, x.second);
        if (!up) return std::nullopt;
        return Element{x.first, *up};
    }
    std::optional<Element> f(int color, const Element& x) const {
        if (left_.phi(color, x.first) > right_.epsilon(color, x.second)) {
            auto down = left_.f(color, x.first);
            if (!down) return std::nullopt;
            return Element{*down, x.second};
        }
        auto down = right_.f(color, x.second);
        if (!down) return std::nullopt;
        return Element{x.first, *down};
    }

    std::vector<Int> grades(const Element& x) const {
        std::vector<Int> out = left_.grades(x.first);
        for (Int g : right_.grades(x.second)) out.push_back(g);
        return out;
    }
    Element strip_grades(const Element& x) const {
        return {left_.strip_grades(x.first), right_.strip_grades(x.second)};
    }
    std::string label(const Element& x) const { return left_.label(x.first) + "x" + right_.label(x.second); }

private:
    M1 left_;
    M2 right_;
};

}  // namespace lzc
