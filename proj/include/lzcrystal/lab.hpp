#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lzcrystal/cartan.hpp"
#include "lzcrystal/crystal.hpp"
#include "lzcrystal/kr.hpp"
#include "lzcrystal/partition.hpp"
#include "lzcrystal/polynomial.hpp"
#include "lzcrystal/weyl.hpp"

namespace lzc {

/// Dominant level-zero weight lambda = sum m_i varpi_i, given by its
/// multiplicities; the caps l(rho^(i)) <= <h_i, lambda> = m_i downstream
/// are exactly these multiplicities.
struct LambdaSpec {
    std::vector<int> multiplicities;  // m_1..m_n

    explicit LambdaSpec(std::vector<int> m) : multiplicities(std::move(m)) {
        Int total = 0;
        for (int v : multiplicities) {
            if (v < 0) throw std::invalid_argument("LambdaSpec: negative multiplicity");
            total += v;
        }
        if (multiplicities.empty() || total < 1)
            throw std::invalid_argument("LambdaSpec: need at least one factor");
    }

    int rank() const { return static_cast<int>(multiplicities.size()); }
    int total_factors() const {
        return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    }
    std::vector<int> caps() const { return multiplicities; }

    Weight weight(const CartanDatum& datum) const {
        if (datum.rank() != rank()) throw std::invalid_argument("LambdaSpec: rank mismatch");
        Weight w = Weight::zero(datum.rank());
        for (int i = 1; i <= rank(); ++i)
            w += Int{multiplicities[static_cast<std::size_t>(i - 1)]} * datum.level_zero_fundamental(i);
        return w;
    }

    /// Flat factor index of copy nu (1-based) of color i.
    int factor_index(int i, int nu) const {
        if (i < 1 || i > rank()) throw std::out_of_range("LambdaSpec: color out of range");
        if (nu < 1 || nu > multiplicities[static_cast<std::size_t>(i - 1)])
            throw std::out_of_range("LambdaSpec: copy index out of range");
        int off = 0;
        for (int j = 1; j < i; ++j) off += multiplicities[static_cast<std::size_t>(j - 1)];
        return off + nu - 1;
    }
};

using TensorElement = std::vector<AffineColumn>;
using WPrimeCrystal = TensorProduct<AffineColumnCrystal>;

/// Options threaded to the underlying models; the two mutation switches
/// are only ever set by the verification harness.
struct LabOptions {
    TensorRule rule = TensorRule::Signature;
    bool reversed_tensor = false;
    Int zero_arrow_step = -1;
};

/// B(W') = tensor over colors i of Aff(B^{i,1})^{x m_i}, factors ordered
/// by color ascending then copy ascending.
inline WPrimeCrystal wprime_crystal(const CartanDatum& datum, const LambdaSpec& spec, const LabOptions& opt = {}) {
    if (datum.rank() != spec.rank()) throw std::invalid_argument("wprime_crystal: rank mismatch");
    std::vector<AffineColumnCrystal> factors;
    for (int i = 1; i <= spec.rank(); ++i)
        for (int nu = 0; nu < spec.multiplicities[static_cast<std::size_t>(i - 1)]; ++nu)
            factors.emplace_back(datum, i, opt.zero_arrow_step);
    return WPrimeCrystal(std::move(factors), opt.rule, opt.reversed_tensor);
}

/// u' = tensor of the u_{varpi_i}, all at grade zero; wt(u') = lambda.
inline TensorElement u_prime(const WPrimeCrystal& crystal) {
    TensorElement out;
    out.reserve(crystal.factors().size());
    for (const auto& fac : crystal.factors()) out.push_back(fac.seed());
    return out;
}

/// Connected component B_0(W') of u' within the window.
inline CrystalGraph<TensorElement> enumerate_component(const WPrimeCrystal& crystal, const Window& window) {
    return explore(crystal, u_prime(crystal), window);
}

inline TensorElement shift_factor(const TensorElement& x, int index, Int k) {
    TensorElement out = x;
    auto& fac = out.at(static_cast<std::size_t>(index));
    fac = shifted(fac, k);
    return out;
}

inline TensorElement shift_all(const TensorElement& x, Int k) {
    TensorElement out = x;
    for (auto& fac : out) fac = shifted(fac, k);
    return out;
}

/// True when x is a z-monomial shift of u': every column is the top
/// column of its factor, grades arbitrary.
inline bool is_z_shift_of_u_prime(const WPrimeCrystal& crystal, const TensorElement& x) {
    const auto& factors = crystal.factors();
    if (x.size() != factors.size()) return false;
    for (std::size_t k = 0; k < factors.size(); ++k)
        if (x[k].column != top_column(factors[k].height())) return false;
    return true;
}

/// All non-truncated elements of the explored component passing the
/// extremality audit, with their weights.
inline std::vector<std::pair<TensorElement, Weight>> extremal_in_component(
    const WPrimeCrystal& crystal, const CrystalGraph<TensorElement>& graph) {
    std::vector<std::pair<TensorElement, Weight>> out;
    for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
        if (graph.truncated[id]) continue;
        const auto& x = graph.nodes[id];
        if (check_extremal(crystal, x).extremal) out.emplace_back(x, crystal.weight(x));
    }
    return out;
}

/// Formal sum with nonnegative integer coefficients over tensor
/// elements; the q = 0 realization of s_{c0}(z^{-1}) b'.
using FormalSum = std::map<TensorElement, Int>;

/// Expand s_{c0} per color over x_{i,1}..x_{i,m_i}, multiply across
/// colors (disjoint variables), and send each monomial to the copy of
/// base with factor (i,nu)'s grade lowered by the exponent of x_{i,nu}.
/// Empty exactly when some l(rho^(i)) > m_i.
inline FormalSum schur_shift_image(const LambdaSpec& spec, const PartitionTuple& c0, const TensorElement& base) {
    if (c0.colors() != spec.rank()) throw std::invalid_argument("schur_shift_image: color count mismatch");
    if (static_cast<int>(base.size()) != spec.total_factors())
        throw std::invalid_argument("schur_shift_image: factor count mismatch");
    const auto polys = schur_tuple(c0, spec.caps());
    FormalSum acc{{base, 1}};
    for (int i = 1; i <= spec.rank(); ++i) {
        const auto& poly = polys[static_cast<std::size_t>(i - 1)];
        if (poly.is_zero()) return {};
        FormalSum next;
        for (const auto& [mono, coeff] : poly.terms()) {
            for (const auto& [elem, c] : acc) {
                TensorElement shifted_elem = elem;
                for (int nu = 1; nu <= spec.multiplicities[static_cast<std::size_t>(i - 1)]; ++nu) {
                    const int idx = spec.factor_index(i, nu);
                    const Int exp = mono[static_cast<std::size_t>(nu - 1)];
                    if (exp != 0)
                        shifted_elem[static_cast<std::size_t>(idx)] =
                            shifted(shifted_elem[static_cast<std::size_t>(idx)], -exp);
                }
                auto [it, inserted] = next.try_emplace(std::move(shifted_elem), checked_mul(coeff, c));
                if (!inserted) it->second = checked_add(it->second, checked_mul(coeff, c));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

/// One entry of the theorem's index set: the pair (c0, b') and the
/// formal sum realizing s_{c0}(z^{-1}) b'.
struct IndexedImage {
    PartitionTuple c0;
    TensorElement base;
    FormalSum realization;
};

/// All pairs (c0, b') with nonempty realization: c0 ranges over the
/// admissible tuples with |c0| <= max_size in graded-lex order, b' over
/// the non-truncated component nodes in discovery order.
inline std::vector<IndexedImage> build_index_set(const LambdaSpec& spec,
                                                 const CrystalGraph<TensorElement>& graph, int max_size) {
    std::vector<IndexedImage> out;
    for (const auto& c0 : admissible_tuples(spec.caps(), max_size)) {
        for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
            if (graph.truncated[id]) continue;
            FormalSum sum = schur_shift_image(spec, c0, graph.nodes[id]);
            if (!sum.empty()) out.push_back({c0, graph.nodes[id], std::move(sum)});
        }
    }
    return out;
}

/// Exact census keyed by (classical weight, delta degree): the weight's
/// fundamental coordinates and its delta coordinate.
using CharacterTable = std::map<std::pair<std::vector<Int>, Int>, Int>;

template <CrystalModel M>
CharacterTable graded_character(const M& m, const CrystalGraph<typename M::Element>& graph) {
    CharacterTable table;
    for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
        if (graph.truncated[id]) continue;
        const Weight w = m.weight(graph.nodes[id]);
        table[{w.fundamental_coords(), w.delta_coord()}] += 1;
    }
    return table;
}

inline CharacterTable graded_character(const WPrimeCrystal& crystal, const std::vector<IndexedImage>& images) {
    CharacterTable table;
    for (const auto& img : images)
        for (const auto& [elem, coeff] : img.realization) {
            const Weight w = crystal.weight(elem);
            auto& slot = table[{w.fundamental_coords(), w.delta_coord()}];
            slot = checked_add(slot, coeff);
        }
    return table;
}

/// Multi-source connectivity report for the component graph: every
/// non-truncated node should reach some z-monomial shift of u' along a
/// path that stays inside the window.  Nodes that cannot are counted as
/// undetermined (their connecting path may exit the window), never as
/// failures.
struct ConnectivityReport {
    std::size_t expanded = 0;
    std::size_t reached = 0;
    std::vector<int> undetermined_ids;

    bool all_connected() const { return undetermined_ids.empty(); }
};

inline ConnectivityReport connectivity_to_extremal(const WPrimeCrystal& crystal,
                                                   const CrystalGraph<TensorElement>& graph) {
    ConnectivityReport rep;
    const auto adj = graph.expanded_adjacency();
    std::vector<char> reached(graph.nodes.size(), 0);
    std::deque<int> queue;
    for (int id = 0; id < static_cast<int>(graph.nodes.size()); ++id) {
        if (graph.truncated[static_cast<std::size_t>(id)]) continue;
        ++rep.expanded;
        if (is_z_shift_of_u_prime(crystal, graph.nodes[static_cast<std::size_t>(id)])) {
            reached[static_cast<std::size_t>(id)] = 1;
            queue.push_back(id);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<std::size_t>(u)])
            if (!reached[static_cast<std::size_t>(v)]) {
                reached[static_cast<std::size_t>(v)] = 1;
                queue.push_back(v);
            }
    }
    for (int id = 0; id < static_cast<int>(graph.nodes.size()); ++id) {
        if (graph.truncated[static_cast<std::size_t>(id)]) continue;
        if (reached[static_cast<std::size_t>(id)])
            ++rep.reached;
        else
            rep.undetermined_ids.push_back(id);
    }
    return rep;
}

}  // namespace lzc
