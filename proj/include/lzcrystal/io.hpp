#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lzcrystal/cartan.hpp"
#include "lzcrystal/crystal.hpp"
#include "lzcrystal/kr.hpp"
#include "lzcrystal/lab.hpp"
#include "lzcrystal/polynomial.hpp"

namespace lzc {

using json = nlohmann::ordered_json;

inline json weight_to_json(const Weight& w) {
    return json{{"lambda", w.fundamental_coords()}, {"delta", w.delta_coord()}};
}

template <CrystalModel M>
json graph_to_json(const M& m, const CrystalGraph<typename M::Element>& g) {
    json nodes = json::array();
    for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id) {
        const auto& x = g.nodes[static_cast<std::size_t>(id)];
        nodes.push_back(json{{"id", id},
                             {"label", m.label(x)},
                             {"weight", weight_to_json(m.weight(x))},
                             {"grades", m.grades(x)}});
    }
    json edges = json::array();
    for (const auto& ed : g.edges)
        edges.push_back(json{{"src", ed.src}, {"dst", ed.dst}, {"color", ed.color}});
    json out{{"nodes", nodes}, {"edges", edges}, {"truncated", g.truncated_ids()}};
    if (g.cap_exceeded) out["cap_exceeded"] = true;
    return out;
}

template <CrystalModel M>
std::string graph_to_dot(const M& m, const CrystalGraph<typename M::Element>& g) {
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (int id = 0; id < static_cast<int>(g.nodes.size()); ++id) {
        const auto& x = g.nodes[static_cast<std::size_t>(id)];
        os << "  n" << id << " [label=\"" << m.label(x) << "\\nwt=" << m.weight(x).str() << '"';
        if (g.truncated[static_cast<std::size_t>(id)]) os << " style=dashed";
        os << "];\n";
    }
    for (const auto& ed : g.edges)
        os << "  n" << ed.src << " -> n" << ed.dst << " [label=\"" << ed.color << "\"];\n";
    os << "}\n";
    return os.str();
}

inline json formal_sum_to_json(const WPrimeCrystal& crystal, const FormalSum& sum) {
    json out = json::array();
    for (const auto& [elem, coeff] : sum)
        out.push_back(json{{"element", crystal.label(elem)}, {"coeff", coeff}});
    return out;
}

inline json character_to_json(const CharacterTable& table) {
    json out = json::array();
    for (const auto& [key, count] : table)
        out.push_back(json{{"classical", key.first}, {"delta_degree", key.second}, {"count", count}});
    return out;
}

inline json polynomial_to_json(const FormalPolynomial& p) {
    json out = json::array();
    for (const auto& [mono, coeff] : p.terms())
        out.push_back(json{{"monomial", mono}, {"coeff", coeff}});
    return out;
}

/// Parses "[1,3|m=-2]" into an affine column.
inline AffineColumn parse_affine_column(const std::string& text, int rank) {
    auto fail = [&]() -> void { throw std::invalid_argument("bad element encoding: " + text); };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail();
    const std::string body = text.substr(1, text.size() - 2);
    const auto bar = body.find('|');
    if (bar == std::string::npos) fail();
    const std::string cells = body.substr(0, bar);
    const std::string grade_part = body.substr(bar + 1);
    if (grade_part.substr(0, 2) != "m=") fail();

    AffineColumn out;
    std::istringstream cs(cells);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) fail();
        out.column.cells.push_back(v);
    }
    if (out.column.cells.empty()) fail();
    std::size_t used = 0;
    out.grade = std::stoll(grade_part.substr(2), &used);
    if (used != grade_part.size() - 2) fail();
    validate_column(rank, out.column);
    return out;
}

/// Parses "[1|m=0]x[1,2|m=-1]" into a tensor element; the factor heights
/// are the column sizes.
inline TensorElement parse_tensor_element(const std::string& text, int rank) {
    TensorElement out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto close = text.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("bad element encoding: " + text);
        out.push_back(parse_affine_column(text.substr(pos, close - pos + 1), rank));
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != 'x') throw std::invalid_argument("bad element encoding: " + text);
            ++pos;
        }
    }
    if (out.empty()) throw std::invalid_argument("bad element encoding: " + text);
    return out;
}

/// Crystal the encoded element lives in: the tensor of the affinized
/// column crystals with the columns' heights, in the given order.
inline WPrimeCrystal crystal_for_element(const CartanDatum& datum, const TensorElement& x,
                                         TensorRule rule = TensorRule::Signature) {
    std::vector<AffineColumnCrystal> factors;
    factors.reserve(x.size());
    for (const auto& fac : x) factors.emplace_back(datum, static_cast<int>(fac.column.cells.size()));
    return WPrimeCrystal(std::move(factors), rule);
}

}  // namespace lzc
