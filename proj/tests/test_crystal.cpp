#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <tuple>

#include "lzcrystal/crystal.hpp"
#include "lzcrystal/kr.hpp"

using namespace lzc;

namespace {

AffineColumn ac(std::vector<int> cells, Int grade) { return {Column{std::move(cells)}, grade}; }

TensorProduct<AffineColumnCrystal> affine_tensor(const CartanDatum& datum, std::vector<int> heights,
                                                 TensorRule rule = TensorRule::Signature) {
    std::vector<AffineColumnCrystal> factors;
    for (int h : heights) factors.emplace_back(datum, h);
    return TensorProduct<AffineColumnCrystal>(std::move(factors), rule);
}

}  // namespace

TEST_CASE("tensor rule on the pinned sl2 example") {
    auto a1 = CartanDatum::affine_a(1);
    for (auto rule : {TensorRule::Binary, TensorRule::Signature}) {
        auto tensor = affine_tensor(a1, {1, 1}, rule);
        std::vector<AffineColumn> x{ac({1}, 0), ac({1}, 0)};
        auto down = tensor.f(1, x);
        REQUIRE(down.has_value());
        CHECK((*down)[0] == ac({2}, 0));  // moves the left factor
        CHECK((*down)[1] == ac({1}, 0));
        CHECK(!tensor.e(1, x).has_value());  // string top
    }
}

TEST_CASE("epsilon bookkeeping identity on tensors") {
    auto a2 = CartanDatum::affine_a(2);
    auto tensor = affine_tensor(a2, {1, 2});
    AffineColumnCrystal left(a2, 1);
    AffineColumnCrystal right(a2, 2);
    auto graph = explore(tensor, {left.seed(), right.seed()}, Window{-1, 1, 10000});
    REQUIRE(graph.size() > 10);
    for (const auto& x : graph.nodes) {
        for (int color = 0; color <= 2; ++color) {
            const Int e1 = left.epsilon(color, x[0]);
            const Int p1 = left.phi(color, x[0]);
            const Int e2 = right.epsilon(color, x[1]);
            const Int p2 = right.phi(color, x[1]);
            CHECK(tensor.epsilon(color, x) == e1 + std::max<Int>(0, e2 - p1));
            CHECK(tensor.phi(color, x) == p2 + std::max<Int>(0, p1 - e2));
            // epsilon equals the actual e-string length
            Int steps = 0;
            auto cur = x;
            while (auto up = tensor.e(color, cur)) {
                cur = *up;
                ++steps;
            }
            CHECK(steps == tensor.epsilon(color, x));
        }
    }
}

TEST_CASE("explore windows on the fundamental crystal") {
    auto a2 = CartanDatum::affine_a(2);
    AffineColumnCrystal kr(a2, 1);

    auto classical = explore(kr, kr.seed(), Window{0, 0, 1000});
    CHECK(classical.expanded_count() == 3);
    // classical edges: 1 ->(1) 2 ->(2) 3
    std::set<std::pair<std::string, int>> edge_set;
    for (const auto& ed : classical.edges)
        if (!classical.truncated[static_cast<std::size_t>(ed.src)] &&
            !classical.truncated[static_cast<std::size_t>(ed.dst)])
            edge_set.insert({kr.label(classical.nodes[static_cast<std::size_t>(ed.src)]), ed.color});
    CHECK(edge_set == std::set<std::pair<std::string, int>>{{"[1|m=0]", 1}, {"[2|m=0]", 2}});

    auto two_layers = explore(kr, kr.seed(), Window{-1, 0, 1000});
    CHECK(two_layers.expanded_count() == 6);

    // empty window: seed kept, marked truncated, nothing expanded
    auto empty = explore(kr, kr.seed(), Window{-3, -1, 1000});
    CHECK(empty.size() == 1);
    CHECK(empty.truncated[0]);
    CHECK(empty.edges.empty());
}

TEST_CASE("node cap reports truncation explicitly") {
    auto a2 = CartanDatum::affine_a(2);
    AffineColumnCrystal kr(a2, 1);
    auto capped = explore(kr, kr.seed(), Window{-5, 5, 4});
    CHECK(capped.cap_exceeded);
    CHECK(capped.size() <= 4);
}

TEST_CASE("axiom audit passes on KR crystals and tensors") {
    for (int n = 1; n <= 3; ++n) {
        auto d = CartanDatum::affine_a(n);
        for (int i = 1; i <= n; ++i) {
            AffineColumnCrystal kr(d, i);
            auto graph = explore(kr, kr.seed(), Window{-2, 2, 100000});
            auto report = check_axioms(kr, graph);
            INFO(report.str());
            CHECK(report.ok);
        }
    }
    auto a2 = CartanDatum::affine_a(2);
    auto tensor = affine_tensor(a2, {1, 2});
    auto graph = explore(tensor, {AffineColumnCrystal(a2, 1).seed(), AffineColumnCrystal(a2, 2).seed()},
                         Window{-2, 1, 100000});
    auto report = check_axioms(tensor, graph);
    INFO(report.str());
    CHECK(report.ok);
}

TEST_CASE("axiom audit reports corrupted edges") {
    auto a2 = CartanDatum::affine_a(2);
    AffineColumnCrystal kr(a2, 1);
    auto graph = explore(kr, kr.seed(), Window{0, 0, 1000});
    REQUIRE(graph.edges.size() >= 2);
    auto corrupted = graph;
    std::swap(corrupted.edges[0].dst, corrupted.edges[1].dst);
    auto report = check_axioms(kr, corrupted);
    CHECK(!report.ok);
    CHECK(report.color >= 0);
    CHECK(!report.node_label.empty());
}

TEST_CASE("binary and signature rules agree everywhere explored") {
    auto a2 = CartanDatum::affine_a(2);
    auto binary = affine_tensor(a2, {1, 1, 2}, TensorRule::Binary);
    auto signature = affine_tensor(a2, {1, 1, 2}, TensorRule::Signature);
    std::vector<AffineColumn> seed{ac({1}, 0), ac({1}, 0), ac({1, 2}, 0)};
    auto graph = explore(signature, seed, Window{-2, 1, 100000});
    REQUIRE(graph.size() > 50);
    for (const auto& x : graph.nodes)
        for (int color = 0; color <= 2; ++color) {
            CHECK(binary.e(color, x) == signature.e(color, x));
            CHECK(binary.f(color, x) == signature.f(color, x));
        }
}

TEST_CASE("re-bracketing is a colored graph isomorphism") {
    auto a2 = CartanDatum::affine_a(2);
    AffineColumnCrystal f1(a2, 1), f2(a2, 1), f3(a2, 2);

    PairTensor left_pair(f1, f2);
    PairTensor left_assoc(left_pair, f3);
    PairTensor right_pair(f2, f3);
    PairTensor right_assoc(f1, right_pair);
    auto flat = affine_tensor(a2, {1, 1, 2}, TensorRule::Binary);

    Window w{-1, 1, 100000};
    auto g_flat = explore(flat, {ac({1}, 0), ac({1}, 0), ac({1, 2}, 0)}, w);
    auto g_left = explore(left_assoc, {{ac({1}, 0), ac({1}, 0)}, ac({1, 2}, 0)}, w);
    auto g_right = explore(right_assoc, {ac({1}, 0), {ac({1}, 0), ac({1, 2}, 0)}}, w);

    REQUIRE(g_flat.size() > 20);
    CHECK(g_flat.size() == g_left.size());
    CHECK(g_flat.size() == g_right.size());

    // canonical bijection: identical flattened labels
    auto edge_labels = [](const auto& model, const auto& graph) {
        std::set<std::tuple<std::string, std::string, int>> out;
        for (const auto& ed : graph.edges)
            out.insert({model.label(graph.nodes[static_cast<std::size_t>(ed.src)]),
                        model.label(graph.nodes[static_cast<std::size_t>(ed.dst)]), ed.color});
        return out;
    };
    CHECK(edge_labels(flat, g_flat) == edge_labels(left_assoc, g_left));
    CHECK(edge_labels(flat, g_flat) == edge_labels(right_assoc, g_right));
}

TEST_CASE("connectivity is symmetric on explored graphs") {
    auto a2 = CartanDatum::affine_a(2);
    auto tensor = affine_tensor(a2, {1, 1});
    auto graph = explore(tensor, {ac({1}, 0), ac({1}, 0)}, Window{-1, 0, 100000});
    auto adj = graph.expanded_adjacency();
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) {
            bool back = false;
            for (int w : adj[static_cast<std::size_t>(v)])
                if (w == static_cast<int>(u)) back = true;
            CHECK(back);
        }
}

TEST_CASE("mismatched Cartan data rejected") {
    auto a1 = CartanDatum::affine_a(1);
    auto a2 = CartanDatum::affine_a(2);
    std::vector<AffineColumnCrystal> factors;
    factors.emplace_back(a1, 1);
    factors.emplace_back(a2, 1);
    CHECK_THROWS_AS(TensorProduct<AffineColumnCrystal>(std::move(factors)), std::invalid_argument);
}
