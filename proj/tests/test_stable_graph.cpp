#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cyfeyn/errors.hpp"
#include "cyfeyn/stable_graph.hpp"

#include "graph_oracle.hpp"

using namespace cyfeyn;
using cytest::fact;
using cytest::find_graph;
using cytest::labeled_counts;

TEST_CASE("unstable pairs are rejected") {
    CHECK_THROWS_AS(enumerate(0, 0), UnstablePair);
    CHECK_THROWS_AS(enumerate(0, 1), UnstablePair);
    CHECK_THROWS_AS(enumerate(0, 2), UnstablePair);
    CHECK_THROWS_AS(enumerate(1, 0), UnstablePair);
    CHECK_THROWS_AS(enumerate(-1, 3), ConfigError);
}

TEST_CASE("small enumerations") {
    const auto& g03 = enumerate(0, 3);
    REQUIRE(g03.size() == 1);
    CHECK(g03[0].genus == std::vector<int>{0});
    CHECK(g03[0].edges.empty());
    CHECK(g03[0].legs == std::vector<int>{0, 0, 0});
    CHECK(aut_order(g03[0]) == 1);

    const auto& g11 = enumerate(1, 1);
    REQUIRE(g11.size() == 2);
    const StableGraph* smooth = find_graph(g11, 1, 0, {1});
    const StableGraph* loop = find_graph(g11, 1, 1, {0});
    REQUIRE(smooth != nullptr);
    REQUIRE(loop != nullptr);
    CHECK(aut_order(*smooth) == 1);
    CHECK(aut_order(*loop) == 2);
    CHECK(loop->edges == std::vector<std::pair<int, int>>{{0, 0}});

    const auto& g04 = enumerate(0, 4);
    // One 4-legged vertex plus the three ways to split the legs 2|2 over an
    // edge (legs are fixed pointwise, so the splits are distinct classes).
    CHECK(g04.size() == 4);
}

TEST_CASE("genus-2 enumeration: the seven classes") {
    const auto& g20 = enumerate(2, 0);
    REQUIRE(g20.size() == 7);

    std::map<int, int> byEdges;
    for (const auto& G : g20) byEdges[G.num_edges()] += 1;
    CHECK(byEdges[0] == 1);
    CHECK(byEdges[1] == 2);
    CHECK(byEdges[2] == 2);
    CHECK(byEdges[3] == 2);

    const StableGraph* smooth = find_graph(g20, 1, 0, {2});
    const StableGraph* irred1 = find_graph(g20, 1, 1, {1});   // genus-1 with loop
    const StableGraph* banana = find_graph(g20, 2, 1, {1, 1}); // g1 -- g1
    const StableGraph* twoLoops = find_graph(g20, 1, 2, {0});
    const StableGraph* loopTail = find_graph(g20, 2, 2, {0, 1});
    REQUIRE(smooth != nullptr);
    REQUIRE(irred1 != nullptr);
    REQUIRE(banana != nullptr);
    REQUIRE(twoLoops != nullptr);
    REQUIRE(loopTail != nullptr);
    CHECK(aut_order(*smooth) == 1);
    CHECK(aut_order(*irred1) == 2);
    CHECK(aut_order(*banana) == 2);
    CHECK(aut_order(*twoLoops) == 8); // 2! loop swap x 2^2 half-edge flips
    CHECK(aut_order(*loopTail) == 2);

    // Theta and dumbbell both have 2 vertices of genus 0 and 3 edges.
    int thetaAut = 0, dumbbellAut = 0;
    for (const auto& G : g20) {
        if (G.num_edges() != 3) continue;
        const bool hasLoop =
            std::any_of(G.edges.begin(), G.edges.end(),
                        [](const std::pair<int, int>& p) { return p.first == p.second; });
        if (hasLoop)
            dumbbellAut = static_cast<int>(aut_order(G));
        else
            thetaAut = static_cast<int>(aut_order(G));
    }
    CHECK(thetaAut == 12);   // vertex swap x 3! parallel edges
    CHECK(dumbbellAut == 8); // vertex swap x 2 loop flips x 2
}

TEST_CASE("every enumerated graph is valid, canonical, and of the right type") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 0; n <= 3; ++n) {
            if (2 * g - 2 + n <= 0) continue;
            for (const auto& G : enumerate(g, n)) {
                std::string why;
                CHECK_MESSAGE(graph_valid(G, &why), graph_str(G), ": ", why);
                CHECK(G.total_genus() == g);
                CHECK(G.num_legs() == n);
                CHECK(canonical_form(G) == G);
            }
        }
}

TEST_CASE("canonical form is relabeling-invariant") {
    // Dumbbell, labeled two ways.
    StableGraph a;
    a.genus = {0, 0};
    a.edges = {{0, 0}, {0, 1}, {1, 1}};
    a.legs = {};
    StableGraph b = a; // same by symmetry of the shape
    CHECK(canonical_form(a) == canonical_form(b));

    // Loop-tail graph with the two vertices swapped.
    StableGraph c;
    c.genus = {0, 1};
    c.edges = {{0, 0}, {0, 1}};
    StableGraph d;
    d.genus = {1, 0};
    d.edges = {{0, 1}, {1, 1}};
    CHECK(canonical_form(c) == canonical_form(d));
    CHECK(canonical_form(c).total_genus() == 2);

    // Legged graphs: swapping vertices must rename leg targets.
    StableGraph e;
    e.genus = {0, 1};
    e.edges = {{0, 1}};
    e.legs = {0, 0};
    StableGraph f;
    f.genus = {1, 0};
    f.edges = {{0, 1}};
    f.legs = {1, 1};
    CHECK(canonical_form(e) == canonical_form(f));
    StableGraph h = e;
    h.legs = {0, 1}; // genuinely different: legs are pointwise-fixed
    CHECK(canonical_form(h) != canonical_form(e));
}

TEST_CASE("serialization format") {
    const auto& g11 = enumerate(1, 1);
    const StableGraph* loop = find_graph(g11, 1, 1, {0});
    REQUIRE(loop != nullptr);
    CHECK(graph_str(*loop) == "V:[0] E:[(0,0)] L:[0]");
    const StableGraph* smooth = find_graph(g11, 1, 0, {1});
    CHECK(graph_str(*smooth) == "V:[1] E:[] L:[0]");
}

TEST_CASE("labeled-configuration counts match 1/|Aut| weights") {
    for (const auto& [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {2, 1}}) {
        CAPTURE(g);
        CAPTURE(n);
        const auto counts = labeled_counts(g, n);
        const auto& classes = enumerate(g, n);
        CHECK(counts.size() == classes.size());
        for (const auto& G : classes) {
            CAPTURE(graph_str(G));
            auto it = counts.find(G);
            REQUIRE(it != counts.end());
            long expected = fact(G.num_vertices()) * fact(G.num_edges());
            for (int i = 0; i < G.num_edges(); ++i) expected *= 2;
            CHECK(expected % aut_order(G) == 0);
            CHECK(it->second == expected / aut_order(G));
        }
    }
}
