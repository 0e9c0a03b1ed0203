#include "kpath/generators.hpp"
#include "kpath/kernel_coc.hpp"
#include "kpath/oracle.hpp"
#include "kpath/pipeline.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace kpath;

namespace {

// v1..v14 -> 0..13, x1..x5 -> 14..18
constexpr Vertex v(int i) { return i - 1; }
constexpr Vertex x(int i) { return 13 + i; }

Graph figure_graph() {
    std::vector<Edge> e = {{v(1), v(2)}, {v(3), v(4)}, {v(6), v(7)}, {v(9), v(10)}, {v(11), v(12)}, {v(13), v(14)},
                           {x(1), v(1)}, {x(1), v(3)}, {x(2), v(2)}, {x(2), v(4)}, {x(2), v(5)}, {x(2), v(6)},
                           {x(3), v(4)}, {x(4), v(5)}, {x(4), v(6)}, {x(4), v(8)}, {x(4), v(9)}, {x(4), v(11)},
                           {x(4), v(13)}, {x(5), v(8)}, {x(5), v(9)}, {x(5), v(11)}, {x(5), v(13)}, {x(1), x(2)},
                           {x(3), x(5)}};
    return build_graph(19, e);
}

std::vector<Vertex> figure_X() { return {x(1), x(2), x(3), x(4), x(5)}; }

const std::vector<Vertex> P1 = {v(1), v(2), x(2), v(5), x(4), v(8), x(5), v(9), v(10)};
const std::vector<Vertex> P2 = {v(1), v(2), x(2), v(6), x(4), v(8), x(5), v(13), v(14)};

// X = {0,1}; vertices 2..(1+count) are common neighbours with no other edges.
Graph fan(int count) {
    std::vector<Edge> e;
    for (Vertex a = 2; a < 2 + count; ++a) {
        e.emplace_back(0, a);
        e.emplace_back(1, a);
    }
    return build_graph(2 + count, e);
}

std::vector<Path> drain(PathStream& s) {
    std::vector<Path> out;
    while (auto P = s.next()) out.push_back(*P);
    return out;
}

}  // namespace

TEST(IndexComponents, FigureComponents) {
    Graph G = figure_graph();
    auto idx = index_components(G, membership(19, figure_X()));
    EXPECT_EQ(idx.members.size(), 8u);
    EXPECT_EQ(idx.members[0], (std::vector<Vertex>{v(1), v(2)}));
    EXPECT_EQ(idx.compOf[x(1)], -1);
    // oriented paths of an edge component: 2 singletons, 2 orientations
    EXPECT_EQ(idx.paths[0].size(), 4u);
}

TEST(MarkRareFrequent, FigureRareSet) {
    Graph G = figure_graph();
    auto K = kernelize_coc(G, figure_X(), 9, 2);
    EXPECT_EQ(K.p, 2 * (5 + 1) + 1);
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(K.inR[v(i)]) << i;
    // with p = 13 no slot type of this small graph has more than p witnesses
    EXPECT_TRUE(K.frequentKept.empty());
}

TEST(MarkRareFrequent, EmptyOutside) {
    auto K = kernelize_coc(testutil::triangle(), {0, 1, 2}, 3, 2);
    EXPECT_TRUE(K.rare.empty());
    EXPECT_TRUE(K.frequentKept.empty());
}

TEST(MarkRareFrequent, PendantNeighboursCapped) {
    Graph G = testutil::star(6);
    auto K = kernelize_coc(G, {0}, 3, 2);
    EXPECT_EQ(K.p, 5);
    EXPECT_TRUE(K.rare.empty());
    EXPECT_EQ(K.frequentKept, (std::vector<Vertex>{1, 2, 3, 4, 5}));
    EXPECT_EQ(K.Gp.n(), 6);
}

TEST(KernelizeCoc, WithinBoundKeepsEverything) {
    Graph G = testutil::path_graph(4);
    auto K = kernelize_coc(G, {1}, 3, 2);
    EXPECT_EQ(K.Gp.n(), 4);
    EXPECT_EQ(K.Gp.edges(), G.edges());
}

TEST(KernelizeCoc, ConnectingEdgeComponents) {
    // nine components {a,b} with a ~ 0 and b ~ 1
    std::vector<Edge> e;
    for (int c = 0; c < 9; ++c) {
        Vertex a = 2 + 2 * c, b = 3 + 2 * c;
        e.insert(e.end(), {{a, b}, {0, a}, {1, b}});
    }
    Graph G = build_graph(20, e);
    auto K = kernelize_coc(G, {0, 1}, 4, 2);
    EXPECT_EQ(K.p, 7);
    EXPECT_TRUE(K.rare.empty());
    EXPECT_EQ(K.frequentKept.size(), 14u);
    EXPECT_EQ(K.Gp.n(), 16);
}

TEST(KernelizeCoc, RejectsBadModulator) {
    EXPECT_THROW(kernelize_coc(testutil::path_graph(4), {0}, 3, 2), Error);
}

TEST(SignatureDiss, FigureCaption) {
    Graph G = figure_graph();
    auto K = kernelize_coc(G, figure_X(), 9, 2);
    std::fill(K.inR.begin(), K.inR.end(), 0);
    for (int i = 1; i <= 4; ++i) K.inR[v(i)] = 1;
    PositionalSignature expect = {{v(1), 1}, {v(2), 2}, {x(2), 3}, {x(4), 5}, {x(5), 7}};
    EXPECT_EQ(signature_diss(G, K, Path{P1}), expect);
    EXPECT_EQ(signature_diss(G, K, Path{P2}), expect);
    EXPECT_EQ(class_key_coc(K, P1), class_key_coc(K, P2));
}

TEST(SignatureDiss, AllRarePath) {
    Graph G = testutil::path_graph(4);
    auto K = kernelize_coc(G, {1}, 4, 2);
    EXPECT_EQ(signature_diss(G, K, Path{{0, 1, 2, 3}}), (PositionalSignature{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST(SuitableCoc, SmallestFrequentNeighbourWins) {
    Graph G = fan(9);
    auto K = kernelize_coc(G, {0, 1}, 3, 2);
    ASSERT_TRUE(K.rare.empty());
    EXPECT_TRUE(is_suitable_coc(G, K, Path{{0, 2, 1}}));
    EXPECT_FALSE(is_suitable_coc(G, K, Path{{0, 3, 1}}));
}

TEST(SuitableCoc, ExactlyOnePerClassOnPlantedInstances) {
    for (int i = 0; i < 40; ++i) {
        int r = 2 + i % 2;
        auto pl = gen::coc_family(10 + i % 3, r, 70 + i);
        int k = 3 + i % 5;
        auto K = kernelize_coc(pl.G, pl.X, k, r);
        std::map<std::vector<int>, int> reps;
        for (const auto& P : enum_k_paths_bruteforce(K.Gp, k))
            reps[class_key_coc(K, map_back(K.map, P).seq)] += is_suitable_coc(pl.G, K, P) ? 1 : 0;
        for (const auto& [key, count] : reps) EXPECT_EQ(count, 1) << "instance " << i;
    }
}

TEST(LiftCoc, TrivialCases) {
    Graph G = fan(9);
    auto K = kernelize_coc(G, {0, 1}, 3, 2);
    auto s = lift_coc(G, K, Path{{0, 3, 1}});
    EXPECT_EQ(drain(*s), (std::vector<Path>{Path{{0, 3, 1}}}));

    Graph P4 = testutil::path_graph(4);
    auto KP = kernelize_coc(P4, {1}, 3, 2);
    for (const auto& P : enum_k_paths_bruteforce(KP.Gp, 3)) {
        auto t = lift_coc(P4, KP, P);
        EXPECT_EQ(drain(*t), std::vector<Path>{map_back(KP.map, P)});
    }
}

TEST(LiftCoc, SwapsInUnkeptNeighbour) {
    Graph G = fan(8);  // p = 7, so common neighbour 9 is dropped
    auto K = kernelize_coc(G, {0, 1}, 3, 2);
    ASSERT_FALSE(K.map.contains(9));
    auto s = lift_coc(G, K, Path{{0, 2, 1}});
    auto got = drain(*s);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<Path>{Path{{0, 2, 1}}, Path{{0, 9, 1}}})) << "";
}

TEST(PipelineCoc, FigureGraphPasses) {
    Graph G = figure_graph();
    for (int k : {5, 9}) {
        auto K = make_kernel(G, k, ParamSpec{ParamKind::Coc, 2}, figure_X());
        auto rep = verify_partition(G, k, *K);
        EXPECT_TRUE(rep.pass()) << rep.summary();
    }
}

TEST(PipelineCoc, PlantedInstancesPass) {
    for (int i = 0; i < 40; ++i) {
        int r = 2 + i % 2;
        auto pl = gen::coc_family(12, r, 900 + i);
        int k = 3 + i % 5;
        auto K = make_kernel(pl.G, k, ParamSpec{ParamKind::Coc, r}, pl.X);
        auto rep = verify_partition(pl.G, k, *K);
        EXPECT_TRUE(rep.pass()) << "instance " << i << "\n" << rep.summary();
    }
}
