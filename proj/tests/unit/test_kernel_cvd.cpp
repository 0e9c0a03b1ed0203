#include "kpath/generators.hpp"
#include "kpath/kernel_cvd.hpp"
#include "kpath/oracle.hpp"
#include "kpath/pipeline.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace kpath;

namespace {

// c1..c14 -> 0..13, x1..x7 -> 14..20
constexpr Vertex c(int i) { return i - 1; }
constexpr Vertex x(int i) { return 13 + i; }

Graph figure_graph() {
    std::vector<Edge> e;
    for (int i = 1; i <= 14; ++i)
        for (int j = i + 1; j <= 14; ++j) e.emplace_back(c(i), c(j));
    std::vector<Edge> rest = {{x(1), x(2)}, {x(3), x(5)}, {x(5), x(7)}, {c(8), x(1)}, {c(2), x(2)}, {c(2), x(4)},
                              {c(3), x(2)}, {c(3), x(4)}, {c(4), x(4)}, {c(6), x(6)}, {c(13), x(6)}, {c(1), x(1)}};
    e.insert(e.end(), rest.begin(), rest.end());
    return build_graph(21, e);
}

std::vector<Vertex> figure_X() {
    std::vector<Vertex> X;
    for (int i = 1; i <= 7; ++i) X.push_back(x(i));
    return X;
}

const std::vector<Vertex> P1 = {c(8), c(1), x(1), x(2), c(2), x(4), c(4), c(12), c(13), c(6), x(6)};
const std::vector<Vertex> P2 = {c(1), x(1), x(2), c(3), x(4), c(4), c(10), c(11), c(5), c(13), x(6)};

// X = {0}; clique on 1..cliqueSize; 0 adjacent to 1..attach
Graph hub_and_clique(int cliqueSize, int attach) {
    std::vector<Edge> e;
    for (Vertex a = 1; a <= cliqueSize; ++a) {
        if (a <= attach) e.emplace_back(0, a);
        for (Vertex b = a + 1; b <= cliqueSize; ++b) e.emplace_back(a, b);
    }
    return build_graph(cliqueSize + 1, e);
}

std::vector<Path> drain(PathStream& s) {
    std::vector<Path> out;
    while (auto P = s.next()) out.push_back(*P);
    return out;
}

}  // namespace

TEST(MarkCvd, FigureRareSet) {
    auto [rare, frequent] = mark_cvd(figure_graph(), figure_X());
    std::set<Vertex> R(rare.begin(), rare.end());
    EXPECT_TRUE(R.count(c(1)) && R.count(c(4)));
    // p = 16 exceeds every neighbourhood in the drawing, so all marks are rare
    EXPECT_EQ(rare, (std::vector<Vertex>{c(1), c(2), c(3), c(4), c(6), c(8), c(13)}));
    EXPECT_TRUE(frequent.empty());
}

TEST(MarkCvd, EmptyModulator) {
    auto [rare, frequent] = mark_cvd(gen::complete(5), {});
    EXPECT_TRUE(rare.empty());
    EXPECT_TRUE(frequent.empty());
}

TEST(MarkCvd, FrequentNeighboursCapped) {
    auto [rare, frequent] = mark_cvd(hub_and_clique(9, 7), {0});
    EXPECT_TRUE(rare.empty());
    EXPECT_EQ(frequent, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(KernelizeCvd, SmallInstanceUnchanged) {
    auto pl = gen::clique_family(6, 2, 3);
    auto K = kernelize_cvd(pl.G, pl.X, 5);
    EXPECT_EQ(K.Gp.n(), pl.G.n());
    EXPECT_EQ(K.kp, 5);
    EXPECT_EQ(K.q, 0);
}

TEST(KernelizeCvd, PureClique) {
    for (int n = 5; n <= 8; ++n) {
        Graph G = gen::complete(n);
        auto K = kernelize_cvd(G, {}, n);
        EXPECT_EQ(K.q, n - 4);
        EXPECT_EQ(K.kp, 4);
        EXPECT_EQ(K.Gp.n(), 4);
        EXPECT_EQ(K.Gp.m(), 6u);
        auto E = make_kernel(G, n, ParamSpec{ParamKind::CliqueDeletion, 2}, std::vector<Vertex>{});
        auto rep = verify_partition(G, n, *E);
        EXPECT_TRUE(rep.pass()) << rep.summary();
        EXPECT_EQ(rep.kernel_solutions, 12u);
    }
}

TEST(KernelizeCvd, LongPathShrinksToFourL) {
    auto K = kernelize_cvd(hub_and_clique(40, 10), {0}, 10);
    EXPECT_EQ(K.q, 6);
    EXPECT_EQ(K.kp, 4);
    EXPECT_EQ(K.Gp.n(), 1 + 32);
}

TEST(SignatureCvd, FigureCaption) {
    Graph G = figure_graph();
    auto K = kernelize_cvd(G, figure_X(), 11);
    std::fill(K.inR.begin(), K.inR.end(), 0);
    K.inR[c(1)] = K.inR[c(4)] = 1;
    TokenSignature expect = {c(1), x(1), x(2), kGapC, x(4), c(4), kGapN, x(6)};
    EXPECT_EQ(signature_cvd(G, K, Path{P1}), expect);
    EXPECT_EQ(signature_cvd(G, K, Path{P2}), expect);
    EXPECT_EQ(path_order_keys(K, P2).first, (std::vector<Vertex>{c(1), x(1), x(2), c(3), x(4), c(4), c(13), x(6)}));
}

TEST(SignatureCvd, InsideCliqueIsEmpty) {
    Graph G = gen::complete(5);
    auto K = kernelize_cvd(G, {}, 3);
    EXPECT_TRUE(signature_cvd(G, K, Path{{0, 1, 2}}).empty());
}

TEST(SolLiftTest, FixedPointAndSmallestVariant) {
    Graph G = hub_and_clique(9, 7);
    auto K = kernelize_cvd(G, {0}, 3);
    ASSERT_EQ(K.Gp.n(), G.n());
    Path best{{1, 0, 2}};
    EXPECT_EQ(sol_lift_test(G, K, best), best);
    EXPECT_EQ(sol_lift_test(G, K, Path{{1, 0, 3}}), best);
    EXPECT_TRUE(is_suitable_cvd(G, K, best));
    EXPECT_FALSE(is_suitable_cvd(G, K, Path{{1, 0, 3}}));
}

TEST(SolLiftTest, EmptySignatureTakesSmallestVertices) {
    Graph G = gen::complete(7);
    auto K = kernelize_cvd(G, {}, 6);
    ASSERT_EQ(K.kp, 3);
    EXPECT_EQ(sol_lift_test(G, K, TokenSignature{}), (std::vector<Vertex>{K.Cp[0], K.Cp[1], K.Cp[2]}));
}

TEST(SolLiftNs, IdentityWithoutShortening) {
    auto pl = gen::clique_family(6, 2, 3);
    auto K = kernelize_cvd(pl.G, pl.X, 5);
    for (const auto& P : enum_k_paths_bruteforce(K.Gp, 5)) EXPECT_EQ(sol_lift_ns(pl.G, K, P), map_back(K.map, P));
}

TEST(SolLiftNs, FiveCliqueAppendsRemovedVertex) {
    Graph G = gen::complete(5);
    auto K = kernelize_cvd(G, {}, 5);
    ASSERT_EQ(K.removedFirstStage.size(), 1u);
    Vertex u = K.removedFirstStage[0];
    std::set<Path> images;
    for (const auto& P : enum_k_paths_bruteforce(K.Gp, 4)) {
        Path Q = sol_lift_ns(G, K, P);
        EXPECT_TRUE(is_path(G, Q.seq));
        EXPECT_EQ(Q.size(), 5u);
        EXPECT_NE(std::find(Q.seq.begin(), Q.seq.end(), u), Q.seq.end());
        EXPECT_TRUE(signature_cvd(G, K, Q).empty());
        images.insert(Q);
    }
    EXPECT_EQ(images.size(), 12u);
}

TEST(SolLiftS, FiveCliqueSuitableStream) {
    Graph G = gen::complete(5);
    auto K = kernelize_cvd(G, {}, 5);
    auto kernelPaths = enum_k_paths_bruteforce(K.Gp, 4);
    std::set<Path> ns;
    Path suitable;
    int suitableCount = 0;
    for (const auto& P : kernelPaths) {
        if (is_suitable_cvd(G, K, P)) {
            suitable = P;
            ++suitableCount;
        } else {
            ns.insert(sol_lift_ns(G, K, P));
        }
    }
    ASSERT_EQ(suitableCount, 1);
    auto s = sol_lift_s(G, K, suitable);
    auto got = drain(*s);
    std::set<Path> gotSet(got.begin(), got.end());
    EXPECT_EQ(gotSet.size(), got.size());
    std::set<Path> expect;
    for (const auto& Q : enum_k_paths_bruteforce(G, 5))
        if (!ns.count(Q)) expect.insert(Q);
    EXPECT_EQ(gotSet, expect);
    EXPECT_EQ(got.size(), 60u - 11u);
    EXPECT_THROW(sol_lift_s(G, K, *std::find_if(kernelPaths.begin(), kernelPaths.end(),
                                                  [&](const Path& P) { return !(P == suitable); })),
                 Error);
}

TEST(LiftCvd, TrivialCase) {
    Graph G = testutil::path_graph(3);
    auto K = kernelize_cvd(G, {0, 2}, 3);
    auto s = lift_cvd(G, K, Path{{0, 1, 2}});
    EXPECT_EQ(drain(*s), (std::vector<Path>{Path{{0, 1, 2}}}));
}

TEST(SuitableCvd, ExactlyOnePerClass) {
    for (int i = 0; i < 40; ++i) {
        auto pl = gen::clique_family(8 - i % 3, 1 + i % 3, 40 + i);
        int k = 3 + i % 5;
        KernelOptions o;
        o.clique_cap = 1;
        auto K = kernelize_cvd(pl.G, pl.X, k, o);
        std::map<std::vector<int>, int> reps;
        for (const auto& P : enum_k_paths_bruteforce(K.Gp, K.kp))
            reps[class_key_cvd(K, map_back(K.map, P).seq)] += is_suitable_cvd(pl.G, K, P) ? 1 : 0;
        for (const auto& [key, count] : reps) EXPECT_EQ(count, 1) << "instance " << i;
    }
}

TEST(PipelineCvd, FigureStyleGraphPasses) {
    // the figure's modulator with a smaller clique keeps brute force cheap
    Graph F = figure_graph();
    std::vector<Vertex> keep = figure_X();
    for (int i : {1, 2, 3, 4, 6, 8, 13, 5}) keep.push_back(c(i));
    auto [G, map] = induced_subgraph(F, keep);
    std::vector<Vertex> X;
    for (Vertex v : figure_X()) X.push_back(map.forward[v]);
    for (int k : {4, 6}) {
        KernelOptions o;
        o.clique_cap = 1;
        auto K = make_kernel(G, k, ParamSpec{ParamKind::CliqueDeletion, 2}, X, o);
        auto rep = verify_partition(G, k, *K);
        EXPECT_TRUE(rep.pass()) << rep.summary();
    }
}

TEST(PipelineCvd, ReducedInstancesPass) {
    int shortened = 0;
    for (int i = 0; i < 30; ++i) {
        auto pl = gen::clique_family(9, 1 + i % 2, 600 + i);
        int k = 4 + i % 4;
        KernelOptions o;
        o.clique_cap = 1;
        auto K = make_kernel(pl.G, k, ParamSpec{ParamKind::CliqueDeletion, 2}, pl.X, o);
        shortened += K->kernel_k() < k;
        auto rep = verify_partition(pl.G, k, *K);
        EXPECT_TRUE(rep.pass()) << "instance " << i << "\n" << rep.summary();
    }
    EXPECT_GT(shortened, 0);
}
