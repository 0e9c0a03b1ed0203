#include "kpath/generators.hpp"
#include "kpath/oracle.hpp"
#include "kpath/pipeline.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace kpath;

namespace {

std::vector<Path> drain(PathStream& s) {
    std::vector<Path> out;
    while (auto P = s.next()) out.push_back(*P);
    return out;
}

const ParamSpec kAll[] = {{ParamKind::VertexCover, 2}, {ParamKind::Coc, 2}, {ParamKind::Coc, 3},
                          {ParamKind::CliqueDeletion, 2}};

}  // namespace

TEST(EnumerateAll, Examples) {
    auto s = enumerate_all(testutil::triangle(), 3, ParamSpec{ParamKind::VertexCover, 2});
    EXPECT_EQ(drain(*s).size(), 3u);
    for (const auto& p : kAll) {
        auto e = enumerate_all(testutil::path_graph(4), 5, p);
        EXPECT_TRUE(drain(*e).empty());
    }
    auto k6 = enumerate_all(gen::complete(6), 6, ParamSpec{ParamKind::CliqueDeletion, 2});
    auto got = drain(*k6);
    EXPECT_EQ(got.size(), 360u);
    EXPECT_EQ(testutil::as_set(got), testutil::paths_by_permutation(gen::complete(6), 6));
}

TEST(EnumerateAll, SingleVertices) {
    auto s = enumerate_all(testutil::path_graph(4), 1, ParamSpec{ParamKind::Coc, 2});
    EXPECT_EQ(drain(*s), (std::vector<Path>{Path{{0}}, Path{{1}}, Path{{2}}, Path{{3}}}));
}

TEST(EnumerateAll, NoSolutions) {
    Graph G = build_graph(5, {{0, 1}, {2, 3}});
    for (const auto& p : kAll) {
        auto s = enumerate_all(G, 3, p);
        EXPECT_TRUE(drain(*s).empty());
    }
}

TEST(EnumerateAll, MatchesPermutationOracle) {
    for (int i = 0; i < 60; ++i) {
        Graph G = gen::gnp(5 + i % 4, 0.3 + 0.15 * (i % 3), 2000 + i);
        int k = 2 + i % 5;
        for (const auto& p : kAll) {
            auto s = enumerate_all(G, k, p);
            auto got = drain(*s);
            auto set = testutil::as_set(got);
            EXPECT_EQ(set.size(), got.size());
            EXPECT_EQ(set, testutil::paths_by_permutation(G, k)) << to_string(p.kind) << " instance " << i;
        }
    }
}

TEST(EnumerateAll, DeterministicOrder) {
    Graph G = gen::gnp(8, 0.5, 31);
    auto a = enumerate_all(G, 4, ParamSpec{ParamKind::VertexCover, 2});
    auto b = enumerate_all(G, 4, ParamSpec{ParamKind::VertexCover, 2});
    EXPECT_EQ(drain(*a), drain(*b));
}

TEST(DfsPathStream, AgreesWithBruteForce) {
    for (int i = 0; i < 30; ++i) {
        Graph G = gen::gnp(7, 0.45, 70 + i);
        for (int k = 1; k <= 7; ++k) {
            DfsPathStream s(G, k);
            auto got = drain(s);
            EXPECT_EQ(got, enum_k_paths_bruteforce(G, k));
        }
    }
}

TEST(MakeKernel, RejectsBadK) {
    EXPECT_THROW(make_kernel(testutil::triangle(), 1, ParamSpec{}), Error);
    EXPECT_THROW(make_kernel(testutil::triangle(), 4, ParamSpec{}), Error);
    EXPECT_THROW(make_kernel(testutil::triangle(), 3, ParamSpec{ParamKind::VertexCover, 2}, std::vector<Vertex>{0}),
                 Error);
}

TEST(MakeKernel, DescribeKernel) {
    auto K = make_kernel(gen::complete(6), 6, ParamSpec{ParamKind::CliqueDeletion, 2});
    auto d = describe_kernel(*K);
    EXPECT_NE(d.find("param: cvd"), std::string::npos);
    EXPECT_NE(d.find("kernel_k: 4"), std::string::npos);
    EXPECT_GT(delay_reference(*K), 0.0);
}

TEST(ParseParam, Names) {
    EXPECT_EQ(parse_param("vc"), ParamKind::VertexCover);
    EXPECT_EQ(parse_param("coc"), ParamKind::Coc);
    EXPECT_EQ(parse_param("cvd"), ParamKind::CliqueDeletion);
    EXPECT_THROW(parse_param("tw"), Error);
}
