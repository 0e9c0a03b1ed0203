#include "kpath/bipartite.hpp"
#include "kpath/graph.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <set>

using namespace kpath;

namespace {

BipartiteGraph complete_bipartite(int na, int nb) {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b) e.emplace_back(a, b);
    return BipartiteGraph(na, nb, e);
}

BipartiteGraph random_bipartite(int na, int nb, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
            if (coin(rng)) e.emplace_back(a, b);
    return BipartiteGraph(na, nb, e);
}

// Maximum matchings by trying every edge subset.
std::set<Matching> brute_maximum(const BipartiteGraph& H) {
    std::set<Matching> best;
    std::size_t size = 0;
    const std::size_t m = H.edge_count();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        Matching M;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) M.push_back(H.edge(i));
        if (!is_matching(H, M)) continue;
        if (M.size() > size) {
            size = M.size();
            best.clear();
        }
        if (M.size() == size) best.insert(M);
    }
    return best;
}

std::set<Matching> drain(MaximumMatchingEnumerator& e) {
    std::set<Matching> out;
    while (auto M = e.next()) EXPECT_TRUE(out.insert(*M).second);
    return out;
}

}  // namespace

TEST(MaxMatching, Examples) {
    EXPECT_EQ(max_matching(complete_bipartite(2, 2)).size(), 2u);
    EXPECT_EQ(max_matching(complete_bipartite(1, 3)).size(), 1u);
    EXPECT_EQ(max_matching(BipartiteGraph(3, 3, {})).size(), 0u);
}

TEST(MaxMatching, SizeAgreesWithBruteForce) {
    for (int i = 0; i < 100; ++i) {
        auto H = random_bipartite(1 + i % 4, 1 + (i / 4) % 4, 0.5, i);
        auto M = max_matching(H);
        EXPECT_TRUE(is_matching(H, M));
        EXPECT_EQ(M.size(), brute_maximum(H).begin()->size());
    }
}

TEST(MaximumMatchings, Examples) {
    {
        BipartiteGraph H(2, 1, {{0, 0}, {1, 0}});
        MaximumMatchingEnumerator e(H);
        EXPECT_EQ(drain(e), (std::set<Matching>{{{0, 0}}, {{1, 0}}}));
    }
    {
        auto H = complete_bipartite(2, 2);
        MaximumMatchingEnumerator e(H);
        EXPECT_EQ(drain(e).size(), 2u);
    }
    {
        BipartiteGraph H(1, 1, {{0, 0}});
        MaximumMatchingEnumerator e(H);
        EXPECT_EQ(drain(e).size(), 1u);
    }
}

TEST(MaximumMatchings, AgreeWithSubsetEnumeration) {
    for (int i = 0; i < 150; ++i) {
        auto H = random_bipartite(1 + i % 4, 1 + (i / 3) % 4, 0.3 + 0.1 * (i % 5), 77 + i);
        MaximumMatchingEnumerator e(H);
        EXPECT_EQ(drain(e), brute_maximum(H)) << "instance " << i;
    }
}

TEST(SaturatingMatchings, Examples) {
    auto H = complete_bipartite(2, 2);
    {
        SaturatingMatchingEnumerator e(H, {});
        auto M = e.next();
        ASSERT_TRUE(M);
        EXPECT_TRUE(M->empty());
        EXPECT_FALSE(e.next());
    }
    {
        SaturatingMatchingEnumerator e(H, {0, 1});
        int count = 0;
        while (e.next()) ++count;
        EXPECT_EQ(count, 2);
    }
    {
        BipartiteGraph one(1, 0, {});
        SaturatingMatchingEnumerator e(one, {0});
        EXPECT_FALSE(e.next());
    }
}

TEST(SaturatingMatchings, AgreeWithSubsetEnumeration) {
    for (int i = 0; i < 100; ++i) {
        auto H = random_bipartite(4, 4, 0.5, 300 + i);
        std::vector<int> targets;
        for (int a = 0; a < 4; ++a)
            if ((i >> a) & 1) targets.push_back(a);
        std::set<Matching> expect;
        const std::size_t m = H.edge_count();
        for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
            Matching M;
            bool ok = true;
            for (std::size_t j = 0; j < m; ++j)
                if (mask >> j & 1) {
                    M.push_back(H.edge(j));
                    ok &= std::find(targets.begin(), targets.end(), H.edge(j).first) != targets.end();
                }
            if (ok && M.size() == targets.size() && is_matching(H, M)) expect.insert(M);
        }
        SaturatingMatchingEnumerator e(H, targets);
        std::set<Matching> got;
        while (auto M = e.next()) got.insert(*M);
        EXPECT_EQ(got, expect) << "instance " << i;
    }
}

TEST(QExpansion, SingleHubWithFourLeaves) {
    auto H = complete_bipartite(1, 4);
    auto E = q_expansion(H, 3);
    EXPECT_EQ(E.hatA, (std::vector<int>{0}));
    EXPECT_EQ(E.hatB, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(E.saturatedB, (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(verify_q_expansion(H, E));
}

TEST(QExpansion, TooFewNeighbours) {
    BipartiteGraph H(1, 1, {{0, 0}});
    auto E = q_expansion(H, 3);
    EXPECT_TRUE(E.hatA.empty());
    EXPECT_TRUE(E.hatB.empty());
    EXPECT_TRUE(verify_q_expansion(H, E));
}

TEST(QExpansion, OneExpansionIsAMatching) {
    for (int i = 0; i < 50; ++i) {
        auto H = random_bipartite(4, 6, 0.5, 900 + i);
        bool isolated = false;
        for (int b = 0; b < H.nb(); ++b) isolated |= H.edges_of_b(b).empty();
        if (isolated) continue;
        auto E = q_expansion(H, 1);
        EXPECT_TRUE(is_matching(H, E.expansion));
        EXPECT_EQ(E.expansion.size(), E.hatA.size());
    }
}

TEST(QExpansion, IsolatedBNodeRejected) {
    BipartiteGraph H(1, 2, {{0, 0}});
    try {
        q_expansion(H, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IsolatedBNode);
    }
}

TEST(VerifyQExpansion, DetectsTampering) {
    BipartiteGraph H(2, 5, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}});
    auto E = q_expansion(H, 2);
    ASSERT_TRUE(verify_q_expansion(H, E));
    ASSERT_FALSE(E.expansion.empty());

    auto dropped = E;
    dropped.expansion.pop_back();
    EXPECT_FALSE(verify_q_expansion(H, dropped));

    // b4 is adjacent to a1; claim it for hatB while a1 stays outside hatA
    auto widened = E;
    if (std::find(widened.hatA.begin(), widened.hatA.end(), 1) == widened.hatA.end()) {
        widened.hatB.push_back(4);
        std::sort(widened.hatB.begin(), widened.hatB.end());
        EXPECT_FALSE(verify_q_expansion(H, widened));
    }
}

TEST(QExpansion, VerifiedOnRandomInstances) {
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        auto H = random_bipartite(1 + i % 8, 1 + (i * 7) % 15, 0.35, 4000 + i);
        bool isolated = false;
        for (int b = 0; b < H.nb(); ++b) isolated |= H.edges_of_b(b).empty();
        if (isolated) continue;
        for (int q = 1; q <= 3; ++q) EXPECT_TRUE(verify_q_expansion(H, q_expansion(H, q)));
        ++checked;
    }
    EXPECT_GT(checked, 50);
}
