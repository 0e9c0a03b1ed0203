#include "kpath/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kpath::gen {

Graph gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Planted vertex_cover_family(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int s = std::min(3, std::max(2, n / 4));
    Planted out;
    std::set<Edge> edges;
    for (Vertex x = 0; x < s; ++x) out.X.push_back(x);
    std::uniform_int_distribution<int> pick(0, s - 1);
    std::bernoulli_distribution coin(0.3);
    for (Vertex x = 0; x < s; ++x)
        for (Vertex y = x + 1; y < s; ++y)
            if (coin(rng)) edges.insert({x, y});
    for (Vertex u = s; u < n; ++u) {
        // mostly degree-2 neighbours of the pair {0,1}, otherwise random
        int roll = static_cast<int>(rng() % 10);
        if (roll < 6) {
            edges.insert({0, u});
            edges.insert({1, u});
        } else if (roll < 8) {
            edges.insert({pick(rng), u});
        } else {
            Vertex a = pick(rng), b = pick(rng);
            edges.insert({a, u});
            if (b != a) edges.insert({b, u});
        }
    }
    out.G = build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    return out;
}

Planted coc_family(int n, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int s = std::min(2, n / 4);
    Planted out;
    std::set<Edge> edges;
    for (Vertex x = 0; x < s; ++x) out.X.push_back(x);
    if (s == 2 && rng() % 2) edges.insert({0, 1});
    Vertex next = s;
    while (next < n) {
        int size = 1 + static_cast<int>(rng() % r);
        size = std::min(size, n - next);
        std::vector<Vertex> comp;
        for (int i = 0; i < size; ++i) comp.push_back(next++);
        for (int i = 1; i < size; ++i) edges.insert({comp[rng() % i], comp[i]});
        for (Vertex v : comp)
            for (Vertex x = 0; x < s; ++x)
                if (rng() % 3 != 0) edges.insert({x, v});
    }
    out.G = build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    return out;
}

Planted clique_family(int cliqueSize, int attached, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = cliqueSize + attached;
    std::set<Edge> edges;
    Planted out;
    // modulator vertices take the lowest ids
    for (Vertex x = 0; x < attached; ++x) out.X.push_back(x);
    for (Vertex u = attached; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.insert({u, v});
    std::bernoulli_distribution coin(0.5);
    for (Vertex x = 0; x < attached; ++x) {
        for (Vertex y = x + 1; y < attached; ++y)
            if (coin(rng)) edges.insert({x, y});
        for (Vertex c = attached; c < n; ++c)
            if (coin(rng)) edges.insert({x, c});
    }
    out.G = build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    return out;
}

}  // namespace kpath::gen
