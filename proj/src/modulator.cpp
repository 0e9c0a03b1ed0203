#include "kpath/modulator.hpp"

#include <algorithm>
#include <queue>

namespace kpath {

std::vector<char> membership(int n, const std::vector<Vertex>& S) {
    std::vector<char> in(n, 0);
    for (Vertex v : S) in[v] = 1;
    return in;
}

Modulator approx_vertex_cover(const Graph& G) {
    std::vector<char> inX(G.n(), 0);
    for (auto [u, v] : G.edges())
        if (!inX[u] && !inX[v]) inX[u] = inX[v] = 1;
    Modulator M{ModulatorKind::VertexCover, {}, 0};
    for (Vertex v = 0; v < G.n(); ++v)
        if (inX[v]) M.vertices.push_back(v);
    return M;
}

Modulator approx_coc_modulator(const Graph& G, int r) {
    std::vector<char> inX(G.n(), 0);
    for (Vertex s = 0; s < G.n(); ++s) {
        // Restart from s while its component is still too large.
        while (!inX[s]) {
            std::vector<Vertex> order{s};
            std::vector<char> seen(G.n(), 0);
            seen[s] = 1;
            for (std::size_t h = 0; h < order.size(); ++h)
                for (Vertex w : G.neighbors(order[h]))
                    if (!inX[w] && !seen[w]) {
                        seen[w] = 1;
                        order.push_back(w);
                    }
            if (static_cast<int>(order.size()) <= r) break;
            for (int i = 0; i <= r; ++i) inX[order[i]] = 1;
        }
    }
    Modulator M{ModulatorKind::Coc, {}, r};
    for (Vertex v = 0; v < G.n(); ++v)
        if (inX[v]) M.vertices.push_back(v);
    return M;
}

Modulator approx_clique_modulator(const Graph& G) {
    std::vector<char> inX(G.n(), 0);
    for (Vertex u = 0; u < G.n(); ++u) {
        for (Vertex v = u + 1; v < G.n() && !inX[u]; ++v) {
            if (!inX[v] && !G.adjacent(u, v)) inX[u] = inX[v] = 1;
        }
    }
    Modulator M{ModulatorKind::CliqueDeletion, {}, 0};
    for (Vertex v = 0; v < G.n(); ++v)
        if (inX[v]) M.vertices.push_back(v);
    return M;
}

std::vector<int> component_sizes_outside(const Graph& G, const std::vector<char>& inX) {
    std::vector<char> seen(G.n(), 0);
    std::vector<int> sizes;
    for (Vertex s = 0; s < G.n(); ++s) {
        if (inX[s] || seen[s]) continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        int size = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : G.neighbors(v))
                if (!inX[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        sizes.push_back(size);
    }
    return sizes;
}

bool verify_modulator(const Graph& G, const Modulator& M) {
    for (Vertex v : M.vertices)
        if (v < 0 || v >= G.n()) return false;
    auto inX = membership(G.n(), M.vertices);
    switch (M.kind) {
        case ModulatorKind::VertexCover:
            for (auto [u, v] : G.edges())
                if (!inX[u] && !inX[v]) return false;
            return true;
        case ModulatorKind::Coc: {
            if (M.r < 1) return false;
            for (int s : component_sizes_outside(G, inX))
                if (s > M.r) return false;
            return true;
        }
        case ModulatorKind::CliqueDeletion:
            for (Vertex u = 0; u < G.n(); ++u)
                for (Vertex v = u + 1; v < G.n(); ++v)
                    if (!inX[u] && !inX[v] && !G.adjacent(u, v)) return false;
            return true;
    }
    return false;
}

Modulator make_modulator(const Graph& G, ModulatorKind kind, std::vector<Vertex> vertices, int r) {
    for (Vertex v : vertices)
        if (v < 0 || v >= G.n())
            throw Error(ErrorKind::InvalidModulator, "modulator vertex " + std::to_string(v) + " out of range");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Modulator M{kind, std::move(vertices), r};
    if (!verify_modulator(G, M)) throw Error(ErrorKind::InvalidModulator, "modulator invariant violated");
    return M;
}

}  // namespace kpath
