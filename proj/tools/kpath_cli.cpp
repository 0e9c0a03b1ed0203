// kpath_cli: kernelize, enumerate, verify and bench k-path enumeration kernels.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 verification failure.

#include "kpath/generators.hpp"
#include "kpath/oracle.hpp"
#include "kpath/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace kpath;

namespace {

constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kVerifyFailed = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string param = "vc";
    int r = 2;
    int k = 3;
    std::string graph;
    std::string modulator;
    std::optional<std::uint64_t> seed;
    int n = 10;
    double density = 0.4;
};

void add_common(CLI::App* cmd, Common& c, bool needGraph) {
    cmd->add_option("--param", c.param, "parameter: vc, coc or cvd")->check(CLI::IsMember({"vc", "coc", "cvd"}));
    cmd->add_option("-r", c.r, "component order bound for coc")->check(CLI::Range(1, 64));
    cmd->add_option("-k", c.k, "number of path vertices")->required()->check(CLI::PositiveNumber);
    auto* g = cmd->add_option("--graph", c.graph, "graph file");
    if (needGraph) g->required();
    cmd->add_option("--modulator", c.modulator, "modulator file (whitespace separated ids)");
}

void add_random(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "generate G(n, density) from this seed instead of reading --graph");
    cmd->add_option("-n", c.n, "vertices of the generated graph")->check(CLI::Range(1, 64));
    cmd->add_option("--density", c.density, "edge probability of the generated graph")->check(CLI::Range(0.0, 1.0));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return read_graph(in);
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::optional<std::vector<Vertex>> load_modulator(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return read_vertex_list(in);
    } catch (const Error& e) {
        throw IoError(path + ": " + e.what());
    }
}

Graph instance(const Common& c) {
    if (c.seed) return gen::gnp(c.n, c.density, *c.seed);
    if (c.graph.empty()) throw CLI::ValidationError("--graph or --seed is required");
    return load_graph(c.graph);
}

ParamSpec spec_of(const Common& c) { return ParamSpec{parse_param(c.param), c.r}; }

int run_kernelize(const Common& c, const std::string& out) {
    Graph G = load_graph(c.graph);
    auto K = make_kernel(G, c.k, spec_of(c), load_modulator(c.modulator));
    std::ofstream g(out + ".graph"), meta(out + ".sidecar");
    if (!g || !meta) throw IoError("cannot write " + out + ".*");
    write_graph(g, K->kernel_graph());
    meta << describe_kernel(*K);
    return 0;
}

int run_enumerate(const Common& c) {
    Graph G = load_graph(c.graph);
    auto s = enumerate_all(G, c.k, spec_of(c), load_modulator(c.modulator));
    while (auto P = s->next()) {
        for (std::size_t i = 0; i < P->size(); ++i) std::cout << (i ? " " : "") << (*P)[i];
        std::cout << '\n';
    }
    return 0;
}

int run_verify(const Common& c, std::optional<double> budget) {
    Graph G = instance(c);
    if (c.k > G.n()) {
        std::cout << "status=PASS\nexpected=0\n";
        return 0;
    }
    auto K = make_kernel(G, c.k, spec_of(c), load_modulator(c.modulator));
    auto rep = verify_partition(G, c.k, *K);
    std::cout << rep.summary();
    bool ok = rep.pass();
    if (budget) {
        double limit = *budget * delay_reference(*K);
        std::cout << "delay_limit=" << limit << '\n';
        ok = ok && static_cast<double>(rep.max_delay) <= limit;
    }
    return ok ? 0 : kVerifyFailed;
}

int run_bench(const Common& c, int count) {
    std::cout << "instance,param,|X|,|V(G')|,k,k',#solutions,max-delay-steps\n";
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = (c.seed ? *c.seed : 1) + static_cast<std::uint64_t>(i);
        Graph G = c.graph.empty() ? gen::gnp(c.n, c.density, seed) : load_graph(c.graph);
        if (c.k < 2 || c.k > G.n()) continue;
        auto K = make_kernel(G, c.k, spec_of(c), load_modulator(c.modulator));
        std::uint64_t solutions = 0, maxDelay = 0;
        DfsPathStream kernelPaths(K->kernel_graph(), K->kernel_k());
        while (auto P = kernelPaths.next()) {
            auto lift = K->lift(*P);
            std::uint64_t last = lift->steps();
            for (;;) {
                auto out = lift->next();
                maxDelay = std::max(maxDelay, lift->steps() - last);
                last = lift->steps();
                if (!out) break;
                ++solutions;
            }
        }
        std::string name = c.graph.empty() ? "gnp-" + std::to_string(seed) : c.graph;
        std::cout << name << ',' << c.param << (c.param == "coc" ? "(" + std::to_string(c.r) + ")" : "") << ','
                  << K->modulator_size() << ',' << K->kernel_graph().n() << ',' << c.k << ',' << K->kernel_k() << ','
                  << solutions << ',' << maxDelay << '\n';
        if (!c.graph.empty()) break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate k-vertex paths through enumeration kernels"};
    app.require_subcommand(1);

    Common kc, ec, vc, bc;
    std::string out;
    std::optional<double> budget;
    int count = 10;

    auto* kern = app.add_subcommand("kernelize", "write the kernel graph and a sidecar description");
    add_common(kern, kc, true);
    kern->add_option("--out", out, "output prefix")->required();

    auto* en = app.add_subcommand("enumerate", "print every k-path, one per line");
    add_common(en, ec, true);

    auto* ver = app.add_subcommand("verify", "compare the lifted paths with brute force");
    add_common(ver, vc, false);
    add_random(ver, vc);
    ver->add_option("--delay-budget", budget, "fail if the delay exceeds this constant times the reference bound");

    auto* bench = app.add_subcommand("bench", "kernel sizes and delay counters as CSV");
    add_common(bench, bc, false);
    add_random(bench, bc);
    bench->add_option("--count", count, "number of generated instances")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*kern) return run_kernelize(kc, out);
        if (*en) return run_enumerate(ec);
        if (*ver) return run_verify(vc, budget);
        if (*bench) return run_bench(bc, count);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
