#include "kpath/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace kpath {

namespace {

void extend(const Graph& G, int k, std::vector<Vertex>& seq, std::vector<char>& used, std::vector<Path>& out) {
    if (static_cast<int>(seq.size()) == k) {
        if (!std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end())) out.push_back(Path{seq});
        return;
    }
    for (Vertex w : G.neighbors(seq.back())) {
        if (used[w]) continue;
        used[w] = 1;
        seq.push_back(w);
        extend(G, k, seq, used, out);
        seq.pop_back();
        used[w] = 0;
    }
}

}  // namespace

std::vector<Path> enum_k_paths_bruteforce(const Graph& G, int k) {
    std::vector<Path> out;
    if (k < 1 || k > G.n()) return out;
    std::vector<char> used(G.n(), 0);
    std::vector<Vertex> seq;
    for (Vertex s = 0; s < G.n(); ++s) {
        seq.assign(1, s);
        used[s] = 1;
        extend(G, k, seq, used, out);
        used[s] = 0;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ClassPartition partition_by_signature(const std::vector<Path>& S, const SignatureFn& sig) {
    ClassPartition parts;
    for (const Path& P : S) parts[sig(P)].push_back(P);
    return parts;
}

std::string PartitionReport::summary() const {
    std::ostringstream os;
    os << "status=" << (pass() ? "PASS" : "FAIL") << '\n'
       << "expected=" << expected << '\n'
       << "lifted=" << lifted << '\n'
       << "kernel_solutions=" << kernel_solutions << '\n'
       << "classes=" << class_sizes.size() << '\n'
       << "missing=" << missing.size() << '\n'
       << "duplicates=" << duplicates.size() << '\n'
       << "foreign=" << foreign.size() << '\n'
       << "empty_lifts=" << empty_lifts.size() << '\n'
       << "max_delay_steps=" << max_delay << '\n';
    return os.str();
}

PartitionReport verify_partition(const Graph& G, int k, const EnumerationKernel& K) {
    PartitionReport report;
    auto expected = enum_k_paths_bruteforce(G, k);
    report.expected = expected.size();
    for (const Path& P : expected) ++report.class_sizes[K.class_key(P.seq)];

    auto kernelPaths = enum_k_paths_bruteforce(K.kernel_graph(), K.kernel_k());
    report.kernel_solutions = kernelPaths.size();
    std::vector<Path> lifted;
    for (const Path& P : kernelPaths) {
        auto stream = K.lift(P);
        std::uint64_t prev = 0;
        std::size_t count = 0;
        while (true) {
            auto out = stream->next();
            std::uint64_t now = stream->steps();
            report.max_delay = std::max(report.max_delay, now - prev);
            prev = now;
            if (!out) break;
            ++count;
            lifted.push_back(std::move(*out));
        }
        if (count == 0) report.empty_lifts.push_back(P);
    }
    report.lifted = lifted.size();
    std::sort(lifted.begin(), lifted.end());
    for (std::size_t i = 1; i < lifted.size(); ++i)
        if (lifted[i] == lifted[i - 1] && (report.duplicates.empty() || report.duplicates.back() != lifted[i]))
            report.duplicates.push_back(lifted[i]);
    lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
    std::set_difference(expected.begin(), expected.end(), lifted.begin(), lifted.end(),
                        std::back_inserter(report.missing));
    std::set_difference(lifted.begin(), lifted.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.foreign));
    return report;
}

}  // namespace kpath
