// Shared helpers for the test and acceptance suites: subset enumeration,
// independent boundary/cut evaluators, and subprocess capture. Everything
// here is test-side machinery, deliberately separate from the library paths
// it cross-checks.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "bwkit/bwkit.hpp"

namespace testsupport {

using namespace bwkit;

// Per-dimension crossing profile of a subset mask, computed in one pass with
// pre-resolved dimensions (fast enough for exhaustive sweeps).
struct DimProfiler {
    int d;
    std::vector<std::array<int32_t, 2>> edge_ends;
    std::vector<int64_t> edge_mult;
    std::vector<int> edge_dim;
    std::vector<uint32_t> hyper_masks;
    std::vector<int> hyper_dim;
    std::vector<uint32_t> switch_masks;
    std::vector<int> switch_sizes;
    std::vector<int> switch_dim;

    explicit DimProfiler(const Topology& t) : d(t.dims()) {
        for (const auto& e : t.edges) {
            edge_ends.push_back({e.u, e.v});
            edge_mult.push_back(e.mult);
            edge_dim.push_back(edge_dimension(t, e.u, e.v));
        }
        for (const auto& he : t.hyperedges) {
            uint32_t m = 0;
            for (int32_t v : he) m |= uint32_t(1) << v;
            hyper_masks.push_back(m);
            hyper_dim.push_back(edge_dimension(t, he[0], he[1]));
        }
        for (const auto& sw : t.switches) {
            uint32_t m = 0;
            for (int32_t v : sw.attached) m |= uint32_t(1) << v;
            switch_masks.push_back(m);
            switch_sizes.push_back(static_cast<int>(sw.attached.size()));
            switch_dim.push_back(edge_dimension(t, sw.attached[0], sw.attached[1]));
        }
    }

    std::vector<int64_t> profile(uint32_t mask) const {
        std::vector<int64_t> per_dim(static_cast<size_t>(d), 0);
        for (size_t i = 0; i < edge_ends.size(); ++i) {
            uint32_t x = (mask >> edge_ends[i][0]) ^ (mask >> edge_ends[i][1]);
            if (x & 1u) per_dim[static_cast<size_t>(edge_dim[i] - 1)] += edge_mult[i];
        }
        for (size_t i = 0; i < hyper_masks.size(); ++i) {
            uint32_t hm = hyper_masks[i];
            if ((mask & hm) != 0 && (mask & hm) != hm)
                per_dim[static_cast<size_t>(hyper_dim[i] - 1)] += 1;
        }
        for (size_t i = 0; i < switch_masks.size(); ++i) {
            int a = __builtin_popcount(mask & switch_masks[i]);
            per_dim[static_cast<size_t>(switch_dim[i] - 1)] +=
                std::min(a, switch_sizes[i] - a);
        }
        return per_dim;
    }

    int64_t cut(uint32_t mask) const {
        int64_t total = 0;
        for (int64_t x : profile(mask)) total += x;
        return total;
    }
};

// Visit every t-subset of [0, n) as a bitmask, lexicographic order of the
// sorted index tuples.
template <typename F>
void for_each_subset(int n, int t, F&& visit) {
    if (t == 0) {
        visit(uint32_t(0));
        return;
    }
    std::vector<int> c(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) c[static_cast<size_t>(i)] = i;
    for (;;) {
        uint32_t mask = 0;
        for (int v : c) mask |= uint32_t(1) << v;
        visit(mask);
        int i = t - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - (t - i)) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

// Independent bisection minimum: dense adjacency-matrix fold over masks
// enumerated with Gosper's hack (numeric order, a different mechanism from
// the oracle's combination odometer). Plain-edge topologies only.
inline int64_t matrix_fold_bisection(const Topology& t) {
    const int n = static_cast<int>(t.servers);
    std::vector<std::vector<int64_t>> a(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (const auto& e : t.edges) {
        a[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += e.mult;
        a[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += e.mult;
    }
    const int half = n / 2;
    if (half == 0) return 0;
    int64_t best = INT64_MAX;
    uint32_t mask = (uint32_t(1) << half) - 1;
    const uint32_t limit = uint32_t(1) << n;
    while (mask < limit) {
        int64_t cut = 0;
        for (int u = 0; u < n; ++u) {
            if (!((mask >> u) & 1u)) continue;
            for (int v = 0; v < n; ++v)
                if (!((mask >> v) & 1u)) cut += a[static_cast<size_t>(u)][static_cast<size_t>(v)];
        }
        best = std::min(best, cut);
        uint32_t c = mask & -mask, r = mask + c;  // Gosper's hack
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return best;
}

inline Partition partition_of_mask(uint32_t mask, int n) {
    Partition s;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.members.push_back(v);
    return s;
}

// Relabel servers by a permutation (perm[v] = new id of v).
inline Topology relabel(const Topology& t, const std::vector<int32_t>& perm) {
    Topology out = t;
    out.radices.clear();  // coordinates are meaningless after relabeling
    for (auto& e : out.edges) {
        e.u = perm[static_cast<size_t>(e.u)];
        e.v = perm[static_cast<size_t>(e.v)];
    }
    for (auto& he : out.hyperedges)
        for (auto& v : he) v = perm[static_cast<size_t>(v)];
    for (auto& sw : out.switches)
        for (auto& v : sw.attached) v = perm[static_cast<size_t>(v)];
    return out;
}

inline std::string run_capture(const std::string& cmd, int* exit_code = nullptr) {
    std::string out;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

}  // namespace testsupport
