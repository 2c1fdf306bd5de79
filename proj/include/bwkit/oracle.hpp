// Exact brute-force bisection oracle. Enumerates every floor(n/2)-subset in
// lexicographic order (fixing server 0 inside the subset when n is even,
// since complements cut the same), evaluates the cut under the topology's
// models, and returns the lexicographically least optimal witness. No
// pruning: this is the oracle of record the closed forms are checked against.
#pragma once

#include <array>
#include <cstdint>
#include <thread>
#include <vector>

#include "bwkit/bounds.hpp"
#include "bwkit/errors.hpp"
#include "bwkit/topology.hpp"

namespace bwkit {

// Cut crossed by partition s: plain edges with multiplicity, spanning
// hyperedges once each, and per switch the minority side's links (the switch
// itself joins whichever side has more of its servers).
inline int64_t cut_size(const Topology& t, const Partition& s) {
    const auto in = membership(s, t.servers);
    int64_t total = 0;
    for (const auto& e : t.edges)
        if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)]) total += e.mult;
    for (const auto& he : t.hyperedges) {
        bool any_in = false, any_out = false;
        for (int32_t v : he) (in[static_cast<size_t>(v)] ? any_in : any_out) = true;
        if (any_in && any_out) ++total;
    }
    for (const auto& sw : t.switches) {
        int64_t a = 0;
        for (int32_t v : sw.attached) a += in[static_cast<size_t>(v)];
        total += std::min<int64_t>(a, static_cast<int64_t>(sw.attached.size()) - a);
    }
    return total;
}

struct CutResult {
    int64_t width = 0;
    Partition witness;
    uint64_t subsets_examined = 0;
    CutModel model = CutModel::PlainEdge;
};

struct OracleOptions {
    int64_t max_n = 26;        // hard cap on server count
    uint64_t budget = 0;       // max C(n, floor(n/2)); 0 = C(max_n, max_n/2)
    int jobs = 0;              // 0 = all cores
};

namespace detail {

inline uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
    return r;
}

// Combination of `rank` (lexicographic) among t-subsets of [0, pool).
inline std::vector<int> unrank_combination(uint64_t rank, int pool, int t) {
    std::vector<int> c(static_cast<size_t>(t));
    int next = 0;
    for (int i = 0; i < t; ++i) {
        for (int v = next;; ++v) {
            uint64_t block = binomial(pool - v - 1, t - i - 1);
            if (rank < block) {
                c[static_cast<size_t>(i)] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return c;
}

// Advance to the lexicographic successor; false once exhausted.
inline bool next_combination(std::vector<int>& c, int pool) {
    int t = static_cast<int>(c.size());
    for (int i = t - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < pool - (t - i)) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

struct FlatTopology {
    int n = 0;
    std::vector<std::array<int32_t, 2>> edge_ends;
    std::vector<int64_t> edge_mult;
    std::vector<uint32_t> hyper_masks;
    std::vector<uint32_t> switch_masks;
    std::vector<int> switch_sizes;

    explicit FlatTopology(const Topology& t) : n(static_cast<int>(t.servers)) {
        for (const auto& e : t.edges) {
            edge_ends.push_back({e.u, e.v});
            edge_mult.push_back(e.mult);
        }
        for (const auto& he : t.hyperedges) {
            uint32_t m = 0;
            for (int32_t v : he) m |= uint32_t(1) << v;
            hyper_masks.push_back(m);
        }
        for (const auto& sw : t.switches) {
            uint32_t m = 0;
            for (int32_t v : sw.attached) m |= uint32_t(1) << v;
            switch_masks.push_back(m);
            switch_sizes.push_back(static_cast<int>(sw.attached.size()));
        }
    }

    int64_t cut(uint32_t mask) const {
        int64_t total = 0;
        for (size_t i = 0; i < edge_ends.size(); ++i) {
            uint32_t a = (mask >> edge_ends[i][0]) ^ (mask >> edge_ends[i][1]);
            if (a & 1u) total += edge_mult[i];
        }
        for (uint32_t hm : hyper_masks)
            if ((mask & hm) != 0 && (mask & hm) != hm) ++total;
        for (size_t i = 0; i < switch_masks.size(); ++i) {
            int a = __builtin_popcount(mask & switch_masks[i]);
            total += std::min(a, switch_sizes[i] - a);
        }
        return total;
    }
};

struct OracleBest {
    int64_t width = INT64_MAX;
    uint64_t witness_rank = UINT64_MAX;
};

}  // namespace detail

inline CutResult exact_bisection_width(const Topology& t, const OracleOptions& opts = {}) {
    const int64_t n = t.servers;
    if (n > opts.max_n || n > 30)
        fail(Errc::TooLarge, "oracle capped at n = " + std::to_string(std::min<int64_t>(opts.max_n, 30)));
    const int target = static_cast<int>(n / 2);
    const int budget_base = static_cast<int>(std::min<int64_t>(opts.max_n, 30));
    uint64_t budget = opts.budget
                          ? opts.budget
                          : detail::binomial(budget_base, budget_base / 2);
    if (detail::binomial(static_cast<int>(n), target) > budget)
        fail(Errc::TooLarge, "subset count exceeds the oracle budget");

    CutResult result;
    result.model = t.cut_model;
    if (target == 0) {
        result.width = 0;
        result.subsets_examined = 1;
        return result;
    }

    const bool fix_zero = n % 2 == 0;  // complement symmetry
    const int pool = fix_zero ? static_cast<int>(n) - 1 : static_cast<int>(n);
    const int choose = fix_zero ? target - 1 : target;
    const uint64_t total = detail::binomial(pool, choose);
    const detail::FlatTopology flat(t);

    auto mask_of = [&](const std::vector<int>& c) {
        uint32_t mask = fix_zero ? 1u : 0u;
        for (int v : c) mask |= uint32_t(1) << (fix_zero ? v + 1 : v);
        return mask;
    };

    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<uint64_t>(jobs, total));

    auto scan = [&](uint64_t lo, uint64_t hi, detail::OracleBest& best) {
        std::vector<int> c = detail::unrank_combination(lo, pool, choose);
        for (uint64_t rank = lo; rank < hi; ++rank) {
            int64_t w = flat.cut(mask_of(c));
            if (w < best.width) {
                best.width = w;
                best.witness_rank = rank;
            }
            if (rank + 1 < hi) detail::next_combination(c, pool);
        }
    };

    std::vector<detail::OracleBest> bests(jobs);
    if (jobs <= 1 || choose == 0) {
        scan(0, total, bests[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
            workers.emplace_back(scan, lo, hi, std::ref(bests[j]));
        }
        for (auto& w : workers) w.join();
    }

    // (width, rank) min is independent of how the ranges were split
    detail::OracleBest best;
    for (const auto& b : bests)
        if (b.width < best.width || (b.width == best.width && b.witness_rank < best.witness_rank))
            best = b;

    result.width = best.width;
    result.subsets_examined = total;
    auto c = detail::unrank_combination(best.witness_rank, pool, choose);
    if (fix_zero) result.witness.members.push_back(0);
    for (int v : c) result.witness.members.push_back(fix_zero ? v + 1 : v);
    return result;
}

}  // namespace bwkit
