// Materialized topologies: explicit edges, hyperedges and switches.
//
// Only the servers are graph vertices. SSA factors contribute one switch per
// factor copy (the switch is not a server); SSB factors contribute one
// hyperedge spanning the copy. Parallel edges are stored once with a
// multiplicity counter.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bwkit/errors.hpp"
#include "bwkit/product.hpp"

namespace bwkit {

enum class CutModel { PlainEdge, StarSwitch, Hyperedge };

inline const char* cut_model_name(CutModel m) {
    switch (m) {
        case CutModel::PlainEdge: return "plain";
        case CutModel::StarSwitch: return "star";
        case CutModel::Hyperedge: return "hyper";
    }
    return "?";
}

struct Edge {
    int32_t u = 0;
    int32_t v = 0;
    int64_t mult = 1;
};

struct Switch {
    std::vector<int32_t> attached;
};

// Materialization refuses anything bigger than this; the closed forms keep
// working for 64-bit sizes without materializing.
inline constexpr int64_t kMaxMaterializedServers = int64_t(1) << 24;

struct Topology {
    int64_t servers = 0;
    std::vector<int64_t> radices;  // most-significant digit first
    std::vector<Edge> edges;
    std::vector<std::vector<int32_t>> hyperedges;
    std::vector<Switch> switches;
    CutModel cut_model = CutModel::PlainEdge;

    int dims() const { return static_cast<int>(radices.size()); }

    int64_t edge_count() const {
        int64_t total = 0;
        for (const auto& e : edges) total += e.mult;
        return total;
    }

    // Plain-edge degree (star links and hyperedges not counted).
    int64_t degree(int64_t v) const {
        int64_t deg = 0;
        for (const auto& e : edges)
            if (e.u == v || e.v == v) deg += e.mult;
        return deg;
    }

    Coord coord(int64_t x) const { return coord_of(radices, x); }
};

namespace detail {

// Edges of one factor copy, as local index pairs with multiplicity.
inline std::vector<Edge> factor_edges(const FactorSpec& f) {
    std::vector<Edge> es;
    int32_t k = static_cast<int32_t>(f.k);
    switch (f.kind) {
        case FactorKind::Path:
            for (int32_t i = 0; i + 1 < k; ++i) es.push_back({i, i + 1, 1});
            break;
        case FactorKind::Ring:
            if (k == 2) {
                es.push_back({0, 1, 2});  // a 2-ring is a doubled edge
            } else {
                for (int32_t i = 0; i < k; ++i) es.push_back({i, (i + 1) % k, 1});
            }
            break;
        case FactorKind::CBT:
        case FactorKind::XT:
            // heap order, 0-based: children of i are 2i+1 and 2i+2
            for (int32_t i = 0; i < k; ++i) {
                if (2 * i + 1 < k) es.push_back({i, 2 * i + 1, 1});
                if (2 * i + 2 < k) es.push_back({i, 2 * i + 2, 1});
            }
            if (f.kind == FactorKind::XT && k >= 3) {
                // leaves occupy [ (k-1)/2, k-1 ]; join consecutive ones
                for (int32_t i = (k - 1) / 2; i + 1 < k; ++i) es.push_back({i, i + 1, 1});
            }
            break;
        case FactorKind::Clique:
        case FactorKind::RClique:
            for (int32_t i = 0; i < k; ++i)
                for (int32_t j = i + 1; j < k; ++j) es.push_back({i, j, f.r});
            break;
        case FactorKind::SSA:
        case FactorKind::SSB:
            break;  // no plain edges
    }
    return es;
}

}  // namespace detail

inline Topology build_factor(const FactorSpec& spec) {
    spec.validate();
    Topology t;
    t.servers = spec.k;
    t.radices = {spec.k};
    t.edges = detail::factor_edges(spec);
    if (spec.kind == FactorKind::SSA) {
        Switch sw;
        for (int32_t i = 0; i < spec.k; ++i) sw.attached.push_back(i);
        t.switches.push_back(std::move(sw));
        t.cut_model = CutModel::StarSwitch;
    } else if (spec.kind == FactorKind::SSB) {
        std::vector<int32_t> he;
        for (int32_t i = 0; i < spec.k; ++i) he.push_back(i);
        t.hyperedges.push_back(std::move(he));
        t.cut_model = CutModel::Hyperedge;
    }
    return t;
}

// Cartesian product: one copy of factor i per assignment of the other
// coordinates. Copies contribute their edges, their switch, or their
// hyperedge depending on the factor family.
inline Topology cartesian_product(const ProductSpec& spec) {
    if (spec.n > kMaxMaterializedServers)
        fail(Errc::Overflow, "refusing to materialize more than 2^24 servers");
    const int64_t n = to_int64(spec.n);
    const auto radices = spec.radices();
    const int d = spec.d;

    Topology t;
    t.servers = n;
    t.radices = radices;
    if (spec.has_switches())
        t.cut_model = CutModel::StarSwitch;
    else if (spec.has_hyperedges())
        t.cut_model = CutModel::Hyperedge;

    // stride[i] = index step when digit i increases by one
    std::vector<int64_t> stride(d, 1);
    for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * radices[i + 1];

    for (int dim = 0; dim < d; ++dim) {
        const FactorSpec& f = spec.factors[dim];
        const auto local_edges = detail::factor_edges(f);
        // enumerate base indices with digit `dim` equal to zero
        std::vector<int64_t> others;
        others.reserve(static_cast<size_t>(n / f.k));
        Coord digits(d, 0);
        int64_t x = 0;
        for (;;) {
            others.push_back(x);
            int i = d - 1;
            for (; i >= 0; --i) {
                if (i == dim) continue;
                if (++digits[i] < radices[i]) {
                    x += stride[i];
                    break;
                }
                digits[i] = 0;
                x -= stride[i] * (radices[i] - 1);
            }
            if (i < 0) break;
        }
        for (int64_t base : others) {
            if (!local_edges.empty()) {
                for (const auto& e : local_edges)
                    t.edges.push_back({static_cast<int32_t>(base + e.u * stride[dim]),
                                       static_cast<int32_t>(base + e.v * stride[dim]), e.mult});
            }
            if (f.kind == FactorKind::SSA) {
                Switch sw;
                sw.attached.reserve(static_cast<size_t>(f.k));
                for (int64_t j = 0; j < f.k; ++j)
                    sw.attached.push_back(static_cast<int32_t>(base + j * stride[dim]));
                t.switches.push_back(std::move(sw));
            } else if (f.kind == FactorKind::SSB) {
                std::vector<int32_t> he;
                he.reserve(static_cast<size_t>(f.k));
                for (int64_t j = 0; j < f.k; ++j)
                    he.push_back(static_cast<int32_t>(base + j * stride[dim]));
                t.hyperedges.push_back(std::move(he));
            }
        }
    }
    return t;
}

// Dimension (1-based) of an edge/switch/hyperedge given two of its member
// vertices: the unique digit where they differ.
inline int edge_dimension(const Topology& t, int64_t u, int64_t v) {
    Coord cu = t.coord(u), cv = t.coord(v);
    int dim = 0;
    for (size_t i = 0; i < cu.size(); ++i) {
        if (cu[i] != cv[i]) {
            if (dim != 0) fail(Errc::OutOfRange, "vertices differ in more than one digit");
            dim = static_cast<int>(i) + 1;
        }
    }
    if (dim == 0) fail(Errc::OutOfRange, "vertices do not differ");
    return dim;
}

}  // namespace bwkit
