// Product-level bound machinery: Psi, lexicographic prefixes, per-dimension
// boundaries, the congestion lower bound, the central-cut upper bound, and
// the constructive near-bisection that realizes the upper bound.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bwkit/errors.hpp"
#include "bwkit/metrics.hpp"
#include "bwkit/product.hpp"
#include "bwkit/rational.hpp"
#include "bwkit/topology.hpp"

namespace bwkit {

// Psi(alpha) = sum_{i=1..alpha} C_i with C_i = prod_{j>i} k_j: the bisection
// width of the d-dimensional array and the backbone of every bound here.
struct PsiValue {
    int alpha = 0;
    std::vector<BigInt> c;  // C_1 .. C_d (C_d = 1)
    BigInt psi = 0;
};

inline PsiValue psi(const ProductSpec& spec) {
    PsiValue out;
    out.alpha = spec.alpha;
    out.c.assign(static_cast<size_t>(spec.d), 1);
    for (int i = spec.d - 2; i >= 0; --i)
        out.c[static_cast<size_t>(i)] =
            out.c[static_cast<size_t>(i + 1)] * spec.factors[static_cast<size_t>(i + 1)].k;
    for (int i = 0; i < spec.alpha; ++i) out.psi += out.c[static_cast<size_t>(i)];
    return out;
}

// One side of a (near-)bisection: a set of server indices.
struct Partition {
    std::vector<int64_t> members;  // sorted ascending

    int64_t size() const { return static_cast<int64_t>(members.size()); }
    bool contains(int64_t v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
};

inline std::vector<char> membership(const Partition& s, int64_t n) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int64_t v : s.members) {
        if (v < 0 || v >= n) fail(Errc::InvalidPartition, "member out of range");
        in[static_cast<size_t>(v)] = 1;
    }
    return in;
}

// First `size` vertices in lexicographic coordinate order.
inline Partition lex_prefix_partition(const ProductSpec& spec, int64_t size) {
    if (size < 0 || spec.n < size) fail(Errc::OutOfRange, "prefix size out of range");
    Partition s;
    s.members.resize(static_cast<size_t>(size));
    for (int64_t i = 0; i < size; ++i) s.members[static_cast<size_t>(i)] = i;
    return s;
}

// |d_i S|: crossing count restricted to dimension i (1-based). Plain edges
// count with multiplicity, a spanning hyperedge counts once, and a switch
// counts its stranded minority links.
inline BigInt dimension_boundary(const Topology& t, const Partition& s, int dim) {
    if (dim < 1 || dim > t.dims()) fail(Errc::DimensionOutOfRange, "no such dimension");
    const auto in = membership(s, t.servers);
    BigInt total = 0;
    for (const auto& e : t.edges) {
        if (edge_dimension(t, e.u, e.v) != dim) continue;
        if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)]) total += e.mult;
    }
    for (const auto& he : t.hyperedges) {
        if (edge_dimension(t, he[0], he[1]) != dim) continue;
        bool any_in = false, any_out = false;
        for (int32_t v : he) (in[static_cast<size_t>(v)] ? any_in : any_out) = true;
        if (any_in && any_out) total += 1;
    }
    for (const auto& sw : t.switches) {
        if (edge_dimension(t, sw.attached[0], sw.attached[1]) != dim) continue;
        int64_t a = 0;
        for (int32_t v : sw.attached) a += in[static_cast<size_t>(v)];
        total += std::min<int64_t>(a, static_cast<int64_t>(sw.attached.size()) - a);
    }
    return total;
}

// Per-dimension boundary of the floor(n/2) lexicographic prefix of the
// r-Hamming graph on the same radices, in closed form. Zero beyond alpha;
// the sigma-normalized total telescopes to (r/4)*Psi(alpha) exactly.
struct BoundaryProfile {
    std::vector<BigInt> per_dim;
    Rat normalized;
};

inline BoundaryProfile hamming_prefix_boundary(const ProductSpec& spec, int64_t r) {
    if (r < 1) fail(Errc::UnsupportedMultiplicity, "multiplicity must be positive");
    PsiValue p = psi(spec);
    BoundaryProfile out;
    out.per_dim.assign(static_cast<size_t>(spec.d), 0);
    out.normalized = 0;
    for (int i = 0; i < spec.alpha; ++i) {
        BigInt k = spec.factors[static_cast<size_t>(i)].k;
        BigInt cross;
        if (k % 2 == 0)
            cross = (k / 2) * p.c[static_cast<size_t>(i)] * (k / 2);
        else
            cross = ((k - 1) / 2) * p.c[static_cast<size_t>(i)] * ((k + 1) / 2);
        out.per_dim[static_cast<size_t>(i)] = r * cross;
        out.normalized += Rat(out.per_dim[static_cast<size_t>(i)], sigma(k));
    }
    return out;
}

enum class BoundMode { Strict, Generalized };

struct LowerBound {
    Rat value;
    BigInt ceiling;
    BoundMode mode = BoundMode::Strict;
    // Set in generalized mode: the mixed-beta bound extends the equal-beta
    // result by bounding every factor through the weakest one, so it can be
    // loose on mixes. Reports carry this flag to avoid overclaiming.
    bool derived_extension = false;
};

// r/(4*beta) * Psi(alpha). Strict mode insists every factor shares one
// (r, beta) pair; generalized mode renormalizes every family to multiplicity
// 2 and uses the largest beta_2.
inline LowerBound lower_bound(const ProductSpec& spec, BoundMode mode = BoundMode::Strict) {
    PsiValue p = psi(spec);
    LowerBound out;
    out.mode = mode;
    if (mode == BoundMode::Strict) {
        int64_t r0 = spec.factors[0].r;
        Rat beta0 = normalized_congestion(spec.factors[0]);
        for (const auto& f : spec.factors) {
            if (f.r != r0 || normalized_congestion(f) != beta0)
                fail(Errc::MixedBetaInStrictMode,
                     "factors do not share one (r, beta) pair; use the generalized mode");
        }
        out.value = Rat(r0) / (Rat(4) * beta0) * Rat(p.psi);
    } else {
        Rat max_beta = 0;
        for (const auto& f : spec.factors)
            max_beta = std::max(max_beta, detail::beta_at(f.kind, f.k, 2));
        out.value = Rat(2) / (Rat(4) * max_beta) * Rat(p.psi);
        out.derived_extension = true;
    }
    out.ceiling = rat_ceil(out.value);
    return out;
}

// Whether strict mode is applicable (all factors share one (r, beta) pair).
inline bool uniform_beta(const ProductSpec& spec) {
    int64_t r0 = spec.factors[0].r;
    Rat beta0 = normalized_congestion(spec.factors[0]);
    for (const auto& f : spec.factors)
        if (f.r != r0 || normalized_congestion(f) != beta0) return false;
    return true;
}

// Strict when the factors allow it, generalized otherwise.
inline LowerBound auto_lower_bound(const ProductSpec& spec) {
    return lower_bound(spec, uniform_beta(spec) ? BoundMode::Strict : BoundMode::Generalized);
}

// max_i CC(G_i) * Psi(alpha).
inline BigInt upper_bound(const ProductSpec& spec) {
    BigInt max_cc = 0;
    for (const auto& f : spec.factors) max_cc = std::max(max_cc, central_cut(f));
    return max_cc * psi(spec).psi;
}

// Near-bisection realizing the upper bound: relabel each factor by its
// central order and take the first floor(n/2) vertices of the relabeled
// lexicographic order. Cutting dimension 1 in half recurses into the middle
// hyperplane whenever k_1 is odd, which is exactly what the relabeled prefix
// does digit by digit.
inline Partition constructive_bisection(const ProductSpec& spec) {
    if (spec.n < 2) fail(Errc::BadArgument, "nothing to bisect");
    if (spec.n > kMaxMaterializedServers) fail(Errc::Overflow, "partition would be too large");
    const int64_t n = to_int64(spec.n);
    const int64_t half = n / 2;
    const auto radices = spec.radices();
    const int d = spec.d;

    // pos[i][digit] = rank of the digit in factor i's central order
    std::vector<std::vector<int64_t>> pos(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto order = central_order(spec.factors[static_cast<size_t>(i)]);
        pos[static_cast<size_t>(i)].resize(order.size());
        for (size_t j = 0; j < order.size(); ++j)
            pos[static_cast<size_t>(i)][static_cast<size_t>(order[j])] =
                static_cast<int64_t>(j);
    }

    Partition s;
    s.members.reserve(static_cast<size_t>(half));
    Coord digits(static_cast<size_t>(d), 0);
    for (int64_t x = 0; x < n; ++x) {
        int64_t rel = 0;
        int64_t rest = x;
        for (int i = d - 1; i >= 0; --i) {
            digits[static_cast<size_t>(i)] = rest % radices[static_cast<size_t>(i)];
            rest /= radices[static_cast<size_t>(i)];
        }
        for (int i = 0; i < d; ++i)
            rel = rel * radices[static_cast<size_t>(i)] +
                  pos[static_cast<size_t>(i)][static_cast<size_t>(digits[static_cast<size_t>(i)])];
        if (rel < half) s.members.push_back(x);
    }
    return s;
}

}  // namespace bwkit
