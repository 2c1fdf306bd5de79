// Per-factor metrics: congestion m_r, normalized congestion beta_r = m_r/sigma,
// central cut CC, and the central vertex orders used to build constructive
// bisections. A separate unique-routing oracle recomputes tree congestions
// from first principles.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bwkit/errors.hpp"
#include "bwkit/factor.hpp"
#include "bwkit/rational.hpp"
#include "bwkit/topology.hpp"

namespace bwkit {

// sigma_k: k^2 for even k, k^2 - 1 for odd k.
inline BigInt sigma(const BigInt& k) {
    if (k < 1) fail(Errc::InvalidK, "sigma needs k >= 1");
    BigInt s = k * k;
    if (k % 2 != 0) s -= 1;
    return s;
}
inline BigInt sigma(int64_t k) { return sigma(BigInt(k)); }

// Congestion of embedding rK_k into the factor. For rings and XTs this is
// the dual-route shortest-path value at r = 2, the multiplicity every bound
// in the toolkit uses for those families.
inline BigInt congestion(const FactorSpec& f) {
    f.validate();
    BigInt k = f.k, r = f.r;
    if (k == 1) return 0;
    switch (f.kind) {
        case FactorKind::Path:
            return r * ((k * k) / 4);  // == r*k^2/4 even, r*(k^2-1)/4 odd
        case FactorKind::CBT:
            return r * ((k * k - 1) / 4);
        case FactorKind::Ring:
        case FactorKind::XT:
            return (k * k) / 4;  // r = 2; one route per direction
        case FactorKind::Clique:
        case FactorKind::RClique:
            return r;  // self-embedding
        case FactorKind::SSA:
            return r * (k - 1);
        case FactorKind::SSB:
            return r * k * (k - 1) / 2;
    }
    fail(Errc::BadArgument, "unreachable");
}

namespace detail {

// beta at an arbitrary multiplicity; closed forms, exact for every k
// (including k = 1 where m/sigma degenerates to 0/0).
inline Rat beta_at(FactorKind kind, int64_t k64, const BigInt& r) {
    BigInt k = k64;
    switch (kind) {
        case FactorKind::Path:
        case FactorKind::CBT:
            return Rat(r, 4);
        case FactorKind::Ring:
        case FactorKind::XT:
            if (r != 2) fail(Errc::UnsupportedMultiplicity, "ring/xt beta defined at r = 2 only");
            return Rat(1, 4);
        case FactorKind::Clique:
        case FactorKind::RClique:
            if (k < 2) fail(Errc::InvalidK, "clique beta needs k >= 2");
            return Rat(r, sigma(k));
        case FactorKind::SSA:
            return Rat(r * (k - 1), sigma(k));  // (k-1)/k^2 even, 1/(k+1) odd at r = 1
        case FactorKind::SSB:
            return Rat(r * k * (k - 1) / 2, sigma(k));  // (k-1)/2k even, k/(2(k+1)) odd
    }
    fail(Errc::BadArgument, "unreachable");
}

}  // namespace detail

inline Rat normalized_congestion(const FactorSpec& f) {
    f.validate();
    return detail::beta_at(f.kind, f.k, f.r);
}

struct FactorMetrics {
    BigInt m_r;
    Rat beta_r;
    BigInt cc;
    int64_t r;
};

inline BigInt central_cut(const FactorSpec& f) {
    f.validate();
    if (f.k < 2) fail(Errc::InvalidK, "central cut needs k >= 2");
    BigInt k = f.k;
    switch (f.kind) {
        case FactorKind::Path:
        case FactorKind::CBT:
            return 1;
        case FactorKind::Ring:
        case FactorKind::XT:
            return 2;
        case FactorKind::SSA:
            return k / 2;  // switch sides with the majority
        case FactorKind::SSB:
            return 1;  // the single hyperlink
        case FactorKind::Clique:
        case FactorKind::RClique:
            return BigInt(f.r) * (k / 2) * (k - k / 2);  // balanced complete-bipartite count
    }
    fail(Errc::BadArgument, "unreachable");
}

inline FactorMetrics factor_metrics(const FactorSpec& f) {
    return {congestion(f), normalized_congestion(f), central_cut(f), f.r};
}

// Unique-routing congestion oracle for trees: removing edge e splits the
// tree into components of a and k - a vertices, and every one of the
// r*a*(k-a) pairs crosses e.
inline BigInt unique_path_congestion_oracle(const Topology& t, int64_t r) {
    const int64_t k = t.servers;
    if (!t.hyperedges.empty() || !t.switches.empty())
        fail(Errc::NotATree, "tree oracle needs a plain-edge topology");
    if (t.edge_count() != k - 1) fail(Errc::NotATree, "tree needs exactly k - 1 edges");
    if (k == 1) return 0;

    std::vector<std::vector<int32_t>> adj(static_cast<size_t>(k));
    for (const auto& e : t.edges) {
        if (e.mult != 1) fail(Errc::NotATree, "parallel edges");
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    // iterative DFS from 0; subtree sizes give one component per parent edge
    std::vector<int64_t> size(static_cast<size_t>(k), 1);
    std::vector<int32_t> parent(static_cast<size_t>(k), -1), order;
    order.reserve(static_cast<size_t>(k));
    std::vector<int32_t> stack = {0};
    std::vector<char> seen(static_cast<size_t>(k), 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int32_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int32_t w : adj[static_cast<size_t>(v)]) {
            if (seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            parent[static_cast<size_t>(w)] = v;
            stack.push_back(w);
        }
    }
    if (static_cast<int64_t>(order.size()) != k) fail(Errc::NotATree, "disconnected");
    BigInt best = 0;
    for (size_t i = order.size(); i-- > 1;) {
        int32_t v = order[i];
        size[static_cast<size_t>(parent[static_cast<size_t>(v)])] +=
            size[static_cast<size_t>(v)];
        BigInt a = size[static_cast<size_t>(v)];
        best = std::max(best, BigInt(r) * a * (k - a));
    }
    return best;
}

namespace detail {

// Hamiltonian sub-paths of an XT subtree rooted at v (0-based heap index):
//   down_right: v -> ... -> rightmost leaf of the subtree
//   down_left:  v -> ... -> leftmost leaf of the subtree
//   across:     leftmost leaf -> ... -> rightmost leaf (through v)
// Consecutive elements are always XT-adjacent.
inline void xt_down_right(int64_t v, int64_t k, std::vector<int64_t>& out);
inline void xt_down_left(int64_t v, int64_t k, std::vector<int64_t>& out);
inline void xt_across(int64_t v, int64_t k, std::vector<int64_t>& out);

inline void xt_down_right(int64_t v, int64_t k, std::vector<int64_t>& out) {
    out.push_back(v);
    if (2 * v + 1 >= k) return;
    xt_down_right(2 * v + 1, k, out);
    xt_across(2 * v + 2, k, out);
}

inline void xt_down_left(int64_t v, int64_t k, std::vector<int64_t>& out) {
    out.push_back(v);
    if (2 * v + 1 >= k) return;
    xt_down_left(2 * v + 2, k, out);
    std::vector<int64_t> tmp;
    xt_across(2 * v + 1, k, tmp);
    out.insert(out.end(), tmp.rbegin(), tmp.rend());
}

inline void xt_across(int64_t v, int64_t k, std::vector<int64_t>& out) {
    if (2 * v + 1 >= k) {
        out.push_back(v);
        return;
    }
    std::vector<int64_t> tmp;
    xt_down_left(2 * v + 1, k, tmp);
    out.insert(out.end(), tmp.rbegin(), tmp.rend());
    out.push_back(v);
    xt_down_right(2 * v + 2, k, out);
}

inline void cbt_in_order(int64_t v, int64_t k, std::vector<int64_t>& out) {
    if (v >= k) return;
    cbt_in_order(2 * v + 1, k, out);
    out.push_back(v);
    cbt_in_order(2 * v + 2, k, out);
}

}  // namespace detail

// Vertex order whose floor(k/2)-prefix (and, symmetrically, suffix) cuts
// exactly central_cut(f) factor links. Used to lift the array bisection to
// arbitrary factors.
//   Path/Ring/Clique/SSA/SSB: natural order.
//   CBT: in-order traversal (left subtree, root, right subtree).
//   XT: a Hamiltonian cycle visiting the left subtree, the root, then the
//       right subtree, so both root subtrees sit at the two ends.
inline std::vector<int64_t> central_order(const FactorSpec& f) {
    f.validate();
    if (f.k < 2) fail(Errc::InvalidK, "central order needs k >= 2");
    std::vector<int64_t> order;
    order.reserve(static_cast<size_t>(f.k));
    switch (f.kind) {
        case FactorKind::Path:
        case FactorKind::Ring:
        case FactorKind::Clique:
        case FactorKind::RClique:
        case FactorKind::SSA:
        case FactorKind::SSB:
            for (int64_t i = 0; i < f.k; ++i) order.push_back(i);
            break;
        case FactorKind::CBT:
            detail::cbt_in_order(0, f.k, order);
            break;
        case FactorKind::XT: {
            // rightmost leaf of left subtree -> ... -> left child, root,
            // right child -> ... -> leftmost leaf of right subtree
            std::vector<int64_t> left;
            detail::xt_down_right(1, f.k, left);
            order.insert(order.end(), left.rbegin(), left.rend());
            order.push_back(0);
            detail::xt_down_left(2, f.k, order);
            break;
        }
    }
    return order;
}

}  // namespace bwkit
