// Factor graph families and their validated specs.
//
// Eight one-dimensional families can appear as Cartesian factors:
//   Path, Ring, CBT (complete binary tree), XT (CBT with the leaves joined
//   in a path), Clique, RClique (clique with r parallel edges per pair),
//   SSA (k servers on a switch, star model), SSB (k servers on a hyperlink).
#pragma once

#include <cstdint>
#include <string>

#include "bwkit/errors.hpp"

namespace bwkit {

enum class FactorKind { Path, Ring, CBT, XT, Clique, RClique, SSA, SSB };

inline const char* factor_kind_name(FactorKind kind) {
    switch (kind) {
        case FactorKind::Path: return "path";
        case FactorKind::Ring: return "ring";
        case FactorKind::CBT: return "cbt";
        case FactorKind::XT: return "xt";
        case FactorKind::Clique: return "clique";
        case FactorKind::RClique: return "rclique";
        case FactorKind::SSA: return "ssa";
        case FactorKind::SSB: return "ssb";
    }
    return "?";
}

// k == 2^j - 1 for some j >= 1, i.e. a full binary-tree node count.
inline bool is_full_tree_size(int64_t k) {
    if (k < 1) return false;
    uint64_t u = static_cast<uint64_t>(k) + 1;
    return (u & (u - 1)) == 0;
}

// Canonical embedding multiplicity: 2 for the families whose congestion is
// only stated for the dual-route embedding, 1 for everything else.
inline int64_t canonical_multiplicity(FactorKind kind) {
    return (kind == FactorKind::Ring || kind == FactorKind::XT) ? 2 : 1;
}

struct FactorSpec {
    FactorKind kind;
    int64_t k = 0;  // node count
    int64_t r = 0;  // embedding multiplicity (0 = use canonical)

    FactorSpec() = default;
    FactorSpec(FactorKind kind_, int64_t k_, int64_t r_ = 0)
        : kind(kind_), k(k_), r(r_ == 0 ? canonical_multiplicity(kind_) : r_) {
        validate();
    }

    void validate() const {
        if (k < 1) fail(Errc::InvalidK, "factor needs at least one node");
        switch (kind) {
            case FactorKind::Path:
                break;
            case FactorKind::Ring:
                if (k < 2) fail(Errc::InvalidK, "ring needs k >= 2");
                break;
            case FactorKind::CBT:
            case FactorKind::XT:
                if (!is_full_tree_size(k))
                    fail(Errc::InvalidK, std::string(factor_kind_name(kind)) +
                                             " needs k = 2^j - 1, got " + std::to_string(k));
                break;
            case FactorKind::Clique:
                break;
            case FactorKind::RClique:
                break;
            case FactorKind::SSA:
            case FactorKind::SSB:
                if (k < 2) fail(Errc::InvalidK, "switched star needs k >= 2");
                break;
        }
        if (r < 1) fail(Errc::UnsupportedMultiplicity, "multiplicity must be positive");
        if (kind != FactorKind::RClique && r != canonical_multiplicity(kind))
            fail(Errc::UnsupportedMultiplicity,
                 std::string(factor_kind_name(kind)) + " is only supported at r = " +
                     std::to_string(canonical_multiplicity(kind)));
    }

    bool switched() const { return kind == FactorKind::SSA || kind == FactorKind::SSB; }

    std::string str() const {
        std::string s = std::string(factor_kind_name(kind)) + std::to_string(k);
        if (kind == FactorKind::RClique) s += "(r=" + std::to_string(r) + ")";
        return s;
    }
};

inline FactorKind factor_kind_from_name(const std::string& name) {
    if (name == "path") return FactorKind::Path;
    if (name == "ring") return FactorKind::Ring;
    if (name == "cbt") return FactorKind::CBT;
    if (name == "xt") return FactorKind::XT;
    if (name == "clique") return FactorKind::Clique;
    if (name == "rclique") return FactorKind::RClique;
    if (name == "ssa") return FactorKind::SSA;
    if (name == "ssb") return FactorKind::SSB;
    fail(Errc::BadArgument, "unknown factor family '" + name + "'");
}

}  // namespace bwkit
