// Exhaustive instance enumeration per family: every valid sorted dimension
// tuple (and family mix) with n <= max_n. Drives the verify command and the
// cross-validation suites.
#pragma once

#include <cstdint>
#include <vector>

#include "bwkit/catalog.hpp"

namespace bwkit {

struct InstanceLimits {
    int64_t max_n = 24;
    int64_t max_clique_k = 0;  // 0 = no extra cap (cliques get dense fast)
};

namespace detail {

inline std::vector<FactorKind> family_kinds(Family fam) {
    switch (fam) {
        case Family::Array: return {FactorKind::Path};
        case Family::Torus: return {FactorKind::Ring};
        case Family::MCT: return {FactorKind::CBT};
        case Family::MCTP: return {FactorKind::Path, FactorKind::CBT};
        case Family::MCX: return {FactorKind::XT};
        case Family::MCXR: return {FactorKind::Ring, FactorKind::XT};
        case Family::Hamming: return {FactorKind::Clique};
        case Family::BCubeA: return {FactorKind::SSA};
        case Family::BCubeB: return {FactorKind::SSB};
    }
    return {};
}

inline bool kind_admits_k(FactorKind kind, int64_t k) {
    if (k < 2) return false;
    if (kind == FactorKind::CBT || kind == FactorKind::XT) return is_full_tree_size(k);
    return true;
}

}  // namespace detail

inline std::vector<CatalogEntry> family_instances(Family fam, const InstanceLimits& lim) {
    std::vector<CatalogEntry> out;
    const auto kinds = detail::family_kinds(fam);

    if (fam == Family::BCubeA || fam == Family::BCubeB) {
        for (int64_t k = 2; k <= lim.max_n; ++k) {
            int64_t n = k;
            for (int d = 1; n <= lim.max_n; ++d, n *= k) {
                std::vector<FactorSpec> fs(static_cast<size_t>(d), FactorSpec(kinds[0], k));
                out.push_back(make_catalog_entry(fam, ProductSpec(fs)));
            }
        }
        return out;
    }

    // factors sorted by (k desc, kind rank desc) to avoid duplicate multisets
    std::vector<FactorSpec> current;
    auto recurse = [&](auto&& self, int64_t product, int64_t max_k, int max_rank) -> void {
        if (!current.empty()) out.push_back(make_catalog_entry(fam, ProductSpec(current)));
        for (int64_t k = max_k; k >= 2; --k) {
            if (product * k > lim.max_n) continue;
            if (lim.max_clique_k && fam == Family::Hamming && k > lim.max_clique_k) continue;
            for (size_t r = 0; r < kinds.size(); ++r) {
                if (k == max_k && static_cast<int>(r) > max_rank) continue;
                if (!detail::kind_admits_k(kinds[r], k)) continue;
                current.emplace_back(kinds[r], k);
                self(self, product * k, k, static_cast<int>(r));
                current.pop_back();
            }
        }
    };
    recurse(recurse, 1, lim.max_n, static_cast<int>(kinds.size()));
    return out;
}

inline const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = {Family::Array, Family::Torus,  Family::MCT,
                                             Family::MCTP,  Family::MCX,    Family::MCXR,
                                             Family::Hamming, Family::BCubeA, Family::BCubeB};
    return fams;
}

inline const std::vector<Family>& exact_families() {
    static const std::vector<Family> fams = {Family::Array, Family::Torus, Family::MCT,
                                             Family::MCTP,  Family::MCX,   Family::MCXR};
    return fams;
}

}  // namespace bwkit
