// Named product-network families, their closed-form bisection widths (exact
// values or intervals), bisection bandwidths under link/switch capacity
// models, and the summary table of all of them.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bwkit/bounds.hpp"
#include "bwkit/errors.hpp"
#include "bwkit/metrics.hpp"
#include "bwkit/product.hpp"
#include "bwkit/rational.hpp"

namespace bwkit {

enum class Family { Array, Torus, MCT, MCTP, MCX, MCXR, Hamming, BCubeA, BCubeB };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Array: return "array";
        case Family::Torus: return "torus";
        case Family::MCT: return "mct";
        case Family::MCTP: return "mctp";
        case Family::MCX: return "mcx";
        case Family::MCXR: return "mcxr";
        case Family::Hamming: return "hamming";
        case Family::BCubeA: return "bcube-a";
        case Family::BCubeB: return "bcube-b";
    }
    return "?";
}

inline Family family_from_name(const std::string& name) {
    if (name == "array") return Family::Array;
    if (name == "torus") return Family::Torus;
    if (name == "mct") return Family::MCT;
    if (name == "mctp") return Family::MCTP;
    if (name == "mcx") return Family::MCX;
    if (name == "mcxr") return Family::MCXR;
    if (name == "hamming") return Family::Hamming;
    if (name == "bcube-a") return Family::BCubeA;
    if (name == "bcube-b") return Family::BCubeB;
    fail(Errc::BadArgument, "unknown topology '" + name + "'");
}

struct CatalogEntry {
    Family family;
    ProductSpec spec;
};

namespace detail {

inline bool kind_allowed(Family fam, FactorKind kind) {
    switch (fam) {
        case Family::Array: return kind == FactorKind::Path;
        case Family::Torus: return kind == FactorKind::Ring;
        case Family::MCT: return kind == FactorKind::CBT;
        case Family::MCTP: return kind == FactorKind::Path || kind == FactorKind::CBT;
        case Family::MCX: return kind == FactorKind::XT;
        case Family::MCXR: return kind == FactorKind::Ring || kind == FactorKind::XT;
        case Family::Hamming:
            return kind == FactorKind::Clique || kind == FactorKind::RClique;
        case Family::BCubeA: return kind == FactorKind::SSA;
        case Family::BCubeB: return kind == FactorKind::SSB;
    }
    return false;
}

}  // namespace detail

inline CatalogEntry make_catalog_entry(Family fam, ProductSpec spec) {
    for (const auto& f : spec.factors)
        if (!detail::kind_allowed(fam, f.kind))
            fail(Errc::WrongFamilies, std::string(family_name(fam)) +
                                          " does not admit factor " + f.str());
    if (fam == Family::BCubeA || fam == Family::BCubeB) {
        for (const auto& f : spec.factors)
            if (f.k != spec.factors[0].k)
                fail(Errc::WrongFamilies, "BCube needs one uniform k across dimensions");
    }
    return {fam, std::move(spec)};
}

// Uniform-kind convenience constructor (not applicable to mctp/mcxr mixes).
inline CatalogEntry make_catalog_entry(Family fam, const std::vector<int64_t>& dims) {
    FactorKind kind;
    switch (fam) {
        case Family::Array: kind = FactorKind::Path; break;
        case Family::Torus: kind = FactorKind::Ring; break;
        case Family::MCT: kind = FactorKind::CBT; break;
        case Family::MCX: kind = FactorKind::XT; break;
        case Family::Hamming: kind = FactorKind::Clique; break;
        case Family::BCubeA: kind = FactorKind::SSA; break;
        case Family::BCubeB: kind = FactorKind::SSB; break;
        default:
            fail(Errc::WrongFamilies,
                 std::string(family_name(fam)) + " mixes families; pass explicit factors");
    }
    std::vector<FactorSpec> fs;
    fs.reserve(dims.size());
    for (int64_t k : dims) fs.emplace_back(kind, k);
    return make_catalog_entry(fam, ProductSpec(std::move(fs)));
}

// Closed-form bisection width: an exact value, an interval, or nothing
// (Hamming products are only sandwiched by the generic bounds here).
struct ClosedForm {
    enum class Kind { Exact, Interval, None } kind = Kind::None;
    BigInt exact;  // Kind::Exact
    Rat lo;        // Kind::Interval
    BigInt hi;     // Kind::Interval
};

inline ClosedForm closed_form_bw(const CatalogEntry& entry) {
    const ProductSpec& spec = entry.spec;
    PsiValue p = psi(spec);
    ClosedForm out;
    auto exact = [&](const BigInt& v) {
        out.kind = ClosedForm::Kind::Exact;
        out.exact = v;
    };
    switch (entry.family) {
        case Family::Array:
        case Family::MCTP:
            exact(p.psi);
            break;
        case Family::MCT: {
            BigInt sum = 0;  // Psi(d); CBT sizes are all odd so alpha == d anyway
            for (const auto& c : p.c) sum += c;
            exact(sum);
            break;
        }
        case Family::Torus:
        case Family::MCXR:
            exact(2 * p.psi);
            break;
        case Family::MCX: {
            BigInt sum = 0;
            for (const auto& c : p.c) sum += c;
            exact(2 * sum);
            break;
        }
        case Family::Hamming:
            out.kind = ClosedForm::Kind::None;
            break;
        case Family::BCubeA: {
            BigInt k = spec.factors[0].k;
            BigInt kd = 1;
            for (int i = 0; i < spec.d; ++i) kd *= k;
            out.kind = ClosedForm::Kind::Interval;
            if (k % 2 == 0) {
                out.lo = Rat(kd * k, 4 * (k - 1));
                out.hi = kd / 2;
            } else {
                out.lo = Rat((k + 1) * (kd - 1), 4 * (k - 1));
                out.hi = (kd - 1) / 2;
            }
            break;
        }
        case Family::BCubeB: {
            BigInt k = spec.factors[0].k;
            BigInt kd = 1;
            for (int i = 0; i < spec.d; ++i) kd *= k;
            out.kind = ClosedForm::Kind::Interval;
            if (k % 2 == 0)
                out.lo = Rat(kd, 2 * (k - 1));
            else
                out.lo = Rat((k + 1) * (kd - 1), 2 * k * (k - 1));
            out.hi = (kd - 1) / (k - 1);
            break;
        }
    }
    return out;
}

// Link capacity T per direction and switch capacity s, in whatever units the
// caller uses. Model choice guidance: star model when s >= floor(k/2)*2T,
// hyperlink model when s <= 2T; in between, report both and recommend
// neither.
struct CapacityModel {
    Rat link_T = 0;
    Rat switch_s = 0;
    bool has_T = false;
    bool has_s = false;
};

struct BandwidthReport {
    ClosedForm::Kind kind = ClosedForm::Kind::None;
    Rat exact;
    Rat lo, hi;
};

inline BandwidthReport bisection_bandwidth(const CatalogEntry& entry, const CapacityModel& cap) {
    ClosedForm cf = closed_form_bw(entry);
    BandwidthReport out;
    out.kind = cf.kind;
    const bool switch_bound = entry.family == Family::BCubeB;
    Rat scale;
    if (switch_bound) {
        if (!cap.has_s) fail(Errc::MissingCapacity, "hyperlink model needs the switch capacity s");
        scale = cap.switch_s;
    } else {
        if (!cap.has_T) fail(Errc::MissingCapacity, "link topologies need the link capacity T");
        scale = 2 * cap.link_T;
    }
    if (scale < 0) fail(Errc::BadArgument, "capacities must be non-negative");
    switch (cf.kind) {
        case ClosedForm::Kind::Exact:
            out.exact = scale * Rat(cf.exact);
            break;
        case ClosedForm::Kind::Interval:
            out.lo = scale * cf.lo;
            out.hi = scale * Rat(cf.hi);
            break;
        case ClosedForm::Kind::None:
            break;
    }
    return out;
}

// --- summary table ------------------------------------------------------

struct Table1Row {
    std::string product;
    std::string factors;
    std::string beta_cell;
    std::string cc_cell;
    std::string bbw_cell;
    // numeric evaluators for a uniform instance (k per dimension, d dims);
    // valid_k gates rows whose cells assume a parity or a tree shape
    std::function<bool(int64_t)> valid_k;
    std::function<Rat(int64_t)> beta_of;      // table cell as a value
    std::function<Rat(int64_t)> beta_module;  // factors-module value, per unit r
    std::function<BigInt(int64_t)> cc_of;
    std::function<BandwidthReport(int64_t k, int64_t d, const CapacityModel&)> bbw_of;
};

inline const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = [] {
        auto link_family = [](Family fam, FactorKind kind) {
            return [fam, kind](int64_t k, int64_t d, const CapacityModel& cap) {
                std::vector<FactorSpec> fs(static_cast<size_t>(d), FactorSpec(kind, k));
                return bisection_bandwidth(make_catalog_entry(fam, ProductSpec(fs)), cap);
            };
        };
        auto module_beta = [](FactorKind kind) {
            return [kind](int64_t k) {
                FactorSpec f(kind, k);
                return normalized_congestion(f) / Rat(f.r);
            };
        };
        auto any_k = [](int64_t k) { return k >= 2; };
        auto tree_k = [](int64_t k) { return k >= 3 && is_full_tree_size(k); };
        auto even_k = [](int64_t k) { return k >= 2 && k % 2 == 0; };
        auto odd_k = [](int64_t k) { return k >= 3 && k % 2 == 1; };

        std::vector<Table1Row> r;
        r.push_back({"Torus", "Ring", "1/8", "2", "4T*Psi(alpha)", any_k,
                     [](int64_t) { return Rat(1, 8); }, module_beta(FactorKind::Ring),
                     [](int64_t) { return BigInt(2); }, link_family(Family::Torus, FactorKind::Ring)});
        r.push_back({"Product of extended CBT", "XTs", "1/8", "2", "4T*Psi(alpha)", tree_k,
                     [](int64_t) { return Rat(1, 8); }, module_beta(FactorKind::XT),
                     [](int64_t) { return BigInt(2); }, link_family(Family::MCX, FactorKind::XT)});
        r.push_back({"Product of extended CBT & rings", "Rings & XTs", "1/8", "2",
                     "4T*Psi(alpha)", tree_k, [](int64_t) { return Rat(1, 8); },
                     module_beta(FactorKind::XT), [](int64_t) { return BigInt(2); },
                     link_family(Family::MCXR, FactorKind::XT)});
        r.push_back({"Mesh connected trees", "CBT", "1/4", "1", "2T*Psi(alpha)", tree_k,
                     [](int64_t) { return Rat(1, 4); }, module_beta(FactorKind::CBT),
                     [](int64_t) { return BigInt(1); }, link_family(Family::MCT, FactorKind::CBT)});
        r.push_back({"Product of CBT and paths", "Paths & CBTs", "1/4", "1", "2T*Psi(alpha)",
                     any_k, [](int64_t) { return Rat(1, 4); }, module_beta(FactorKind::Path),
                     [](int64_t) { return BigInt(1); },
                     link_family(Family::MCTP, FactorKind::Path)});
        r.push_back({"BCube", "Model A (k even)", "(k-1)/k^2", "k/2",
                     "2T*k^(d+1)/(4(k-1)) <= BBW <= 2T*k^d/2", even_k,
                     [](int64_t k) { return Rat(k - 1, BigInt(k) * k); },
                     module_beta(FactorKind::SSA), [](int64_t k) { return BigInt(k) / 2; },
                     link_family(Family::BCubeA, FactorKind::SSA)});
        r.push_back({"BCube", "Model A (k odd)", "1/(k+1)", "(k-1)/2",
                     "2T*((k+1)/4)*((k^d-1)/(k-1)) <= BBW <= 2T*(k^d-1)/2", odd_k,
                     [](int64_t k) { return Rat(1, k + 1); }, module_beta(FactorKind::SSA),
                     [](int64_t k) { return BigInt(k - 1) / 2; },
                     link_family(Family::BCubeA, FactorKind::SSA)});
        r.push_back({"BCube", "Model B (k even)", "(k-1)/2k", "1",
                     "s*k^d/(2(k-1)) <= BBW <= s*(k^d-1)/(k-1)", even_k,
                     [](int64_t k) { return Rat(k - 1, 2 * k); }, module_beta(FactorKind::SSB),
                     [](int64_t) { return BigInt(1); },
                     link_family(Family::BCubeB, FactorKind::SSB)});
        r.push_back({"BCube", "Model B (k odd)", "k/(2(k+1))", "1",
                     "s*((k+1)/(2k))*((k^d-1)/(k-1)) <= BBW <= s*(k^d-1)/(k-1)", odd_k,
                     [](int64_t k) { return Rat(k, 2 * (k + 1)); }, module_beta(FactorKind::SSB),
                     [](int64_t) { return BigInt(1); },
                     link_family(Family::BCubeB, FactorKind::SSB)});
        return r;
    }();
    return rows;
}

inline const char* table1_footnote() {
    return "beta is per unit multiplicity; ring and XT rows use the r = 2 embedding "
           "(beta_2 = 1/4, shown as 1/8).";
}

}  // namespace bwkit
