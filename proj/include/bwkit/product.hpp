// Product network specs and the mixed-radix coordinate codec.
//
// A ProductSpec is an ordered list of factors sorted by non-increasing node
// count; all closed forms below assume that order. Vertex x of the product
// maps to digits (x_1, ..., x_d) with digit 1 most significant, so integer
// order on indices equals lexicographic order on coordinate tuples.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bwkit/errors.hpp"
#include "bwkit/factor.hpp"
#include "bwkit/rational.hpp"

namespace bwkit {

using Coord = std::vector<int64_t>;

struct ProductSpec {
    std::vector<FactorSpec> factors;  // sorted by k, non-increasing
    std::vector<int> user_order;      // user_order[i] = position of sorted factor i in the input
    BigInt n = 1;                     // product of all k_i
    int d = 0;
    int alpha = 0;  // 1-based index of first even k_i; d if all odd

    ProductSpec() = default;

    explicit ProductSpec(std::vector<FactorSpec> fs) {
        if (fs.empty()) fail(Errc::BadArgument, "product needs at least one factor");
        for (const auto& f : fs) {
            f.validate();
            if (f.k < 2)
                fail(Errc::InvalidK,
                     "product dimensions need k >= 2 (k = 1 factors are degenerate)");
        }
        bool has_ssa = false, has_ssb = false;
        for (const auto& f : fs) {
            has_ssa |= f.kind == FactorKind::SSA;
            has_ssb |= f.kind == FactorKind::SSB;
        }
        if (has_ssa && has_ssb)
            fail(Errc::MixedSwitchModels, "star-model and hyperlink factors cannot be mixed");

        d = static_cast<int>(fs.size());
        user_order.resize(fs.size());
        std::iota(user_order.begin(), user_order.end(), 0);
        std::stable_sort(user_order.begin(), user_order.end(),
                         [&](int a, int b) { return fs[a].k > fs[b].k; });
        factors.reserve(fs.size());
        for (int idx : user_order) factors.push_back(fs[idx]);

        for (const auto& f : factors) n *= f.k;
        alpha = d;
        for (int i = 0; i < d; ++i) {
            if (factors[i].k % 2 == 0) {
                alpha = i + 1;
                break;
            }
        }
    }

    std::vector<int64_t> radices() const {
        std::vector<int64_t> ks;
        ks.reserve(factors.size());
        for (const auto& f : factors) ks.push_back(f.k);
        return ks;
    }

    bool has_switches() const {
        return std::any_of(factors.begin(), factors.end(),
                           [](const FactorSpec& f) { return f.kind == FactorKind::SSA; });
    }
    bool has_hyperedges() const {
        return std::any_of(factors.begin(), factors.end(),
                           [](const FactorSpec& f) { return f.kind == FactorKind::SSB; });
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " x ";
            s += factors[i].str();
        }
        return s;
    }
};

// --- mixed-radix codec -------------------------------------------------

inline BigInt radix_count(const std::vector<int64_t>& radices) {
    BigInt n = 1;
    for (int64_t k : radices) n *= k;
    return n;
}

inline Coord coord_of(const std::vector<int64_t>& radices, int64_t x) {
    BigInt n = radix_count(radices);
    if (x < 0 || n <= x) fail(Errc::OutOfRange, "vertex index out of range");
    Coord digits(radices.size());
    for (size_t i = radices.size(); i-- > 0;) {
        digits[i] = x % radices[i];
        x /= radices[i];
    }
    return digits;
}

inline int64_t index_of(const std::vector<int64_t>& radices, const Coord& digits) {
    if (digits.size() != radices.size()) fail(Errc::OutOfRange, "coordinate arity mismatch");
    int64_t x = 0;
    for (size_t i = 0; i < radices.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= radices[i])
            fail(Errc::OutOfRange, "digit out of range");
        x = x * radices[i] + digits[i];
    }
    return x;
}

}  // namespace bwkit
