// Exact integer/rational arithmetic used by every formula in the toolkit.
// No floating point is involved anywhere in the bound computations.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "bwkit/errors.hpp"

namespace bwkit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Ceiling of a non-negative rational.
inline BigInt rat_ceil(const Rat& r) {
    BigInt p = rat_num(r), q = rat_den(r);
    BigInt d = p / q;
    if (p % q != 0 && p >= 0) ++d;
    return d;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Canonical text form: "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline std::string bigint_str(const BigInt& v) { return v.str(); }

inline int64_t to_int64(const BigInt& v, const char* what = "value") {
    if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
        fail(Errc::Overflow, std::string(what) + " does not fit in 64 bits");
    return static_cast<int64_t>(v);
}

}  // namespace bwkit
