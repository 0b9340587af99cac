#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sszeta {

// Exact arbitrary-precision scalars. Everything that can reach q^n goes
// through Int; field-element coefficients stay in native words (p is small).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(const Int& base, std::uint64_t exp) {
    Int acc = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline Int ipow(std::int64_t base, std::uint64_t exp) { return ipow(Int(base), exp); }

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int from_decimal(const std::string& s) { return Int(s); }

inline Rat rat_num_den(const Int& num, const Int& den) {
    return Rat(boost::multiprecision::cpp_rational(num, den));
}

inline Int rat_numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_denominator(r) == 1; }

}  // namespace sszeta
