#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "superjack/error.hpp"

namespace superjack {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw error(errc::invalid_argument, "malformed rational: \"" + s + "\"");
    }
}

}  // namespace superjack
