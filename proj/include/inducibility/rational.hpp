#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "inducibility/errors.hpp"

namespace ind {

// Arbitrary-precision integers and rationals. Rationals are kept in lowest
// terms with a positive denominator by the backend; helpers below never break
// that canonical form. All comparisons are exact.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

// Serialized form used everywhere a rational leaves the library: "num/den",
// lowest terms, denominator printed even when 1.
inline std::string to_fraction_string(const BigRational& q) {
    return num(q).str() + "/" + den(q).str();
}

inline double to_double(const BigRational& q) { return static_cast<double>(q); }

// Exact rational value of a double (every finite double is a binary rational).
inline BigRational rational_from_double(double x) {
    if (x != x || x - x != 0.0) throw domain_error("rational_from_double: non-finite value");
    return BigRational(x);
}

inline BigRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.empty()) throw domain_error("parse_rational: empty input");
            return BigRational(BigInt(text));
        }
        const std::string ns = text.substr(0, slash);
        const std::string ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty())
            throw domain_error("parse_rational: malformed rational '" + text + "'");
        BigInt n(ns);
        BigInt d(ds);
        if (d == 0) throw domain_error("parse_rational: zero denominator");
        return BigRational(n, d);
    } catch (const std::runtime_error&) {
        throw domain_error("parse_rational: malformed rational '" + text + "'");
    }
}

// q^e for integer e >= 0 (0^0 = 1).
inline BigRational rational_pow(const BigRational& q, int e) {
    if (e < 0) throw domain_error("rational_pow: negative exponent");
    BigRational acc(1), base = q;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline BigInt int_pow(const BigInt& b, int e) {
    if (e < 0) throw domain_error("int_pow: negative exponent");
    return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

}  // namespace ind
