#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gpid {

// All arithmetic in the library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p", "-p", "p/q".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Raised when an internal theorem-level cross-check fails. Callers never
// catch-and-continue: a violation means a bug, not noise.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gpid
