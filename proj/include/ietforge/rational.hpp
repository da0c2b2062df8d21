#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ietforge/errors.hpp"

namespace ietforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::ParameterOutOfRange, "zero denominator");
    return Rational(num) / Rational(den);
}

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline Integer floor_rational(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (r < 0 && !is_integer(r)) --q;
    return q;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r);

// Accepts "p", "p/q", optional leading sign, no whitespace inside.
Rational parse_rational(std::string_view text);

// Exact value of a decimal literal such as "0.4142135" or "1e-7".
Rational parse_decimal(std::string_view text);

}  // namespace ietforge
