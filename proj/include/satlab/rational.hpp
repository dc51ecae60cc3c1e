#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace satlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational rat(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

/// m*(m-1)/2 as an exact rational; the pair count of an m-element set.
inline Rational binom2(const BigInt& m) { return Rational(m * (m - 1), 2); }

/// Reduced "p/q"; plain "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    std::string s = r.numerator().str();
    if (r.denominator() != 1)
        s += "/" + r.denominator().str();
    return s;
}

inline double to_double(const Rational& r)
{
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

/// Nearest rational with denominator at most max_den (continued fractions).
Rational rational_from_double(double x, long long max_den);

} // namespace satlab
