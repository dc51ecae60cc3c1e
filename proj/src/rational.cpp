#include "satlab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace satlab {

Rational rational_from_double(double x, long long max_den)
{
    if (!std::isfinite(x))
        throw std::invalid_argument("cannot convert non-finite value to rational");
    if (max_den < 1)
        throw std::invalid_argument("max denominator must be positive");

    const bool neg = x < 0;
    double v = neg ? -x : x;

    // continued-fraction convergents p/q with q <= max_den
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e17)
            break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0)
            break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18)
            break;
        frac = 1.0 / rem;
    }
    if (q1 == 0)
        return Rational(0);
    return Rational{BigInt(neg ? -p1 : p1), BigInt(q1)};
}

} // namespace satlab
