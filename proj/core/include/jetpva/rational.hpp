#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace jetpva {

// Exact arithmetic over Q. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need; no
// floating point anywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n)
{
    Int r = 1;
    for (int k = 2; k <= n; ++k)
        r *= k;
    return r;
}

inline Int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Prints "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rational &r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace jetpva
