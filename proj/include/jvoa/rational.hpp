#ifndef JVOA_RATIONAL_HPP
#define JVOA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace jvoa {

// Exact scalars. cpp_rational keeps gcd(|num|,den)=1 and den>0 at all times,
// which is exactly the canonical form every serialized value relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p" or "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline Rational pow2(long e) // 2^e for e of either sign
{
    Rational r = 1;
    Rational base = e >= 0 ? Rational(2) : Rational(1, 2);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i)
        r *= base;
    return r;
}

} // namespace jvoa

#endif
