#ifndef SPHERE_ARBOR_RATIONAL_HPP
#define SPHERE_ARBOR_RATIONAL_HPP

#include <sphere_arbor/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sphere_arbor {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    BigInt den = denominator_of(r);
    std::string s = numerator_of(r).str();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

/// Smallest integer >= r.
inline BigInt ceil(const Rational& r)
{
    BigInt num = numerator_of(r), den = denominator_of(r);
    BigInt q = num / den; // truncates toward zero
    if (q * den < num)
        ++q;
    return q;
}

/// Largest integer <= r.
inline BigInt floor(const Rational& r)
{
    BigInt num = numerator_of(r), den = denominator_of(r);
    BigInt q = num / den;
    if (q * den > num)
        --q;
    return q;
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& text)
{
    auto integer = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("+-0123456789") != std::string::npos)
            throw InvalidInput("not a rational number: '" + text + "'");
        return BigInt(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(integer(text));
    BigInt den = integer(text.substr(slash + 1));
    if (den == 0)
        throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(integer(text.substr(0, slash)), den);
}

} // namespace sphere_arbor

#endif // SPHERE_ARBOR_RATIONAL_HPP
