// Exact rational scalars used throughout the library.
//
// All arithmetic in this project is exact: weights are half-integers
// (stored doubled), matrix entries and traces are rationals, polynomial
// coefficients are integers.  Nothing is ever rounded.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oblock {

using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "3", "-1/2", "7/2".  Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(std::stoll(s));
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

// Half-integers are stored as doubled integers: the weight coordinate
// lambda_i = h/2 is stored as the integer h.  Kept as a distinct alias so
// signatures say what they mean.
using Half2 = long long;

inline std::string half2_string(Half2 h)
{
    if (h % 2 == 0)
        return std::to_string(h / 2);
    return std::to_string(h) + "/2";
}

} // namespace oblock
