#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace djg {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when q = 1.
inline auto to_string(const Rational & r) -> std::string
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline auto to_double(const Rational & r) -> double
{
    return boost::rational_cast<double>(r);
}

}
