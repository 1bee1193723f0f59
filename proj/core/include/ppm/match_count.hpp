#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ppm {

/// Number of occurrences. C(n, k) outgrows 64 bits quickly, so counts are unbounded.
using MatchCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const MatchCount &c) { return c.str(); }

MatchCount binomial(int n, int k);

} // namespace ppm
