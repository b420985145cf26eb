#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace catpart {

/// Arbitrary-precision signed integer. Nothing in counting touches floating point.
using ExactInteger = boost::multiprecision::cpp_int;

namespace counting {

/// Exact binomial coefficient; 0 when r < 0 or r > n.
ExactInteger binomial(long n, long r);

/// c_n = binomial(2n, n) / (n + 1).
ExactInteger catalan(long n);

/// b_{l,m} = binomial(2l+m, l) - binomial(2l+m, l-1).
ExactInteger ballot(long ell, long m);

/// C_{k,g}(n) = g / (nk + g) * binomial(kn + g, n).
ExactInteger generalized_catalan(long k, long gamma, long n);

std::string to_decimal(const ExactInteger& value);

}  // namespace counting
}  // namespace catpart
