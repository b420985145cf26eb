#include "catpart/counting.hpp"

#include "catpart/error.hpp"

namespace catpart::counting {
namespace {

// Every division performed here is claimed exact; a nonzero remainder is a bug.
ExactInteger exact_divide(const ExactInteger& numerator, const ExactInteger& denominator,
                          const char* what) {
  ExactInteger quotient;
  ExactInteger remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw internal_error(std::string("inexact division in ") + what);
  }
  return quotient;
}

}  // namespace

ExactInteger binomial(long n, long r) {
  if (n < 0) throw invalid_argument("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  ExactInteger result = 1;
  // result stays integral: after step i it equals binomial(n - r + i, i).
  for (long i = 1; i <= r; ++i) {
    result = exact_divide(result * (n - r + i), i, "binomial");
  }
  return result;
}

ExactInteger catalan(long n) {
  if (n < 0) throw invalid_argument("catalan: n must be nonnegative");
  return exact_divide(binomial(2 * n, n), n + 1, "catalan");
}

ExactInteger ballot(long ell, long m) {
  if (ell < 1) throw invalid_argument("ballot: ell must be positive");
  if (m < 0) throw invalid_argument("ballot: m must be nonnegative");
  return binomial(2 * ell + m, ell) - binomial(2 * ell + m, ell - 1);
}

ExactInteger generalized_catalan(long k, long gamma, long n) {
  if (k < 1 || gamma < 1) throw invalid_argument("generalized_catalan: k and gamma must be positive");
  if (n < 0) throw invalid_argument("generalized_catalan: n must be nonnegative");
  return exact_divide(gamma * binomial(k * n + gamma, n), n * k + gamma, "generalized_catalan");
}

std::string to_decimal(const ExactInteger& value) { return value.str(); }

}  // namespace catpart::counting
