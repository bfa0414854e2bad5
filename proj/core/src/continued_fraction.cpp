#include "conesing/continued_fraction.hpp"

#include "conesing/error.hpp"

#include <numeric>
#include <string>

namespace conesing {

std::vector<std::int64_t> hj_expand(std::int64_t alpha, std::int64_t beta) {
  if (beta <= 0 || beta >= alpha) {
    throw InvalidInput("hj_expand needs 0 < beta < alpha, got (" + std::to_string(alpha) + ", " +
                       std::to_string(beta) + ")");
  }
  if (std::gcd(alpha, beta) != 1) {
    throw InvalidInput("hj_expand needs coprime input, got (" + std::to_string(alpha) + ", " +
                       std::to_string(beta) + ")");
  }
  std::vector<std::int64_t> out;
  while (beta > 0) {
    const std::int64_t c = (alpha + beta - 1) / beta;
    out.push_back(c);
    const std::int64_t next = c * beta - alpha;
    alpha = beta;
    beta = next;
  }
  return out;
}

Rational hj_evaluate(std::span<const std::int64_t> coefficients) {
  if (coefficients.empty()) throw InvalidInput("empty continued fraction");
  Rational value(coefficients.back());
  for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
    if (value.is_zero()) throw InvalidInput("continued fraction hits a zero denominator");
    value = Rational(*it) - value.reciprocal();
  }
  return value;
}

}  // namespace conesing
