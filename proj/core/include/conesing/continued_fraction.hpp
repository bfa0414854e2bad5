#pragma once

#include "conesing/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace conesing {

/// Hirzebruch-Jung expansion alpha/beta = c1 - 1/(c2 - 1/(... - 1/cs)), every ci >= 2.
///
/// Requires 0 < beta < alpha and gcd(alpha, beta) = 1.
std::vector<std::int64_t> hj_expand(std::int64_t alpha, std::int64_t beta);

/// Evaluates [c1, ..., cs] back to c1 - 1/(c2 - ...). Empty input is rejected.
Rational hj_evaluate(std::span<const std::int64_t> coefficients);

}  // namespace conesing
