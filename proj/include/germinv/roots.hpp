#pragma once

#include <vector>

#include "germinv/polynomial.hpp"

namespace germinv {

/// Distinct rational roots of sum_k c[k] r^k, ascending. Uses a p-adic lift
/// of the roots modulo a good prime followed by exact verification.
std::vector<BigRational> rational_roots(const std::vector<BigRational>& c);

}  // namespace germinv
