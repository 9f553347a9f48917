#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permident/matrix.hpp"

namespace permident {

using RationalVector = std::vector<Rational>;

/// e_0..e_n of x in one O(n^2) pass over the product recurrence for
/// prod_i (1 + x_i t).
std::vector<Rational> elementary_symmetric_all(const RationalVector& x);

/// e_k(x): 1 for k = 0, the k-subset sum for 1 <= k <= n, 0 otherwise.
Rational elementary_symmetric(const RationalVector& x, long k);

/// p_k(x) = sum_i x_i^k for k >= 1.
Rational power_sum(const RationalVector& x, long k);

/// Vandermonde product prod_{i<j} (x_j - x_i); 1 for a single entry.
Rational vandermonde(const RationalVector& x);

/// The n x n matrix with entry (i, j) equal to x_j^i for i > k and
/// x_j^{i-1} for i <= k (1-based i). BadK outside 0 <= k <= n.
Matrix q_matrix(const RationalVector& x, long k);

/// Comma-separated rational list, e.g. "1,2,-3/4". Requires >= 1 entry.
RationalVector parse_vector(std::string_view text);
std::string format_vector(const RationalVector& x);

}  // namespace permident
