#pragma once

#include "permident/rational.hpp"

namespace permident {

/// n!
Integer factorial(unsigned long n);

/// C(n, k); 0 when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

/// prod_{j=0}^{n} C(n, j).
Integer binomial_product(unsigned long n);

}  // namespace permident
