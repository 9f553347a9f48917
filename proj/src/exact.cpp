#include "permident/exact.hpp"

namespace permident {

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return Integer(0);
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Integer binomial_product(unsigned long n) {
    Integer p(1);
    for (unsigned long j = 0; j <= n; ++j) {
        p *= binomial(n, static_cast<long>(j));
    }
    return p;
}

}  // namespace permident
