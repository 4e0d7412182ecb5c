#include "enumgeo/combinatorics.hpp"

namespace enumgeo {

ExactInteger binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return ExactInteger(0);
    ExactInteger r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace enumgeo
