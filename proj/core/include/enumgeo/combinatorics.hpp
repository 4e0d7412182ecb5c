#pragma once

#include "enumgeo/integer.hpp"

namespace enumgeo {

/// Binomial coefficient C(n, k) as a total function: 0 whenever k < 0,
/// n < 0, or k > n. The splitting sums iterate over full index rectangles
/// and rely on out-of-range terms vanishing.
ExactInteger binomial(long n, long k);

}  // namespace enumgeo
