#include "enumgeo/e6.hpp"

#include <stdexcept>

#include "enumgeo/combinatorics.hpp"
#include "enumgeo/errors.hpp"
#include "enumgeo/rational.hpp"

namespace enumgeo {

ChowElement class_a2f() {
    return ChowElement::monomial(0, 2, 2, 24) + ChowElement::monomial(0, 3, 1, 12) +
           ChowElement::monomial(0, 4, 0, 2);
}

ChowElement class_a2l() {
    return (ChowElement::monomial(1, 0, 0) + ChowElement::monomial(0, 0, 1)) * class_a2f();
}

ChowElement class_pa2() {
    const ChowElement euler = ChowElement::monomial(0, 1, 0) +
                              ChowElement::monomial(1, 0, 0, 2) -
                              ChowElement::monomial(0, 0, 1);
    return class_a2l() * euler;
}

ExactInteger cusp_tangent_line_count(long m1, long m2, long n) {
    if (m1 < 0 || m2 < 0 || n < 0) {
        throw std::invalid_argument("cusp_tangent_line_count: point/line conditions must be >= 0");
    }
    if (m1 + m2 + n != 7) return ExactInteger(0);
    // m2 line conditions cut the 2-dimensional space of lines (y1), m1 cubic
    // conditions cut the 9-dimensional space of cubics (y3), n lines pass
    // through the cusp (a). Oversized exponents make the monomial zero.
    const ChowElement conditions =
        ChowElement::monomial(static_cast<int>(m2), static_cast<int>(m1), static_cast<int>(n));
    const ExactInteger raw = chow_integrate(class_pa2() * conditions);
    if (!raw.is_even()) {
        throw ConsistencyError("CT(" + std::to_string(m1) + "," + std::to_string(m2) + "," +
                               std::to_string(n) + "): integrand " + raw.to_string() +
                               " is odd; expected an even double cover of the count");
    }
    return ExactRational(raw, ExactInteger(2)).to_integer();
}

ExactInteger e6_quartic_count(long n) {
    if (n < 0) throw std::invalid_argument("e6_quartic_count: n must be >= 0");
    if (n >= 3) return ExactInteger(0);

    // Equate the two boundary expansions of the four-point relation for
    // quartics with the singularity on a^n. Writing E(x) for the count at
    // x lines and CT for cusp_tangent_line_count, the (12|34) side is
    //
    //   16 E(n+2) + E(n) + 9 C(6-n,5-n) CT(5-n,2,n) + 9 CT(6-n,1,n)
    //     + 2 [ C(6-n,2) CT(5-n,2,n) + C(6-n,1) CT(6-n,1,n) + CT(7-n,0,n) ]
    //
    // and the (13|24) side is
    //
    //   4 E(n+1) + 3 C(6-n,4-n) CT(5-n,2,n) + 3 C(6-n,5-n) CT(6-n,1,n)
    //     + 3 CT(7-n,0,n) + 2 [ 3 C(6-n,1) CT(5-n,2,n) + 3 CT(6-n,1,n) ].
    //
    // The multiplicity-two weights on the ghost-bubble configurations are
    // part of the relation. E(n) appears with coefficient one, so solving
    // needs no division; binomials out of range vanish, which is what makes
    // the n = 2 instance solvable on its own.
    const ExactInteger e_next = e6_quartic_count(n + 1);
    const ExactInteger e_next2 = e6_quartic_count(n + 2);
    const ExactInteger ct_a = cusp_tangent_line_count(5 - n, 2, n);
    const ExactInteger ct_b = cusp_tangent_line_count(6 - n, 1, n);
    const ExactInteger ct_c = cusp_tangent_line_count(7 - n, 0, n);

    const ExactInteger lhs_known =
        ExactInteger(16) * e_next2 +
        ExactInteger(9) * binomial(6 - n, 5 - n) * ct_a +
        ExactInteger(9) * binomial(6 - n, 6 - n) * ct_b +
        ExactInteger(2) * (binomial(6 - n, 2) * ct_a + binomial(6 - n, 1) * ct_b +
                           binomial(6 - n, 0) * ct_c);
    const ExactInteger rhs =
        ExactInteger(4) * e_next +
        ExactInteger(3) * binomial(6 - n, 4 - n) * ct_a +
        ExactInteger(3) * binomial(6 - n, 5 - n) * ct_b +
        ExactInteger(3) * binomial(6 - n, 6 - n) * ct_c +
        ExactInteger(2) * (ExactInteger(3) * binomial(6 - n, 1) * ct_a +
                           ExactInteger(3) * binomial(6 - n, 0) * ct_b);
    return rhs - lhs_known;
}

}  // namespace enumgeo
