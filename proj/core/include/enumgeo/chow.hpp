#pragma once

#include <compare>
#include <map>
#include <string>

#include "enumgeo/integer.hpp"

namespace enumgeo {

/// Element of the truncated polynomial ring
///
///     Z[y1, y3, a] / (y1^3, y3^10, a^3)
///
/// kept as a sparse exponents -> coefficient map. This models the Chow ring
/// of D1 x D3 x P^2 (lines, cubics, points in the plane: projective spaces
/// of dimension 2, 9 and 2), where y1, y3, a are the hyperplane classes.
/// Any product monomial whose exponent leaves the ring truncates to zero.
/// Integration pairs against the top class y1^2 y3^9 a^2.
class ChowElement {
public:
    static constexpr int kMaxY1 = 2;
    static constexpr int kMaxY3 = 9;
    static constexpr int kMaxA = 2;

    struct Exponents {
        int y1 = 0;
        int y3 = 0;
        int a = 0;
        friend auto operator<=>(const Exponents&, const Exponents&) = default;
    };

    ChowElement() = default;  // zero: empty term map

    /// coeff * y1^e1 * y3^e3 * a^ea; exponents outside the ring give zero.
    static ChowElement monomial(int e1, int e3, int ea, ExactInteger coeff = ExactInteger(1));

    ChowElement& operator+=(const ChowElement& rhs);
    ChowElement& operator-=(const ChowElement& rhs);
    friend ChowElement operator+(ChowElement lhs, const ChowElement& rhs) { return lhs += rhs; }
    friend ChowElement operator-(ChowElement lhs, const ChowElement& rhs) { return lhs -= rhs; }

    /// Truncated product: bilinear, commutative, associative.
    friend ChowElement operator*(const ChowElement& lhs, const ChowElement& rhs);

    friend ChowElement operator*(const ExactInteger& scalar, const ChowElement& x);

    bool operator==(const ChowElement&) const = default;

    bool is_zero() const noexcept { return terms_.empty(); }

    /// 0 when the monomial is absent (or outside the ring).
    ExactInteger coefficient(int e1, int e3, int ea) const;

    /// Degree-ordered term map; zero coefficients never appear.
    const std::map<Exponents, ExactInteger>& terms() const noexcept { return terms_; }

    /// "24*y3^2*a^2 + 12*y3^3*a + 2*y3^4" style rendering, for diagnostics.
    std::string to_string() const;

private:
    std::map<Exponents, ExactInteger> terms_;
};

/// Spec-level alias for the ring product.
ChowElement chow_mul(const ChowElement& x, const ChowElement& y);

/// Pairs against the fundamental class of D1 x D3 x P^2: the coefficient of
/// y1^2 y3^9 a^2.
ExactInteger chow_integrate(const ChowElement& x);

}  // namespace enumgeo
