#include "enumgeo/invariants.hpp"

#include <stdexcept>

#include "enumgeo/combinatorics.hpp"
#include "enumgeo/errors.hpp"

namespace enumgeo {

namespace {
void require_positive_degree(long d, const char* who) {
    if (d < 1) {
        throw std::invalid_argument(std::string(who) + ": degree must be positive, got " +
                                    std::to_string(d));
    }
}
}  // namespace

ExactInteger InvariantEngine::require_integral(const ExactRational& value,
                                               const InvariantKey& key) const {
    if (!value.is_integer())
        throw ConsistencyError(key.to_string() + " evaluated to non-integral " + value.to_string());
    return value.to_integer();
}

// ---------------------------------------------------------------------------
// Kontsevich numbers
// ---------------------------------------------------------------------------

ExactInteger InvariantEngine::kontsevich_n(long d, long m) const {
    require_positive_degree(d, "kontsevich_n");
    return require_integral(n_value(d, m), InvariantKey::n(d, m));
}

ExactRational InvariantEngine::n_value(long d, long m) const {
    if (m != 3 * d - 1) return 0;
    if (d == 1) return 1;
    return memo_.get_or_compute(InvariantKey::n(d, m), [&] { return compute_n(d); });
}

ExactRational InvariantEngine::compute_n(long d) const {
    // Sum over bubble splittings d = d1 + d2 with the available point
    // conditions distributed over the two components. Off-shell N factors
    // vanish, so the m1 loop runs over the whole rectangle.
    const long points = 3 * d - 4;
    ExactRational total;
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        for (long m1 = 0; m1 <= points; ++m1) {
            const long m2 = points - m1;
            ExactRational term = n_value(d1, m1 + 1) * n_value(d2, m2 + 1) * (d1 * d1 * d2 * d2) -
                                 n_value(d1, m1 + 2) * n_value(d2, m2) * (d1 * d2 * d2 * d2);
            if (term.is_zero()) continue;
            total += ExactRational(binomial(points, m1)) * term;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Tautological integrals
// ---------------------------------------------------------------------------

ExactRational InvariantEngine::phi1(long k, long d, long j, long m) const {
    require_positive_degree(d, "phi1");
    if (k != 0 && k != 1) {
        throw std::invalid_argument("phi1: no algorithm for k = " + std::to_string(k) +
                                    "; only k = 0 and k = 1 are computable");
    }
    if (j < 0 || m < 0) return 0;
    if (k + j + m != 3 * d) return 0;

    if (k == 0) {
        // ev*(a) sweeps the curve over a line (factor d); ev*(a^2) pins the
        // marked point to a fixed point; ev*(a^j) with j >= 3 is empty and
        // j = 0 drops a point constraint, leaving an odd-dimensional fiber.
        if (j == 1 && m == 3 * d - 1) return ExactRational(d) * n_value(d, 3 * d - 1);
        if (j == 2 && m == 3 * d - 2) return n_value(d, 3 * d - 1);
        return 0;
    }
    return memo_.get_or_compute(InvariantKey::phi1(1, d, j, m),
                                [&] { return compute_phi1_tangent(d, j, m); });
}

ExactRational InvariantEngine::compute_phi1_tangent(long d, long j, long m) const {
    // c1(L*) on the one-pointed space equals (1/d^2)(H - 2d ev*(a) + sum of
    // boundary strata weighted by d2^2); pairing both sides with
    // ev*(a^j) H^m turns the boundary strata into two-point x one-point
    // products glued along the diagonal, split as sum_{mu+nu=2} a^mu x a^nu.
    ExactRational total = ExactRational(1, d * d) * phi1(0, d, j, m + 1) -
                          ExactRational(2, d) * phi1(0, d, j + 1, m);
    for (long d1 = 1; d1 < d; ++d1) {
        const long d2 = d - d1;
        const ExactRational weight(d2 * d2, d * d);
        for (long m1 = 0; m1 <= m; ++m1) {
            const long m2 = m - m1;
            for (long mu = 0; mu <= 2; ++mu) {
                const long nu = 2 - mu;
                ExactRational left = phi2(d1, j, mu, m1);
                if (left.is_zero()) continue;
                ExactRational right = phi1(0, d2, nu, m2);
                if (right.is_zero()) continue;
                total += ExactRational(binomial(m, m1)) * weight * left * right;
            }
        }
    }
    return total;
}

ExactRational InvariantEngine::phi2(long d, long j1, long j2, long m) const {
    require_positive_degree(d, "phi2");
    if (j2 < 0 || j2 > 2) {
        throw std::invalid_argument("phi2: j2 must be 0, 1 or 2, got " + std::to_string(j2));
    }
    if (j1 < 0 || m < 0) return 0;
    if (j1 + j2 + m != 3 * d + 1) return 0;
    switch (j2) {
        case 0: return 0;
        case 1: return ExactRational(d) * phi1(0, d, j1, m);
        default: return phi1(0, d, j1, m + 1);
    }
}

// ---------------------------------------------------------------------------
// Two-component tangency counts
// ---------------------------------------------------------------------------

ExactInteger InvariantEngine::tangency_count(long d1, long d2, long m1, long m2, long n) const {
    require_positive_degree(d1, "tangency_count");
    require_positive_degree(d2, "tangency_count");
    const InvariantKey key = InvariantKey::tangency(d1, d2, m1, m2, n);
    return require_integral(tangency_value(d1, d2, m1, m2, n), key);
}

ExactRational InvariantEngine::tangency_value(long d1, long d2, long m1, long m2, long n) const {
    if (m1 < 0 || m2 < 0 || n < 0) return 0;
    if (m1 + m2 + n + 1 != 3 * (d1 + d2) - 2) return 0;
    return memo_.get_or_compute(InvariantKey::tangency(d1, d2, m1, m2, n),
                                [&] { return compute_tangency(d1, d2, m1, m2, n); });
}

ExactRational InvariantEngine::compute_tangency(long d1, long d2, long m1, long m2,
                                                long n) const {
    // The tangency cycle is the diagonal pullback times the Euler class
    // c1(L1*) + c1(L2*) + c1(ev* TP^2). Splitting the diagonal as
    // sum_{mu+nu=2} ev1*(a^mu) ev2*(a^nu) and writing c1(ev* TP^2) as
    // 3 ev2*(a) turns each summand into a product of one-point integrals;
    // the n line conditions through the node ride along on ev1.
    ExactRational total;
    for (long mu = 0; mu <= 2; ++mu) {
        const long nu = 2 - mu;
        total += phi1(1, d1, mu + n, m1) * phi1(0, d2, nu, m2);
        total += phi1(0, d1, mu + n, m1) * phi1(1, d2, nu, m2);
        total += ExactRational(3) * phi1(0, d1, mu + n, m1) * phi1(0, d2, nu + 1, m2);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Cuspidal counts
// ---------------------------------------------------------------------------

ExactInteger InvariantEngine::cusp_count(long d, long m, long n) const {
    require_positive_degree(d, "cusp_count");
    const Family fam = opts_.cusp_variant == CuspVariant::Derivation ? Family::C : Family::CThm;
    return require_integral(cusp_value(d, m, n), InvariantKey::cusp(fam, d, m, n));
}

ExactRational InvariantEngine::cusp_value(long d, long m, long n) const {
    if (m < 0 || n < 0) return 0;
    if (m + n != 3 * d - 2) return 0;
    if (n >= 3) return 0;      // cusp on the intersection of >= 3 generic lines: empty
    if (d <= 2) return 0;      // no cuspidal lines or conics
    const Family fam = opts_.cusp_variant == CuspVariant::Derivation ? Family::C : Family::CThm;
    return memo_.get_or_compute(InvariantKey::cusp(fam, d, m, n),
                                [&] { return compute_cusp(d, m, n); });
}

ExactRational InvariantEngine::compute_cusp(long d, long m, long n) const {
    // Both variants recurse on strictly smaller degree inside the splitting
    // sum and on strictly larger n (toward the n >= 3 base) in the head
    // terms, so the recursion is well-founded.
    const long points = 3 * d - 4 - n;  // = m - 2 point conditions to distribute
    ExactRational total;
    if (opts_.cusp_variant == CuspVariant::Derivation) {
        total += ExactRational(d) * cusp_value(d, 3 * d - 3 - n, n + 1);
        total -= ExactRational(d * d) * cusp_value(d, 3 * d - 4 - n, n + 2);
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            for (long m1 = 0; m1 <= points; ++m1) {
                const long m2 = points - m1;
                ExactRational term =
                    cusp_value(d1, m1, n) * n_value(d2, m2 + 1) * (d1 * d1 * d2 * d2) +
                    tangency_value(d1, d2, m1, m2 + 1, n) * (d1 * d2) -
                    cusp_value(d1, m1 + 1, n) * n_value(d2, m2) * (d1 * d2 * d2 * d2) -
                    tangency_value(d1, d2, m1 + 1, m2, n) * (d2 * d2);
                if (term.is_zero()) continue;
                total += ExactRational(binomial(points, m1)) * term;
            }
        }
    } else {
        total += ExactRational(d * d) * cusp_value(d, 3 * d - 3 - n, n + 1);
        total -= ExactRational(d * d) * cusp_value(d, 3 * d - 4 - n, n + 2);
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            for (long m1 = 0; m1 <= points; ++m1) {
                const long m2 = points - m1;
                ExactRational term =
                    cusp_value(d1, m1, n) * n_value(d2, m2) * (d1 * d1 * d2 * d2 * d2) -
                    cusp_value(d1, m1 + 1, n) * n_value(d2, m2) * (d1 * d2 * d2 * d2) +
                    tangency_value(d1, d2, m1, m2, n) * (d1 * d2 * d2) -
                    tangency_value(d1, d2, m1 + 1, m2, n) * (d2 * d2);
                if (term.is_zero()) continue;
                total += ExactRational(binomial(points, m1)) * term;
            }
        }
    }
    return total;
}

ExactRational InvariantEngine::wdvv_side(WdvvSplit side, long d, long n) const {
    if (d < 3) throw std::invalid_argument("wdvv_side: d must be at least 3");
    if (n < 0 || n > 2) throw std::invalid_argument("wdvv_side: n must be 0, 1 or 2");
    const long points = 3 * d - 4 - n;
    ExactRational total;
    if (side == WdvvSplit::S12_34) {
        total += cusp_value(d, 3 * d - 2 - n, n);
        total += ExactRational(d * d) * cusp_value(d, 3 * d - 4 - n, n + 2);
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            for (long m1 = 0; m1 <= points; ++m1) {
                const long m2 = points - m1;
                ExactRational term =
                    cusp_value(d1, m1 + 1, n) * n_value(d2, m2) * (d1 * d2 * d2 * d2) +
                    tangency_value(d1, d2, m1 + 1, m2, n) * (d2 * d2);
                if (term.is_zero()) continue;
                total += ExactRational(binomial(points, m1)) * term;
            }
        }
    } else {
        total += ExactRational(d) * cusp_value(d, 3 * d - 3 - n, n + 1);
        for (long d1 = 1; d1 < d; ++d1) {
            const long d2 = d - d1;
            for (long m1 = 0; m1 <= points; ++m1) {
                const long m2 = points - m1;
                ExactRational term =
                    cusp_value(d1, m1, n) * n_value(d2, m2 + 1) * (d1 * d1 * d2 * d2) +
                    tangency_value(d1, d2, m1, m2 + 1, n) * (d1 * d2);
                if (term.is_zero()) continue;
                total += ExactRational(binomial(points, m1)) * term;
            }
        }
    }
    return total;
}

}  // namespace enumgeo
