#pragma once

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace enumgeo {

/// Arbitrary-precision signed integer (sign + magnitude limbs, GMP-backed).
/// Values are immutable once constructed except through assignment, never
/// overflow, and round-trip exactly through their decimal-string form.
class ExactInteger {
public:
    ExactInteger() noexcept { mpz_init(v_); }
    ExactInteger(long value) { mpz_init_set_si(v_, value); }  // NOLINT: implicit by design

    /// Parses an optionally signed decimal string. Throws std::invalid_argument
    /// on anything else (including embedded whitespace).
    explicit ExactInteger(std::string_view decimal);

    ExactInteger(const ExactInteger& other) { mpz_init_set(v_, other.v_); }
    ExactInteger(ExactInteger&& other) noexcept {
        mpz_init(v_);
        mpz_swap(v_, other.v_);
    }
    ExactInteger& operator=(const ExactInteger& other) {
        if (this != &other) mpz_set(v_, other.v_);
        return *this;
    }
    ExactInteger& operator=(ExactInteger&& other) noexcept {
        mpz_swap(v_, other.v_);
        return *this;
    }
    ~ExactInteger() { mpz_clear(v_); }

    ExactInteger& operator+=(const ExactInteger& rhs) {
        mpz_add(v_, v_, rhs.v_);
        return *this;
    }
    ExactInteger& operator-=(const ExactInteger& rhs) {
        mpz_sub(v_, v_, rhs.v_);
        return *this;
    }
    ExactInteger& operator*=(const ExactInteger& rhs) {
        mpz_mul(v_, v_, rhs.v_);
        return *this;
    }

    friend ExactInteger operator+(ExactInteger lhs, const ExactInteger& rhs) { return lhs += rhs; }
    friend ExactInteger operator-(ExactInteger lhs, const ExactInteger& rhs) { return lhs -= rhs; }
    friend ExactInteger operator*(ExactInteger lhs, const ExactInteger& rhs) { return lhs *= rhs; }

    ExactInteger operator-() const {
        ExactInteger r(*this);
        mpz_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) noexcept {
        return mpz_cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) noexcept {
        const int c = mpz_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// -1, 0, or +1.
    int sign() const noexcept { return mpz_sgn(v_); }
    bool is_zero() const noexcept { return mpz_sgn(v_) == 0; }
    bool is_even() const noexcept { return mpz_even_p(v_) != 0; }

    ExactInteger pow(unsigned long exponent) const {
        ExactInteger r;
        mpz_pow_ui(r.v_, v_, exponent);
        return r;
    }

    bool fits_long() const noexcept { return mpz_fits_slong_p(v_) != 0; }
    /// Throws std::overflow_error when the value does not fit.
    long to_long() const;

    std::string to_string() const;

    std::size_t hash() const noexcept;

    // Low-level view for sibling wrappers (ExactRational, binomial).
    mpz_srcptr raw() const noexcept { return v_; }
    mpz_ptr raw() noexcept { return v_; }

private:
    mpz_t v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInteger& v);

}  // namespace enumgeo

template <>
struct std::hash<enumgeo::ExactInteger> {
    std::size_t operator()(const enumgeo::ExactInteger& v) const noexcept { return v.hash(); }
};
