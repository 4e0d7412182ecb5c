#pragma once

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "enumgeo/integer.hpp"

namespace enumgeo {

/// Exact rational number, always stored in lowest terms with positive
/// denominator, so equality is plain representation equality.
class ExactRational {
public:
    ExactRational() noexcept { mpq_init(v_); }
    ExactRational(long value) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, value, 1);
    }
    ExactRational(const ExactInteger& value) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_z(v_, value.raw());
    }

    /// Canonical fraction num/den. Throws std::invalid_argument when den == 0.
    ExactRational(const ExactInteger& num, const ExactInteger& den);
    ExactRational(long num, long den);

    ExactRational(const ExactRational& other) {
        mpq_init(v_);
        mpq_set(v_, other.v_);
    }
    ExactRational(ExactRational&& other) noexcept {
        mpq_init(v_);
        mpq_swap(v_, other.v_);
    }
    ExactRational& operator=(const ExactRational& other) {
        if (this != &other) mpq_set(v_, other.v_);
        return *this;
    }
    ExactRational& operator=(ExactRational&& other) noexcept {
        mpq_swap(v_, other.v_);
        return *this;
    }
    ~ExactRational() { mpq_clear(v_); }

    ExactRational& operator+=(const ExactRational& rhs) {
        mpq_add(v_, v_, rhs.v_);
        return *this;
    }
    ExactRational& operator-=(const ExactRational& rhs) {
        mpq_sub(v_, v_, rhs.v_);
        return *this;
    }
    ExactRational& operator*=(const ExactRational& rhs) {
        mpq_mul(v_, v_, rhs.v_);
        return *this;
    }
    /// Throws std::invalid_argument on division by zero.
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

    ExactRational operator-() const {
        ExactRational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) noexcept {
        const int c = mpq_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    ExactInteger numerator() const {
        ExactInteger r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    ExactInteger denominator() const {
        ExactInteger r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    int sign() const noexcept { return mpq_sgn(v_); }
    bool is_zero() const noexcept { return mpq_sgn(v_) == 0; }
    bool is_integer() const noexcept { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    /// Throws std::domain_error when the value is not integral.
    ExactInteger to_integer() const;

    /// "7", "-3/2". Integers omit the "/1".
    std::string to_string() const;

    /// Inverse of to_string. Throws std::invalid_argument on malformed input
    /// (including a zero denominator or a non-canonical spelling is fine --
    /// the value is canonicalized on construction).
    static ExactRational from_string(std::string_view text);

    std::size_t hash() const noexcept;

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

}  // namespace enumgeo

template <>
struct std::hash<enumgeo::ExactRational> {
    std::size_t operator()(const enumgeo::ExactRational& v) const noexcept { return v.hash(); }
};
