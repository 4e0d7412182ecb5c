#include "enumgeo/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace enumgeo {

ExactInteger::ExactInteger(std::string_view decimal) {
    mpz_init(v_);
    // mpz_set_str accepts leading whitespace and an empty mantissa after the
    // sign; reject both so the decimal form is a strict round-trip.
    bool ok = !decimal.empty();
    for (std::size_t i = 0; ok && i < decimal.size(); ++i) {
        const char c = decimal[i];
        if (i == 0 && (c == '+' || c == '-')) {
            ok = decimal.size() > 1;
            continue;
        }
        ok = c >= '0' && c <= '9';
    }
    if (ok) ok = mpz_set_str(v_, std::string(decimal).c_str(), 10) == 0;
    if (!ok) {
        mpz_clear(v_);
        throw std::invalid_argument("not a decimal integer: '" + std::string(decimal) + "'");
    }
}

long ExactInteger::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + to_string());
    return mpz_get_si(v_);
}

std::string ExactInteger::to_string() const {
    const std::size_t len = mpz_sizeinbase(v_, 10) + 2;  // sign + NUL
    std::string buf(len, '\0');
    mpz_get_str(buf.data(), 10, v_);
    buf.resize(buf.find('\0'));
    return buf;
}

std::size_t ExactInteger::hash() const noexcept {
    // FNV-1a over the limbs plus the sign.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(mpz_sgn(v_)) + 2);
    const mp_size_t n = mpz_size(v_);
    for (mp_size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(v_, i)));
    return h;
}

std::ostream& operator<<(std::ostream& os, const ExactInteger& v) { return os << v.to_string(); }

}  // namespace enumgeo
