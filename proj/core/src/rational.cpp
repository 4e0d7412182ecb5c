#include "enumgeo/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace enumgeo {

ExactRational::ExactRational(const ExactInteger& num, const ExactInteger& den) {
    if (den.is_zero()) throw std::invalid_argument("rational with zero denominator: " + num.to_string() + "/0");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
}

ExactRational::ExactRational(long num, long den)
    : ExactRational(ExactInteger(num), ExactInteger(den)) {}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) throw std::invalid_argument("rational division by zero");
    mpq_div(v_, v_, rhs.v_);
    return *this;
}

ExactInteger ExactRational::to_integer() const {
    if (!is_integer()) throw std::domain_error("not an integer: " + to_string());
    return numerator();
}

std::string ExactRational::to_string() const {
    std::string s = numerator().to_string();
    if (!is_integer()) s += "/" + denominator().to_string();
    return s;
}

ExactRational ExactRational::from_string(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(ExactInteger(text));
    return ExactRational(ExactInteger(text.substr(0, slash)), ExactInteger(text.substr(slash + 1)));
}

std::size_t ExactRational::hash() const noexcept {
    return numerator().hash() * 31 + denominator().hash();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

}  // namespace enumgeo
