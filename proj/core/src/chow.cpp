#include "enumgeo/chow.hpp"

namespace enumgeo {

namespace {
bool in_ring(int e1, int e3, int ea) {
    return e1 >= 0 && e1 <= ChowElement::kMaxY1 && e3 >= 0 && e3 <= ChowElement::kMaxY3 &&
           ea >= 0 && ea <= ChowElement::kMaxA;
}
}  // namespace

ChowElement ChowElement::monomial(int e1, int e3, int ea, ExactInteger coeff) {
    ChowElement r;
    if (in_ring(e1, e3, ea) && !coeff.is_zero()) r.terms_[{e1, e3, ea}] = std::move(coeff);
    return r;
}

ChowElement& ChowElement::operator+=(const ChowElement& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

ChowElement operator*(const ChowElement& lhs, const ChowElement& rhs) {
    ChowElement r;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            const int e1 = ea.y1 + eb.y1, e3 = ea.y3 + eb.y3, epa = ea.a + eb.a;
            if (!in_ring(e1, e3, epa)) continue;
            auto [it, inserted] = r.terms_.try_emplace(Exponents{e1, e3, epa}, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

ChowElement operator*(const ExactInteger& scalar, const ChowElement& x) {
    ChowElement r;
    if (scalar.is_zero()) return r;
    for (const auto& [e, c] : x.terms_) r.terms_[e] = scalar * c;
    return r;
}

ExactInteger ChowElement::coefficient(int e1, int e3, int ea) const {
    if (auto it = terms_.find(Exponents{e1, e3, ea}); it != terms_.end()) return it->second;
    return ExactInteger(0);
}

std::string ChowElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    auto power = [](const char* var, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return std::string("*") + var;
        return std::string("*") + var + "^" + std::to_string(e);
    };
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + power("y1", e.y1) + power("y3", e.y3) + power("a", e.a);
    }
    return s;
}

ChowElement chow_mul(const ChowElement& x, const ChowElement& y) { return x * y; }

ExactInteger chow_integrate(const ChowElement& x) {
    return x.coefficient(ChowElement::kMaxY1, ChowElement::kMaxY3, ChowElement::kMaxA);
}

}  // namespace enumgeo
