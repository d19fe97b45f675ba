#include "arcinv/laurent.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace arcinv {

namespace checked {

Coefficient add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("Laurent coefficient overflow in addition");
    return r;
}

Coefficient mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("Laurent coefficient overflow in multiplication");
    return r;
}

Exponent add_exp(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("Laurent exponent overflow");
    return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(Coefficient constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, Coefficient>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Coefficient coefficient, Exponent exponent) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exponent, Coefficient>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(Exponent e, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

Coefficient LaurentPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<LeadingTerm> LaurentPoly::leading() const {
    if (terms_.empty()) return std::nullopt;
    const auto& [e, c] = *terms_.rbegin();
    return LeadingTerm{e, c};
}

std::optional<Exponent> LaurentPoly::low_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, checked::mul(c, -1));
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(checked::add_exp(ea, eb), checked::mul(ca, cb));
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked::mul(c, -1));
    return r;
}

std::vector<std::pair<Exponent, Coefficient>> LaurentPoly::to_pairs() const {
    return {terms_.rbegin(), terms_.rend()};
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        bool negative = c < 0;
        const std::uint64_t mag = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'u';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return a - b; }
LaurentPoly neg(const LaurentPoly& a) { return -a; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly shift(const LaurentPoly& a, Exponent m) {
    std::vector<std::pair<Exponent, Coefficient>> out;
    out.reserve(a.size());
    for (const auto& [e, c] : a.terms()) out.emplace_back(checked::add_exp(e, m), c);
    return LaurentPoly::from_terms(out);
}

std::optional<LeadingTerm> degree_and_leading(const LaurentPoly& a) { return a.leading(); }

namespace {

std::int64_t checked_pow(std::int64_t base, Exponent e) {
    std::int64_t r = 1;
    for (Exponent i = 0; i < e; ++i) r = checked::mul(r, base);
    return r;
}

}  // namespace

Rational evaluate(const LaurentPoly& a, std::int64_t x) {
    if (x == 0) throw std::invalid_argument("evaluate: u = 0 is a pole of a Laurent polynomial");
    if (a.is_zero()) return {};
    // a(x) = (sum c * x^(e - low)) / x^(-low) when low < 0.
    const Exponent low = std::min<Exponent>(0, *a.low_degree());
    std::int64_t num = 0;
    for (const auto& [e, c] : a.terms()) num = checked::add(num, checked::mul(c, checked_pow(x, e - low)));
    std::int64_t den = checked_pow(x, -low);
    if (den < 0) {
        num = checked::mul(num, -1);
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("div_exact: division by the zero polynomial");
    if (a.is_zero()) return {};
    const auto [b_deg, b_lead] = *b.leading();
    // An exact quotient has lowest exponent low(a) - low(b); stop below it.
    const Exponent q_low = *a.low_degree() - *b.low_degree();
    LaurentPoly quotient;
    LaurentPoly rest = a;
    while (!rest.is_zero()) {
        const auto [r_deg, r_lead] = *rest.leading();
        const Exponent q_exp = r_deg - b_deg;
        if (q_exp < q_low || r_lead % b_lead != 0)
            throw NotDivisible("div_exact: " + a.to_string() + " is not divisible by " + b.to_string());
        const LaurentPoly step = LaurentPoly::monomial(r_lead / b_lead, q_exp);
        quotient += step;
        rest -= step * b;
    }
    return quotient;
}

}  // namespace arcinv
