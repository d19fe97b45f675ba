#ifndef ARCINV_LAURENT_HPP
#define ARCINV_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcinv {

/// Thrown when an exact operation would leave the range of the fixed-width
/// coefficient or exponent types. Values are never wrapped.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Thrown by div_exact when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using Coefficient = std::int64_t;
using Exponent = int;

/// Exact rational value, always reduced with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_integer() const { return den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

struct LeadingTerm {
    Exponent degree;
    Coefficient coefficient;
    friend bool operator==(const LeadingTerm&, const LeadingTerm&) = default;
};

/// Integer Laurent polynomial in one variable u.
///
/// Canonical form: no stored coefficient is zero, so structural equality is
/// polynomial equality and zero is the empty map. Coefficients are checked
/// 64-bit integers. Everything this library produces is bounded in absolute
/// value by 2^d for d <= 32 variables, far below the checked range.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Coefficient>;

    LaurentPoly() = default;
    LaurentPoly(Coefficient constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(std::initializer_list<std::pair<const Exponent, Coefficient>> terms);

    static LaurentPoly monomial(Coefficient coefficient, Exponent exponent);
    /// u^exponent
    static LaurentPoly power(Exponent exponent) { return monomial(1, exponent); }
    static LaurentPoly from_terms(const std::vector<std::pair<Exponent, Coefficient>>& terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coefficient coefficient(Exponent e) const;

    /// Highest exponent and its coefficient, or nullopt for the zero polynomial.
    std::optional<LeadingTerm> leading() const;
    /// Lowest stored exponent, or nullopt for zero.
    std::optional<Exponent> low_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    /// Arbitrary but total order, for use as a map key.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /// "u^2 - 2*u + u^-1"; terms by decreasing exponent, "0" for zero.
    std::string to_string() const;
    /// [[exponent, coefficient], ...] by decreasing exponent.
    std::vector<std::pair<Exponent, Coefficient>> to_pairs() const;

private:
    void add_term(Exponent e, Coefficient c);

    Terms terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

/// Multiply by u^m.
LaurentPoly shift(const LaurentPoly& a, Exponent m);

std::optional<LeadingTerm> degree_and_leading(const LaurentPoly& a);

/// Exact value at u = x. Throws std::invalid_argument for x = 0.
Rational evaluate(const LaurentPoly& a, std::int64_t x);

/// q with a = q * b. Throws NotDivisible if no such Laurent polynomial exists
/// and std::invalid_argument if b is zero.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

namespace checked {
Coefficient add(Coefficient a, Coefficient b);
Coefficient mul(Coefficient a, Coefficient b);
Exponent add_exp(Exponent a, Exponent b);
}  // namespace checked

}  // namespace arcinv

#endif  // ARCINV_LAURENT_HPP
