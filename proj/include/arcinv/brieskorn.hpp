#ifndef ARCINV_BRIESKORN_HPP
#define ARCINV_BRIESKORN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arcinv {

enum class Sign : int { minus = -1, plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// One signed pure power sign * x^exponent.
struct Term {
    int exponent;
    Sign sign;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Order used by normalization: ascending exponent, positive before negative.
bool normalized_less(const Term& a, const Term& b);

/// Error in the textual polynomial grammar; position is a 0-based byte offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Sum of signed pure powers in distinct variables.
class BrieskornPoly {
public:
    /// Throws std::invalid_argument unless terms is nonempty with all exponents >= 1.
    explicit BrieskornPoly(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_variables() const { return terms_.size(); }
    bool is_normalized() const { return normalized_; }
    std::vector<int> exponents() const;
    int max_exponent() const;

    /// "x1^2 - x2^3", variables numbered by position.
    std::string to_string() const;

    friend bool operator==(const BrieskornPoly& a, const BrieskornPoly& b) { return a.terms_ == b.terms_; }

private:
    friend BrieskornPoly normalize(const BrieskornPoly& f);

    std::vector<Term> terms_;
    bool normalized_ = false;
};

/// Grammar: terms `[+-] [number *] xN ^ exp`, whitespace-insensitive, distinct
/// N >= 1, exp >= 1. Terms are ordered by variable index; coefficients are
/// collapsed to their sign.
BrieskornPoly parse(std::string_view text);

BrieskornPoly normalize(const BrieskornPoly& f);

/// True iff every exponent is at least 2 (no linear term).
bool is_singular(const BrieskornPoly& f);

/// Even exponents not divisible by any odd exponent, ascending and deduplicated.
std::vector<int> relevant_exponents(std::span<const int> exponents);
/// Throws std::invalid_argument for a nonsingular polynomial.
std::vector<int> relevant_exponents(const BrieskornPoly& f);

struct SignCounts {
    int plus = 0;
    int minus = 0;
    friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts sign_counts(const BrieskornPoly& f, int exponent);

enum class VerdictReason {
    both_nonsingular,
    singular_vs_nonsingular,
    exponent_mismatch,
    sign_mismatch,
    all_conditions_met,
};

struct EquivalenceVerdict {
    bool equivalent;
    VerdictReason reason;
    /// 1-based index for exponent_mismatch, the exponent k for sign_mismatch.
    std::optional<int> detail;

    std::string describe() const;
};

std::string_view to_string(VerdictReason r);

/// Arc-analytic equivalence of two Brieskorn polynomials with the same number
/// of variables. Throws std::invalid_argument on a dimension mismatch.
EquivalenceVerdict classify_pair(const BrieskornPoly& f, const BrieskornPoly& g);

}  // namespace arcinv

#endif  // ARCINV_BRIESKORN_HPP
