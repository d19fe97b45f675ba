#include "arcinv/brieskorn.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace arcinv {

bool normalized_less(const Term& a, const Term& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return to_int(a.sign) > to_int(b.sign);
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

BrieskornPoly::BrieskornPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("a Brieskorn polynomial needs at least one term");
    for (const auto& t : terms_)
        if (t.exponent < 1) throw std::invalid_argument("Brieskorn exponents must be >= 1");
}

std::vector<int> BrieskornPoly::exponents() const {
    std::vector<int> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.exponent);
    return out;
}

int BrieskornPoly::max_exponent() const {
    return std::ranges::max(terms_, {}, &Term::exponent).exponent;
}

std::string BrieskornPoly::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const bool negative = terms_[i].sign == Sign::minus;
        if (i == 0)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        os << 'x' << (i + 1) << '^' << terms_[i].exponent;
    }
    return os.str();
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    BrieskornPoly run() {
        std::map<long, Term> by_index;
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (!at_end()) {
            const std::size_t term_start = pos_;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;

            if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
                const std::size_t coeff_pos = pos_;
                const bool nonzero = number_is_nonzero();
                if (!nonzero) throw ParseError("zero coefficient", coeff_pos);
                skip_ws();
                expect('*');
                skip_ws();
            }

            expect('x');
            const std::size_t index_pos = pos_;
            const long index = integer();
            if (index < 1) throw ParseError("variable index must be >= 1", index_pos);
            skip_ws();
            expect('^');
            skip_ws();
            const std::size_t exp_pos = pos_;
            const long exponent = integer();
            if (exponent < 1) throw ParseError("exponent must be >= 1", exp_pos);
            if (exponent > 1'000'000) throw ParseError("exponent out of range", exp_pos);
            skip_ws();

            Term term{static_cast<int>(exponent), sign < 0 ? Sign::minus : Sign::plus};
            if (!by_index.emplace(index, term).second)
                throw ParseError("repeated variable x" + std::to_string(index), term_start);
        }
        std::vector<Term> terms;
        for (const auto& [_, t] : by_index) terms.push_back(t);
        return BrieskornPoly(std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    long integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected an integer", start);
        long value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{}) throw ParseError("integer out of range", start);
        return value;
    }

    // Decimal literal "12", "2.5", ".5"; only whether it is zero matters.
    bool number_is_nonzero() {
        const std::size_t start = pos_;
        bool nonzero = false;
        bool seen_digit = false;
        bool seen_dot = false;
        while (!at_end()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                seen_digit = true;
                nonzero = nonzero || c != '0';
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (!seen_digit) throw ParseError("malformed coefficient", start);
        return nonzero;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BrieskornPoly parse(std::string_view text) { return Parser(text).run(); }

BrieskornPoly normalize(const BrieskornPoly& f) {
    BrieskornPoly out = f;
    std::ranges::stable_sort(out.terms_, normalized_less);
    out.normalized_ = true;
    return out;
}

bool is_singular(const BrieskornPoly& f) {
    return std::ranges::all_of(f.terms(), [](const Term& t) { return t.exponent >= 2; });
}

std::vector<int> relevant_exponents(std::span<const int> exponents) {
    std::set<int> odd;
    for (int k : exponents)
        if (k % 2 != 0) odd.insert(k);
    std::set<int> out;
    for (int k : exponents) {
        if (k % 2 != 0) continue;
        if (std::ranges::none_of(odd, [k](int o) { return k % o == 0; })) out.insert(k);
    }
    return {out.begin(), out.end()};
}

std::vector<int> relevant_exponents(const BrieskornPoly& f) {
    if (!is_singular(f)) throw std::invalid_argument("relevant_exponents: polynomial is nonsingular");
    const auto exps = f.exponents();
    return relevant_exponents(exps);
}

SignCounts sign_counts(const BrieskornPoly& f, int exponent) {
    SignCounts c;
    for (const auto& t : f.terms()) {
        if (t.exponent != exponent) continue;
        (t.sign == Sign::plus ? c.plus : c.minus) += 1;
    }
    return c;
}

std::string_view to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::both_nonsingular: return "both-nonsingular";
        case VerdictReason::singular_vs_nonsingular: return "singular-vs-nonsingular";
        case VerdictReason::exponent_mismatch: return "exponent-mismatch";
        case VerdictReason::sign_mismatch: return "sign-mismatch";
        case VerdictReason::all_conditions_met: return "all-conditions-met";
    }
    return "unknown";
}

std::string EquivalenceVerdict::describe() const {
    std::string s = equivalent ? "equivalent" : "not equivalent";
    s += " (";
    s += to_string(reason);
    if (detail) {
        s += reason == VerdictReason::exponent_mismatch ? " at index " : " at exponent ";
        s += std::to_string(*detail);
    }
    s += ")";
    return s;
}

EquivalenceVerdict classify_pair(const BrieskornPoly& f_in, const BrieskornPoly& g_in) {
    if (f_in.num_variables() != g_in.num_variables())
        throw std::invalid_argument("classify_pair: polynomials have different numbers of variables (" +
                                    std::to_string(f_in.num_variables()) + " vs " +
                                    std::to_string(g_in.num_variables()) + ")");
    const BrieskornPoly f = normalize(f_in);
    const BrieskornPoly g = normalize(g_in);
    const bool f_sing = is_singular(f);
    const bool g_sing = is_singular(g);
    if (!f_sing && !g_sing) return {true, VerdictReason::both_nonsingular, std::nullopt};
    if (f_sing != g_sing) return {false, VerdictReason::singular_vs_nonsingular, std::nullopt};

    for (std::size_t i = 0; i < f.num_variables(); ++i)
        if (f.terms()[i].exponent != g.terms()[i].exponent)
            return {false, VerdictReason::exponent_mismatch, static_cast<int>(i + 1)};

    for (int k : relevant_exponents(f))
        if (sign_counts(f, k) != sign_counts(g, k)) return {false, VerdictReason::sign_mismatch, k};

    return {true, VerdictReason::all_conditions_met, std::nullopt};
}

}  // namespace arcinv
