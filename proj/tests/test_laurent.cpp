#include <doctest.h>

#include <limits>
#include <random>

#include "arcinv/laurent.hpp"

using arcinv::LaurentPoly;

namespace {

const LaurentPoly u = LaurentPoly::power(1);

// All polynomials with at most `max_terms` terms, exponents and nonzero
// coefficients in [-3, 3].
std::vector<LaurentPoly> small_polys(int max_terms) {
    std::vector<LaurentPoly> out{LaurentPoly{}};
    std::vector<std::vector<std::pair<int, int>>> frontier{{}};
    for (int t = 1; t <= max_terms; ++t) {
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& terms : frontier) {
            const int start = terms.empty() ? -3 : terms.back().first + 1;
            for (int e = start; e <= 3; ++e)
                for (int c = -3; c <= 3; ++c) {
                    if (c == 0) continue;
                    auto grown = terms;
                    grown.emplace_back(e, c);
                    LaurentPoly p;
                    for (auto [ge, gc] : grown) p += LaurentPoly::monomial(gc, ge);
                    out.push_back(p);
                    next.push_back(std::move(grown));
                }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("ring operations on the documented examples") {
    CHECK((u - 1) + 1 == u);
    CHECK((u - 1) * (u + 1) == u * u - 1);
    CHECK(LaurentPoly::power(-1) * u == LaurentPoly(1));
    CHECK(((u - 1) + 1).size() == 1);
}

TEST_CASE("shift") {
    CHECK(shift(u - 1, -2) == LaurentPoly::power(-1) - LaurentPoly::power(-2));
    CHECK(shift(LaurentPoly{}, 5).is_zero());
    CHECK(shift(LaurentPoly(1), 1) == u);
    CHECK_THROWS_AS(shift(LaurentPoly::power(std::numeric_limits<int>::max()), 1), arcinv::ArithmeticOverflow);
}

TEST_CASE("degree and leading coefficient") {
    CHECK(degree_and_leading(u - 1) == arcinv::LeadingTerm{1, 1});
    CHECK(degree_and_leading(LaurentPoly(-1)) == arcinv::LeadingTerm{0, -1});
    CHECK(degree_and_leading(2 * u - 1) == arcinv::LeadingTerm{1, 2});
    CHECK_FALSE(degree_and_leading(LaurentPoly{}).has_value());
}

TEST_CASE("evaluate") {
    CHECK(evaluate(2 * u - 1, -1) == arcinv::Rational{-3, 1});
    CHECK(evaluate(u + 1, -1) == arcinv::Rational{0, 1});
    CHECK(evaluate(1 - LaurentPoly::power(-1), -1) == arcinv::Rational{2, 1});
    CHECK(evaluate(LaurentPoly::power(-1), 2) == arcinv::Rational{1, 2});
    CHECK(evaluate(LaurentPoly::power(-3), -2) == arcinv::Rational{-1, 8});
    CHECK_THROWS_AS(evaluate(u, 0), std::invalid_argument);
}

TEST_CASE("exact division") {
    CHECK(div_exact(u * u - 1, u - 1) == u + 1);
    CHECK(div_exact(LaurentPoly{}, u - 1).is_zero());
    CHECK_THROWS_AS(div_exact(u, u - 1), arcinv::NotDivisible);
    CHECK_THROWS_AS(div_exact(u, LaurentPoly{}), std::invalid_argument);
    CHECK(div_exact(LaurentPoly::power(-3) - LaurentPoly::power(-1), LaurentPoly::power(-2) - 1) ==
          LaurentPoly::power(-1));
    CHECK_THROWS_AS(div_exact(2 * u, 3 * u), arcinv::NotDivisible);
}

TEST_CASE("text and pair forms") {
    CHECK((u * u - 2 * u + LaurentPoly::power(-1)).to_string() == "u^2 - 2*u + u^-1");
    CHECK(LaurentPoly{}.to_string() == "0");
    CHECK((-u).to_string() == "-u");
    CHECK((1 - u).to_string() == "-u + 1");
    CHECK((-2 * LaurentPoly::power(-2)).to_string() == "-2*u^-2");
    const auto pairs = (u * u - 2 * u + LaurentPoly::power(-1)).to_pairs();
    CHECK(pairs == std::vector<std::pair<int, std::int64_t>>{{2, 1}, {1, -2}, {-1, 1}});
    CHECK(LaurentPoly::from_terms(pairs) == u * u - 2 * u + LaurentPoly::power(-1));
}

TEST_CASE("overflow is reported, never wrapped") {
    const auto big = LaurentPoly(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + 1, arcinv::ArithmeticOverflow);
    CHECK_THROWS_AS(big * 2, arcinv::ArithmeticOverflow);
    CHECK_THROWS_AS(-LaurentPoly(std::numeric_limits<std::int64_t>::min()), arcinv::ArithmeticOverflow);
    CHECK_NOTHROW(big - 1);
}

TEST_CASE("ring laws: exhaustive pairs over two-term operands") {
    const auto polys = small_polys(2);
    REQUIRE(polys.size() == 1 + 42 + 21 * 36);
    std::size_t checked = 0;
    for (const auto& a : polys)
        for (const auto& b : polys) {
            const LaurentPoly ab = a * b;
            if (!(a + b == b + a && ab == b * a && (a + neg(a)).is_zero())) FAIL((std::string("commutativity/cancel: ") + a.to_string() + " " + b.to_string()));
            if (!b.is_zero() && div_exact(ab, b) != a) FAIL(("div_exact(a*b, b) != a for " + a.to_string() + " " + b.to_string()));
            for (const auto& [e, c] : ab.terms())
                if (c == 0) FAIL("stored zero coefficient");
            ++checked;
        }
    CHECK(checked == polys.size() * polys.size());
}

TEST_CASE("ring laws: random triples over three-term operands") {
    const auto polys = small_polys(3);
    REQUIRE(polys.size() == 1 + 42 + 21 * 36 + 35 * 216);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
    for (int i = 0; i < 100000; ++i) {
        const auto& a = polys[pick(rng)];
        const auto& b = polys[pick(rng)];
        const auto& c = polys[pick(rng)];
        if ((a * b) * c != a * (b * c)) FAIL((std::string("associativity ") + a.to_string() + " " + b.to_string() + " " + c.to_string()));
        if ((a + b) + c != a + (b + c)) FAIL((std::string("additive associativity ") + a.to_string() + " " + b.to_string() + " " + c.to_string()));
        if (a * (b + c) != a * b + a * c) FAIL((std::string("distributivity ") + a.to_string() + " " + b.to_string() + " " + c.to_string()));
        if (!b.is_zero() && div_exact(a * b, b) != a) FAIL((std::string("division ") + a.to_string() + " " + b.to_string()));
    }
}
