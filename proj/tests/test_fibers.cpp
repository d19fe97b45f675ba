#include <doctest.h>

#include "arcinv/fibers.hpp"
#include "arcinv/selfcheck.hpp"

using namespace arcinv;

namespace {

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;
const LaurentPoly u = LaurentPoly::power(1);

FiberQuery fq(std::vector<Term> t, int c) { return FiberQuery(std::move(t), c); }

}  // namespace

TEST_CASE("reduce") {
    CHECK(std::holds_alternative<OddPresent>(reduce(fq({{2, P}, {3, M}}, 0))));
    CHECK(std::get<OddPresent>(reduce(fq({{2, P}, {3, M}}, 0))).variables == 2);
    CHECK(std::holds_alternative<EmptySum>(reduce(fq({}, 0))));

    const auto r = std::get<TwoPowerForm>(reduce(fq({{4, P}, {4, M}, {12, P}}, 0)));
    CHECK(r.groups() == std::vector<TwoPowerGroup>{{2, 2, 1}});
    CHECK(r.num_variables() == 3);
    CHECK(r.sigma_plus() == 2);
    CHECK(r.sigma_minus() == 1);
    CHECK(r.first_unbalanced() == 0u);

    CHECK(std::get<TwoPowerForm>(reduce(fq({{2, P}}, 0))).groups() == std::vector<TwoPowerGroup>{{1, 1, 0}});

    const auto balanced = std::get<TwoPowerForm>(reduce(fq({{2, P}, {6, M}, {8, P}, {8, M}}, 0)));
    CHECK(balanced.groups() == std::vector<TwoPowerGroup>{{1, 1, 1}, {3, 1, 1}});
    CHECK_FALSE(balanced.first_unbalanced().has_value());
}

TEST_CASE("two-power form validation") {
    CHECK_THROWS_AS(TwoPowerForm({{2, 1, 0}, {1, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TwoPowerForm({{1, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(TwoPowerForm({{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(fq({{2, P}}, 2), std::invalid_argument);
}

TEST_CASE("beta_closed examples") {
    CHECK(beta_closed(fq({{2, P}, {4, P}}, 0)) == LaurentPoly(1));
    CHECK(beta_closed(fq({{2, P}, {4, P}}, 1)) == u + 1);
    CHECK(beta_closed(fq({{4, P}, {4, M}}, 0)) == 2 * u - 1);
    CHECK(beta_closed(fq({{2, M}, {2, M}}, 1)).is_zero());
    for (int c : {-1, 0, 1}) CHECK(beta_closed(fq({{2, P}, {3, P}}, c)) == u);
    CHECK(beta_closed(fq({}, 0)) == LaurentPoly(1));
    CHECK(beta_closed(fq({}, 1)).is_zero());
    CHECK(beta_closed(fq({}, -1)).is_zero());
}

TEST_CASE("beta_recursive examples") {
    CHECK(beta_recursive(fq({{2, P}, {2, M}}, 0)) == 2 * u - 1);
    CHECK(beta_recursive(fq({{2, P}, {2, M}, {4, P}}, 0)) == u * u);
    CHECK(beta_recursive(fq({{2, P}, {2, M}, {4, P}}, 1)) == u * u + u);
    CHECK(beta_closed(fq({{2, P}, {2, M}, {4, P}}, 1)) == u * u + u);
    CHECK(beta_recursive(fq({{4, P}, {4, M}}, 1)) == u - 1);
}

// Points: a zero-dimensional fiber is a finite set and beta counts it.
TEST_CASE("oracle: one-variable fibers are point counts") {
    for (int k = 1; k <= 12; ++k)
        for (Sign s : {P, M})
            for (int c : {-1, 0, 1}) {
                long roots;
                if (c == 0)
                    roots = 1;
                else if (k % 2 == 1)
                    roots = 1;
                else
                    roots = to_int(s) == c ? 2 : 0;
                CHECK(beta_closed(fq({{k, s}}, c)) == LaurentPoly(roots));
                CHECK(beta_recursive(fq({{k, s}}, c)) == LaurentPoly(roots));
            }
}

// {x_1^2 + ... + x_n^2 = 1} is the compact sphere S^(n-1), whose mod 2 Betti
// numbers give 1 + u^(n-1); the 0-fiber is the origin and the -1 fiber is empty.
TEST_CASE("oracle: positive definite sums of squares") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Term> terms(static_cast<std::size_t>(n), Term{2, P});
        const LaurentPoly sphere = n == 1 ? LaurentPoly(2) : 1 + LaurentPoly::power(n - 1);
        CHECK(beta_closed(fq(terms, 1)) == sphere);
        CHECK(beta_recursive(fq(terms, 1)) == sphere);
        CHECK(beta_closed(fq(terms, 0)) == LaurentPoly(1));
        CHECK(beta_closed(fq(terms, -1)).is_zero());
    }
}

// {x^4 = y^4} is two lines through the origin: 2 * u - 1 by inclusion-exclusion.
TEST_CASE("oracle: crossing lines") {
    CHECK(beta_recursive(fq({{4, P}, {4, M}}, 0)) == u + u - 1);
    CHECK(evaluate(beta_closed(fq({{4, P}, {4, M}}, 0)), -1) == Rational{-3, 1});
}

TEST_CASE("euler_fiber") {
    CHECK(euler_fiber(fq({{4, P}, {4, M}}, 0)) == -3);
    CHECK(euler_fiber(fq({{4, P}, {4, M}}, 1)) == -2);
    CHECK(euler_fiber(fq({{2, P}, {2, P}}, -1)) == 0);
    CHECK_THROWS_AS(euler_fiber(fq({{2, P}, {3, P}}, 0)), std::invalid_argument);
    CHECK_THROWS_AS(euler_fiber(fq({}, 0)), std::invalid_argument);
}

TEST_CASE("sign-flip duality and peeling identities on a small sweep") {
    const std::vector<int> exps{2, 4, 6, 8};
    std::vector<Term> alphabet;
    for (int e : exps) {
        alphabet.push_back({e, P});
        alphabet.push_back({e, M});
    }
    std::size_t n = 0;
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        for (std::size_t b = a; b < alphabet.size(); ++b)
            for (std::size_t c = b; c < alphabet.size(); ++c) {
                const std::vector<Term> terms{alphabet[a], alphabet[b], alphabet[c]};
                for (int t : {-1, 0, 1}) {
                    const FiberQuery q(terms, t);
                    CHECK(beta_closed(q) == beta_closed(negated(q)));
                    CHECK(beta_closed(q) == beta_recursive(q));
                    const auto lead = beta_closed(q).leading();
                    if (lead) {
                        CHECK(lead->degree == fiber_dimension(q));
                        CHECK(lead->coefficient > 0);
                    }
                }
                const auto form = std::get<TwoPowerForm>(reduce(terms));
                CHECK(fiber_peeling_violations(form).empty());
                ++n;
            }
    CHECK(n == 120);
}

TEST_CASE("recursive engine memoizes") {
    RecursiveFiberEngine engine;
    const TwoPowerForm form({{1, 2, 1}, {2, 1, 3}});
    const LaurentPoly first = engine.beta(form, 1);
    const auto size = engine.memo_size();
    CHECK(size > 0);
    CHECK(engine.beta(form, 1) == first);
    CHECK(engine.memo_size() == size);
    CHECK(first == beta_closed(form, 1));
}

TEST_CASE("fiber dimension") {
    CHECK(fiber_dimension(fq({{2, P}, {4, P}}, 0)) == 0);
    CHECK(fiber_dimension(fq({{2, P}, {4, P}}, 1)) == 1);
    CHECK(fiber_dimension(fq({{2, P}, {4, P}}, -1)) == -1);
    CHECK(fiber_dimension(fq({{2, P}, {4, M}}, 0)) == 1);
    CHECK(fiber_dimension(fq({{2, M}, {3, M}}, -1)) == 1);
    CHECK(fiber_dimension(fq({}, 0)) == 0);
    CHECK(fiber_dimension(fq({}, 1)) == -1);
}
