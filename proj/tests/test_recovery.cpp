#include <doctest.h>

#include "arcinv/catalog.hpp"
#include "arcinv/recovery.hpp"

using namespace arcinv;

namespace {

const LaurentPoly u = LaurentPoly::power(1);

SignRecovery recover_poly(const char* text, int order) {
    const auto f = parse(text);
    const auto e = normalize(f).exponents();
    return recover(e, modified_zeta(f, order));
}

}  // namespace

TEST_CASE("recovery trace on documented examples") {
    auto r = recover_poly("x1^4 - x2^4", 8);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].k == 4);
    CHECK(r.steps[0].pi == u - 1);
    CHECK(r.steps[0].rho == LaurentPoly(-1));
    CHECK(r.steps[0].branch == Branch::negative);
    CHECK(r.steps[0].counts == SignCounts{1, 1});

    r = recover_poly("x1^2 + x2^2", 4);
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].pi == u + 1);
    CHECK(r.steps[0].rho == LaurentPoly(1));
    CHECK(r.steps[0].branch == Branch::positive);
    CHECK(r.steps[0].counts == SignCounts{2, 0});

    CHECK(recover_poly("x1^3 + x2^9", 18).steps.empty());

    r = recover_poly("x1^2 - x2^4 - x3^4 + x4^5", 8);
    REQUIRE(r.steps.size() == 2);
    CHECK(r.steps[0].counts == SignCounts{1, 0});
    CHECK(r.steps[1].counts == SignCounts{0, 2});
}

TEST_CASE("roundtrip_check") {
    CHECK(roundtrip_check(parse("x1^2 + x2^4 + x3^4"), 8));
    CHECK(roundtrip_check(parse("x1^3 - x2^6"), 12));
    CHECK(roundtrip_check(parse("-x1^2 - x2^6 + x3^6 - x4^10"), 20));
}

TEST_CASE("recovery input errors") {
    const auto z = modified_zeta(parse("x1^2 + x2^4"), 8);
    const std::vector<int> unsorted{4, 2};
    const std::vector<int> too_small{1, 4};
    const std::vector<int> ok{2, 4};
    CHECK_THROWS_AS(recover(unsorted, z), std::invalid_argument);
    CHECK_THROWS_AS(recover(too_small, z), std::invalid_argument);
    CHECK_THROWS_AS(recover(ok, modified_zeta(parse("x1^2 + x2^4"), 3)), RecoveryError);
    // Zeta data of a smooth germ cannot come from singular exponents.
    CHECK_THROWS_AS(recover(ok, modified_zeta(parse("x1^1 + x2^6"), 8)), RecoveryError);
}

TEST_CASE("exhaustive roundtrip, three variables") {
    std::size_t n = 0;
    for (int d = 1; d <= 3; ++d)
        for_each_normalized(d, 2, 8, [&](const BrieskornPoly& f) {
            if (!roundtrip_check(f, 16)) FAIL(f.to_string());
            ++n;
        });
    CHECK(n == 14 + 105 + 560);
}
