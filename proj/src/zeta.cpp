#include "arcinv/zeta.hpp"

#include <algorithm>

#include "arcinv/fibers.hpp"

namespace arcinv {

namespace {

const LaurentPoly& u_minus_one() {
    static const LaurentPoly p = LaurentPoly::power(1) - 1;
    return p;
}

RealizedCoefficient shifted(const RealizedCoefficient& c, int m) {
    return {shift(c.bbar, m), shift(c.fplus, m), shift(c.fminus, m)};
}

int checked_floor_sum(const BrieskornPoly& f, int n) {
    int e = 0;
    for (const auto& t : f.terms()) e = checked::add_exp(e, n / t.exponent);
    return e;
}

}  // namespace

RealizedCoefficient RealizedCoefficient::scalar(const LaurentPoly& c) { return {c * u_minus_one(), c, c}; }

RealizedCoefficient operator+(const RealizedCoefficient& a, const RealizedCoefficient& b) {
    return {a.bbar + b.bbar, a.fplus + b.fplus, a.fminus + b.fminus};
}

RealizedCoefficient operator-(const RealizedCoefficient& a, const RealizedCoefficient& b) {
    return {a.bbar - b.bbar, a.fplus - b.fplus, a.fminus - b.fminus};
}

int default_order(const BrieskornPoly& f) { return 2 * f.max_exponent(); }

RealizedCoefficient modified_zeta_coefficient(const BrieskornPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("zeta coefficient index must be >= 1");
    if (!is_singular(f)) return {};
    std::vector<Term> divisors;
    for (const auto& t : f.terms())
        if (n % t.exponent == 0) divisors.push_back(t);
    const int e = checked_floor_sum(f, n);

    const LaurentPoly c0 = beta_closed(FiberQuery(divisors, 0));
    const LaurentPoly cp = beta_closed(FiberQuery(divisors, 1));
    const LaurentPoly cm = beta_closed(FiberQuery(divisors, -1));
    const RealizedCoefficient unshifted{
        LaurentPoly::power(static_cast<int>(divisors.size())) - LaurentPoly::power(1) * c0,
        cp - c0,
        cm - c0,
    };
    return shifted(unshifted, -e);
}

ModifiedZeta modified_zeta(const BrieskornPoly& f, int order) {
    if (order < 1) throw std::invalid_argument("zeta order must be >= 1");
    std::vector<RealizedCoefficient> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) coeffs.push_back(modified_zeta_coefficient(f, n));
    return {order, std::move(coeffs)};
}

int real_root_count(Sign sign, int k, int target) {
    if (k % 2 != 0) return 1;
    return to_int(sign) == target ? 2 : 0;
}

ModifiedZeta monomial_modified_zeta(Sign sign, int k, int order) {
    if (k < 2) throw std::invalid_argument("monomial_modified_zeta: exponent must be >= 2");
    if (order < 1) throw std::invalid_argument("zeta order must be >= 1");
    std::vector<RealizedCoefficient> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order));
    const LaurentPoly u = LaurentPoly::power(1);
    for (int n = 1; n <= order; ++n) {
        const int q = n / k;
        if (n % k != 0) {
            // -L^(-floor(n/k)) * 1
            coeffs.push_back(shifted({1 - u, -1, -1}, -q));
        } else {
            // [sign x^k] L^(-m) - L^(-m) * 1 with m = n / k; the monomial
            // class has forgetful image R* and r^eps points over eps.
            const RealizedCoefficient c{0, real_root_count(sign, k, 1) - 1, real_root_count(sign, k, -1) - 1};
            coeffs.push_back(shifted(c, -q));
        }
    }
    return {order, std::move(coeffs)};
}

PlainZeta plain_from_modified(const ModifiedZeta& z) {
    // Z_n = Z~_n + c_n * 1,  c_n = u^-n - sum_{m<=n} bbar_m u^(m-n-1)
    std::vector<RealizedCoefficient> out;
    out.reserve(static_cast<std::size_t>(z.order()));
    LaurentPoly weighted;  // sum_{m<=n} bbar_m u^m
    for (int n = 1; n <= z.order(); ++n) {
        const auto& a = z.at(n);
        weighted += shift(a.bbar, n);
        const LaurentPoly c = LaurentPoly::power(-n) - shift(weighted, -n - 1);
        out.push_back(a + RealizedCoefficient::scalar(c));
    }
    return {z.order(), std::move(out)};
}

ModifiedZeta modified_from_plain(const PlainZeta& z) {
    // Z~_n = Z_n - (1 - sum_{m<=n} bbar_m) * 1
    std::vector<RealizedCoefficient> out;
    out.reserve(static_cast<std::size_t>(z.order()));
    LaurentPoly partial;
    for (int n = 1; n <= z.order(); ++n) {
        const auto& a = z.at(n);
        partial += a.bbar;
        out.push_back(a - RealizedCoefficient::scalar(1 - partial));
    }
    return {z.order(), std::move(out)};
}

RealizedCoefficient arc_space_monomial_oracle(Sign sign, int k, int n) {
    if (k < 2) throw std::invalid_argument("arc_space_monomial_oracle: exponent must be >= 2");
    if (n < 1) throw std::invalid_argument("arc_space_monomial_oracle: order must be >= 1");
    if (n % k != 0) return {};
    // gamma = a_m t^m + ... + a_n t^n with a_m != 0, ac = sign * a_m^k.
    const int m = n / k;
    const LaurentPoly free_part = LaurentPoly::power(n - m);  // R^(n - m)
    RealizedCoefficient stratum{
        u_minus_one() * free_part,
        real_root_count(sign, k, 1) * free_part,
        real_root_count(sign, k, -1) * free_part,
    };
    return shifted(stratum, -n);  // normalization by L^(-n d), d = 1
}

}  // namespace arcinv
