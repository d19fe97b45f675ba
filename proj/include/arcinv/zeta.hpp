#ifndef ARCINV_ZETA_HPP
#define ARCINV_ZETA_HPP

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "arcinv/brieskorn.hpp"
#include "arcinv/laurent.hpp"

namespace arcinv {

/// One zeta coefficient seen through its three Laurent realizations: the
/// forgetful image (bbar) and the fibers of the angular component over +1
/// and -1.
struct RealizedCoefficient {
    LaurentPoly bbar;
    LaurentPoly fplus;
    LaurentPoly fminus;

    /// Realization of c * 1 for a scalar c: the unit class is R* over R*,
    /// whose forgetful image is u - 1 and whose fibers are points.
    static RealizedCoefficient scalar(const LaurentPoly& c);

    bool is_zero() const { return bbar.is_zero() && fplus.is_zero() && fminus.is_zero(); }

    friend RealizedCoefficient operator+(const RealizedCoefficient& a, const RealizedCoefficient& b);
    friend RealizedCoefficient operator-(const RealizedCoefficient& a, const RealizedCoefficient& b);
    friend bool operator==(const RealizedCoefficient&, const RealizedCoefficient&) = default;
};

enum class ZetaKind { modified, plain };

constexpr std::string_view to_string(ZetaKind k) { return k == ZetaKind::modified ? "modified" : "plain"; }

/// Truncated series sum_{n=1..order} a_n T^n of realized coefficients. The
/// kind is part of the type, so plain and modified series never mix.
template <ZetaKind Kind>
class RealizedZeta {
public:
    static constexpr ZetaKind kind = Kind;

    RealizedZeta(int order, std::vector<RealizedCoefficient> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) throw std::invalid_argument("zeta order must be >= 1");
        if (coeffs_.size() != static_cast<std::size_t>(order_))
            throw std::invalid_argument("zeta coefficient count must equal the order");
    }

    int order() const { return order_; }
    /// Coefficient of T^n, 1 <= n <= order.
    const RealizedCoefficient& at(int n) const { return coeffs_.at(static_cast<std::size_t>(n - 1)); }
    const std::vector<RealizedCoefficient>& coefficients() const { return coeffs_; }

    friend bool operator==(const RealizedZeta&, const RealizedZeta&) = default;

private:
    int order_;
    std::vector<RealizedCoefficient> coeffs_;
};

using ModifiedZeta = RealizedZeta<ZetaKind::modified>;
using PlainZeta = RealizedZeta<ZetaKind::plain>;

/// Twice the largest exponent.
int default_order(const BrieskornPoly& f);

/// n-th coefficient of the realized modified zeta function. With
/// S = {i : k_i | n} and E = sum_i floor(n / k_i):
///   bbar   = (u^|S| - u * beta(f_S = 0)) u^-E
///   fplus  = (beta(f_S = +1) - beta(f_S = 0)) u^-E
///   fminus = (beta(f_S = -1) - beta(f_S = 0)) u^-E
/// where f_S keeps the terms indexed by S. Nonsingular input gives zero.
RealizedCoefficient modified_zeta_coefficient(const BrieskornPoly& f, int n);

ModifiedZeta modified_zeta(const BrieskornPoly& f, int order);

/// Realized modified zeta of sign * x^k from its explicit series. Requires k >= 2.
ModifiedZeta monomial_modified_zeta(Sign sign, int k, int order);

/// Number of real solutions of sign * x^k = target, target = +-1.
int real_root_count(Sign sign, int k, int target);

PlainZeta plain_from_modified(const ModifiedZeta& z);
ModifiedZeta modified_from_plain(const PlainZeta& z);

/// n-th coefficient of the plain zeta of sign * x^k computed from the arc
/// space: arcs of order m with k * m = n form {a_m != 0} x R^(n - m).
RealizedCoefficient arc_space_monomial_oracle(Sign sign, int k, int n);

/// First n where the series differ, or nullopt. Throws std::invalid_argument
/// on an order mismatch.
template <ZetaKind Kind>
std::optional<int> first_difference(const RealizedZeta<Kind>& a, const RealizedZeta<Kind>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("zeta_equal: series have different orders");
    for (int n = 1; n <= a.order(); ++n)
        if (a.at(n) != b.at(n)) return n;
    return std::nullopt;
}

template <ZetaKind Kind>
bool zeta_equal(const RealizedZeta<Kind>& a, const RealizedZeta<Kind>& b) {
    return !first_difference(a, b).has_value();
}

}  // namespace arcinv

#endif  // ARCINV_ZETA_HPP
