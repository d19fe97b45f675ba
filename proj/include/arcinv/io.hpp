#ifndef ARCINV_IO_HPP
#define ARCINV_IO_HPP

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "arcinv/brieskorn.hpp"
#include "arcinv/catalog.hpp"
#include "arcinv/laurent.hpp"
#include "arcinv/recovery.hpp"
#include "arcinv/zeta.hpp"

namespace arcinv {

using json = nlohmann::json;

/// [[exponent, coefficient], ...], decreasing exponent.
json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const RealizedCoefficient& c, int n);

/// { kind, order, coeffs: [ {n, bbar, fplus, fminus} ] }
template <ZetaKind Kind>
json to_json(const RealizedZeta<Kind>& z) {
    json coeffs = json::array();
    for (int n = 1; n <= z.order(); ++n) coeffs.push_back(to_json(z.at(n), n));
    return {{"kind", std::string(to_string(Kind))}, {"order", z.order()}, {"coeffs", std::move(coeffs)}};
}

/// Throws std::invalid_argument when the kind field does not match Kind.
template <ZetaKind Kind>
RealizedZeta<Kind> zeta_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != to_string(Kind)) throw std::invalid_argument("zeta JSON has the wrong kind");
    std::vector<RealizedCoefficient> coeffs;
    int expected = 1;
    for (const auto& c : j.at("coeffs")) {
        if (c.at("n").get<int>() != expected++) throw std::invalid_argument("zeta JSON coefficients out of order");
        coeffs.push_back({laurent_from_json(c.at("bbar")), laurent_from_json(c.at("fplus")),
                          laurent_from_json(c.at("fminus"))});
    }
    return {j.at("order").get<int>(), std::move(coeffs)};
}

/// CSV header "n,bbar,fplus,fminus" followed by one row per n; polynomials
/// in text form, quoted.
template <ZetaKind Kind>
void write_csv(std::ostream& os, const RealizedZeta<Kind>& z) {
    os << "n,bbar,fplus,fminus\n";
    for (int n = 1; n <= z.order(); ++n) {
        const auto& c = z.at(n);
        os << n << ",\"" << c.bbar << "\",\"" << c.fplus << "\",\"" << c.fminus << "\"\n";
    }
}

/// [ { k, sigma_plus, sigma_minus, pi, rho, branch } ]
json to_json(const SignRecovery& r);

json to_json(const EquivalenceVerdict& v);

json to_json(const TableRecord& r);

}  // namespace arcinv

#endif  // ARCINV_IO_HPP
