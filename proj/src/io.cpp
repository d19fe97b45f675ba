#include "arcinv/io.hpp"

namespace arcinv {

json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.to_pairs()) out.push_back({e, c});
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array of [exponent, coefficient] pairs");
    std::vector<std::pair<Exponent, Coefficient>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("Laurent JSON term must be [exponent, coefficient]");
        terms.emplace_back(t[0].get<Exponent>(), t[1].get<Coefficient>());
    }
    return LaurentPoly::from_terms(terms);
}

json to_json(const RealizedCoefficient& c, int n) {
    return {{"n", n}, {"bbar", to_json(c.bbar)}, {"fplus", to_json(c.fplus)}, {"fminus", to_json(c.fminus)}};
}

json to_json(const SignRecovery& r) {
    json out = json::array();
    for (const auto& s : r.steps)
        out.push_back({{"k", s.k},
                       {"sigma_plus", s.counts.plus},
                       {"sigma_minus", s.counts.minus},
                       {"pi", to_json(s.pi)},
                       {"rho", to_json(s.rho)},
                       {"branch", std::string(to_string(s.branch))}});
    return out;
}

json to_json(const EquivalenceVerdict& v) {
    json out{{"equivalent", v.equivalent}, {"reason", std::string(to_string(v.reason))}};
    out["detail"] = v.detail ? json(*v.detail) : json(nullptr);
    return out;
}

json to_json(const TableRecord& r) {
    json counts = json::array();
    for (std::size_t i = 0; i < r.relevant.size(); ++i)
        counts.push_back({{"k", r.relevant[i]}, {"sigma_plus", r.counts[i].plus}, {"sigma_minus", r.counts[i].minus}});
    return {{"polynomial", r.polynomial.to_string()},
            {"representative", r.representative.to_string()},
            {"class", r.class_index},
            {"K", r.relevant},
            {"sign_counts", std::move(counts)}};
}

}  // namespace arcinv
