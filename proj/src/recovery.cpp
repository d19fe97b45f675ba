#include "arcinv/recovery.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace arcinv {

SignRecovery recover(std::span<const int> exponents, const ModifiedZeta& z) {
    if (exponents.empty()) throw std::invalid_argument("recover: no exponents");
    if (!std::ranges::is_sorted(exponents)) throw std::invalid_argument("recover: exponents must be sorted");
    if (exponents.front() < 2) throw std::invalid_argument("recover: exponents must be >= 2");

    const std::vector<int> relevant = relevant_exponents(exponents);
    if (!relevant.empty() && z.order() < relevant.back())
        throw RecoveryError("recover: zeta order " + std::to_string(z.order()) + " is below the largest relevant exponent " +
                            std::to_string(relevant.back()));

    SignRecovery out;
    std::map<int, int> minus_at;  // recovered sigma^- per relevant exponent
    for (int k : relevant) {
        int floor_sum = 0;
        int divisor_count = 0;
        int equal_count = 0;
        for (int ki : exponents) {
            floor_sum += k / ki;
            if (k % ki != 0) continue;
            ++divisor_count;
            if (ki == k) ++equal_count;
            if (!std::ranges::binary_search(relevant, ki))
                throw std::logic_error("recover: divisor " + std::to_string(ki) + " of relevant exponent " +
                                       std::to_string(k) + " is not relevant");
        }

        const auto& a = z.at(k);
        const LaurentPoly u_top = LaurentPoly::power(divisor_count - 1);
        const LaurentPoly pi = shift(LaurentPoly::power(1) * a.fplus - a.bbar, floor_sum - 1) + u_top;
        const LaurentPoly rho = pi - u_top;
        const auto lead = rho.leading();
        if (!lead) throw RecoveryError("recover: rho vanishes at k = " + std::to_string(k) + "; zeta data is corrupted");

        const Branch branch = lead->coefficient > 0 ? Branch::positive : Branch::negative;
        int total_minus = branch == Branch::positive ? lead->degree : lead->degree + 1;
        for (const auto& [kp, count] : minus_at)
            if (k % kp == 0) total_minus -= count;

        if (total_minus < 0 || total_minus > equal_count)
            throw RecoveryError("recover: inconsistent negative count " + std::to_string(total_minus) + " at k = " +
                                std::to_string(k));
        minus_at[k] = total_minus;
        out.steps.push_back({k, {equal_count - total_minus, total_minus}, pi, rho, branch});
    }
    return out;
}

bool roundtrip_check(const BrieskornPoly& f, int order) {
    const BrieskornPoly g = normalize(f);
    const auto exps = g.exponents();
    const SignRecovery rec = recover(exps, modified_zeta(g, order));
    const auto relevant = relevant_exponents(g);
    if (rec.steps.size() != relevant.size()) return false;
    for (std::size_t i = 0; i < relevant.size(); ++i) {
        if (rec.steps[i].k != relevant[i]) return false;
        if (rec.steps[i].counts != sign_counts(g, relevant[i])) return false;
    }
    return true;
}

}  // namespace arcinv
