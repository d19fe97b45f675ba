#include "arcinv/fibers.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcinv {

namespace {

void check_target(int target) {
    if (target < -1 || target > 1) throw std::invalid_argument("fiber target must be -1, 0 or 1");
}

LaurentPoly u_pow(int e) { return LaurentPoly::power(e); }

// Fiber of the empty sum: {0 = 0} is a point, {0 = +-1} is empty.
LaurentPoly empty_sum_beta(int target) { return target == 0 ? LaurentPoly(1) : LaurentPoly(); }

std::int64_t sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

FiberQuery::FiberQuery(std::vector<Term> t, int c) : terms(std::move(t)), target(c) {
    check_target(target);
    for (const auto& term : terms)
        if (term.exponent < 1) throw std::invalid_argument("fiber exponents must be >= 1");
}

FiberQuery negated(const FiberQuery& q) {
    FiberQuery out = q;
    for (auto& t : out.terms) t.sign = flip(t.sign);
    out.target = -q.target;
    return out;
}

TwoPowerForm::TwoPowerForm(std::vector<TwoPowerGroup> groups) : groups_(std::move(groups)) {
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        const auto& g = groups_[i];
        if (g.level < 1) throw std::invalid_argument("two-power levels must be >= 1");
        if (g.plus < 0 || g.minus < 0 || g.plus + g.minus == 0)
            throw std::invalid_argument("two-power groups must be nonempty with nonnegative counts");
        if (i > 0 && groups_[i - 1].level >= g.level)
            throw std::invalid_argument("two-power levels must be strictly increasing");
    }
}

int TwoPowerForm::sigma_plus() const {
    int s = 0;
    for (const auto& g : groups_) s += g.plus;
    return s;
}

int TwoPowerForm::sigma_minus() const {
    int s = 0;
    for (const auto& g : groups_) s += g.minus;
    return s;
}

std::optional<std::size_t> TwoPowerForm::first_unbalanced() const {
    for (std::size_t i = 0; i < groups_.size(); ++i)
        if (groups_[i].plus != groups_[i].minus) return i;
    return std::nullopt;
}

TwoPowerForm TwoPowerForm::negated() const {
    TwoPowerForm out = *this;
    for (auto& g : out.groups_) std::swap(g.plus, g.minus);
    return out;
}

FiberReduction reduce(std::span<const Term> terms) {
    if (terms.empty()) return EmptySum{};
    std::map<int, TwoPowerGroup> by_level;
    for (const auto& t : terms) {
        if (t.exponent % 2 != 0) return OddPresent{static_cast<int>(terms.size())};
        int level = 0;
        for (int k = t.exponent; k % 2 == 0; k /= 2) ++level;
        auto& g = by_level.try_emplace(level, TwoPowerGroup{level, 0, 0}).first->second;
        (t.sign == Sign::plus ? g.plus : g.minus) += 1;
    }
    std::vector<TwoPowerGroup> groups;
    for (const auto& [_, g] : by_level) groups.push_back(g);
    return TwoPowerForm(std::move(groups));
}

LaurentPoly beta_closed(const TwoPowerForm& form, int target) {
    check_target(target);
    if (form.empty()) return empty_sum_beta(target);
    const int s = form.num_variables();
    const int sp = form.sigma_plus();
    const int sm = form.sigma_minus();
    const auto m = form.first_unbalanced();
    const bool plus_dominates = m && form.groups()[*m].plus > form.groups()[*m].minus;
    const bool minus_dominates = m && form.groups()[*m].minus > form.groups()[*m].plus;

    LaurentPoly beta = u_pow(s - 1);
    switch (target) {
        case 0:
            if (plus_dominates)
                beta += u_pow(sm) - u_pow(sp - 1);
            else
                beta += u_pow(sp) - u_pow(sm - 1);
            break;
        case 1:
            beta += plus_dominates ? u_pow(sm) : -u_pow(sm - 1);
            break;
        default:
            beta += minus_dominates ? u_pow(sp) : -u_pow(sp - 1);
            break;
    }
    return beta;
}

LaurentPoly beta_closed(const FiberQuery& q) {
    check_target(q.target);
    return std::visit(
        [&](const auto& r) -> LaurentPoly {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, EmptySum>)
                return empty_sum_beta(q.target);
            else if constexpr (std::is_same_v<R, OddPresent>)
                return u_pow(r.variables - 1);
            else
                return beta_closed(r, q.target);
        },
        reduce(q));
}

LaurentPoly RecursiveFiberEngine::beta(const TwoPowerForm& form, int target) {
    check_target(target);
    if (form.empty()) return empty_sum_beta(target);
    const auto key = std::make_pair(form, target);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly result = target == 0 ? zero_fiber(form) : unit_fiber(form, target);
    memo_.emplace(key, result);
    return result;
}

LaurentPoly RecursiveFiberEngine::zero_fiber(const TwoPowerForm& form) {
    std::vector<TwoPowerGroup> groups = form.groups();
    const TwoPowerGroup top = groups.back();
    const int n = form.num_variables();
    const LaurentPoly u = u_pow(1);

    if (top.plus > 0 && top.minus > 0) {
        // {x1^k - x2^k + g = 0}: beta = u * beta(g = 0) + (u - 1) u^(vars of g).
        groups.back().plus -= 1;
        groups.back().minus -= 1;
        if (groups.back().plus == 0 && groups.back().minus == 0) groups.pop_back();
        const TwoPowerForm smaller(std::move(groups));
        return u * beta(smaller, 0) + (u - 1) * u_pow(n - 2);
    }

    // Top level has a single sign eps with r variables; every other level is lower.
    const int r = top.plus + top.minus;
    const int eps = top.plus > 0 ? 1 : -1;
    groups.pop_back();
    const TwoPowerForm rest(std::move(groups));
    return (u_pow(r) - 1) * beta(rest, -eps) + beta(rest, 0);
}

LaurentPoly RecursiveFiberEngine::unit_fiber(const TwoPowerForm& form, int target) {
    // (u - 1) beta(f = -1) = beta(f + w^(2^N) = 0) - beta(f = 0)
    // (u - 1) beta(f = +1) = beta(f - w^(2^N) = 0) - beta(f = 0)
    // with N the top level of f.
    std::vector<TwoPowerGroup> groups = form.groups();
    if (target == -1)
        groups.back().plus += 1;
    else
        groups.back().minus += 1;
    const TwoPowerForm augmented(std::move(groups));
    const LaurentPoly difference = beta(augmented, 0) - beta(form, 0);
    try {
        return div_exact(difference, u_pow(1) - 1);
    } catch (const NotDivisible&) {
        throw std::logic_error("recursive fiber engine: inexact division by (u - 1)");
    }
}

int fiber_dimension(const FiberQuery& q) {
    const int n = static_cast<int>(q.num_variables());
    if (n == 0) return q.target == 0 ? 0 : -1;
    const bool all_even = std::ranges::all_of(q.terms, [](const Term& t) { return t.exponent % 2 == 0; });
    if (!all_even) return n - 1;
    const int s = to_int(q.terms.front().sign);
    const bool definite = std::ranges::all_of(q.terms, [&](const Term& t) { return to_int(t.sign) == s; });
    if (!definite) return n - 1;
    if (q.target == 0) return 0;
    return q.target == s ? n - 1 : -1;
}

LaurentPoly beta_recursive(const FiberQuery& q) {
    thread_local RecursiveFiberEngine engine;
    check_target(q.target);
    return std::visit(
        [&](const auto& r) -> LaurentPoly {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, EmptySum>)
                return empty_sum_beta(q.target);
            else if constexpr (std::is_same_v<R, OddPresent>)
                // Solve for an odd-power variable: a graph over R^(n-1).
                return u_pow(r.variables - 1);
            else
                return engine.beta(r, q.target);
        },
        reduce(q));
}

std::int64_t euler_fiber(const TwoPowerForm& form, int target) {
    check_target(target);
    if (form.empty()) throw std::invalid_argument("euler_fiber: empty sum is not a two-power form");
    const int s = form.num_variables();
    const int sp = form.sigma_plus();
    const int sm = form.sigma_minus();
    switch (target) {
        case 0: return sign_pow(s - 1) + sign_pow(sp) + sign_pow(sm);
        case 1: return sign_pow(s - 1) + sign_pow(sm);
        default: return sign_pow(s - 1) + sign_pow(sp);
    }
}

std::int64_t euler_fiber(const FiberQuery& q) {
    const auto r = reduce(q);
    const auto* form = std::get_if<TwoPowerForm>(&r);
    if (form == nullptr)
        throw std::invalid_argument("euler_fiber: query has an odd exponent or no terms; use the beta engines");
    return euler_fiber(*form, q.target);
}

}  // namespace arcinv
