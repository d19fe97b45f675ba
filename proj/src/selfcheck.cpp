#include "arcinv/selfcheck.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <random>

#include "arcinv/catalog.hpp"
#include "arcinv/parallel.hpp"
#include "arcinv/recovery.hpp"
#include "arcinv/zeta.hpp"

namespace arcinv {

namespace {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++cases_;
        if (ok) return;
        if (failures_++ == 0) {
            std::lock_guard lock(mutex_);
            first_failure_ = describe();
        }
    }

    SuiteResult finish() {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        return {name_, cases_.load(), failures_.load(), first_failure_, std::chrono::duration<double>(elapsed).count()};
    }

private:
    std::string name_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> cases_{0};
    std::atomic<std::uint64_t> failures_{0};
    std::mutex mutex_;
    std::string first_failure_;
};

std::string describe_terms(const std::vector<Term>& terms) {
    if (terms.empty()) return "0";
    return BrieskornPoly(terms).to_string();
}

LaurentPoly u_pow(int e) { return LaurentPoly::power(e); }

SuiteResult laurent_ring_laws() {
    Suite suite("laurent-ring-laws");
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> count(0, 3);
    auto random_poly = [&] {
        LaurentPoly p;
        for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(coeff(rng), expo(rng));
        return p;
    };
    for (int trial = 0; trial < 20000; ++trial) {
        const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
        auto who = [&] { return "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); };
        suite.check((a + b) + c == a + (b + c), who);
        suite.check((a * b) * c == a * (b * c), who);
        suite.check(a + b == b + a && a * b == b * a, who);
        suite.check(a * (b + c) == a * b + a * c, who);
        suite.check((a + neg(a)).is_zero(), who);
        if (!b.is_zero()) suite.check(div_exact(a * b, b) == a, who);
    }
    return suite.finish();
}

// All multisets of (exponent, sign) over the given exponents with up to max_vars terms.
std::vector<std::vector<Term>> fiber_term_sets(const std::vector<int>& exps, int max_vars) {
    std::vector<Term> alphabet;
    for (int e : exps) {
        alphabet.push_back({e, Sign::plus});
        alphabet.push_back({e, Sign::minus});
    }
    std::vector<std::vector<Term>> out{{}};
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (int size = 1; size <= max_vars; ++size) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& idx : frontier)
            for (std::size_t a = idx.empty() ? 0 : idx.back(); a < alphabet.size(); ++a) {
                auto grown = idx;
                grown.push_back(a);
                std::vector<Term> terms;
                for (std::size_t i : grown) terms.push_back(alphabet[i]);
                out.push_back(std::move(terms));
                next.push_back(std::move(grown));
            }
        frontier = std::move(next);
    }
    return out;
}

std::vector<SuiteResult> fiber_suites(const SelfCheckConfig& cfg) {
    Suite engines("fiber-engine-agreement");
    Suite euler("fiber-euler-specialization");
    Suite dimension("fiber-dimension-law");
    Suite duality("fiber-sign-duality");
    Suite peeling("fiber-peeling-identities");
    const auto sets = fiber_term_sets({2, 4, 6, 8, 12, 16}, cfg.fiber_vars);
    parallel_for(sets.size(), cfg.jobs, [&](std::size_t i) {
        const auto& terms = sets[i];
        const auto reduced = reduce(terms);
        const auto* form = std::get_if<TwoPowerForm>(&reduced);
        for (int c : {-1, 0, 1}) {
            const FiberQuery q(terms, c);
            auto who = [&] { return "{" + describe_terms(terms) + " = " + std::to_string(c) + "}"; };
            const LaurentPoly closed = beta_closed(q);
            engines.check(closed == beta_recursive(q), who);
            duality.check(closed == beta_closed(negated(q)), who);
            if (form != nullptr) euler.check(evaluate(closed, -1) == Rational{euler_fiber(q), 1}, who);
            if (c == 0) dimension.check(!closed.is_zero(), who);
            if (!closed.is_zero() && !terms.empty()) {
                const auto lead = *closed.leading();
                dimension.check(lead.degree == fiber_dimension(q) && lead.coefficient > 0, who);
            }
        }
        if (form != nullptr)
            peeling.check(fiber_peeling_violations(*form).empty(), [&] { return "{" + describe_terms(terms) + "}"; });
    });
    return {engines.finish(), euler.finish(), dimension.finish(), duality.finish(), peeling.finish()};
}

std::vector<SuiteResult> monomial_suites() {
    Suite consistency("monomial-consistency");
    for (int k = 2; k <= 8; ++k)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const int order = 3 * k;
            consistency.check(monomial_modified_zeta(s, k, order) == modified_zeta(BrieskornPoly({{k, s}}), order),
                              [&] { return "k=" + std::to_string(k) + " sign=" + std::to_string(to_int(s)); });
        }
    Suite oracle("arc-space-monomial-oracle");
    for (int k = 2; k <= 6; ++k)
        for (Sign s : {Sign::plus, Sign::minus}) {
            const PlainZeta plain = plain_from_modified(monomial_modified_zeta(s, k, 40));
            for (int n = 1; n <= 40; ++n)
                oracle.check(plain.at(n) == arc_space_monomial_oracle(s, k, n), [&] {
                    return "k=" + std::to_string(k) + " sign=" + std::to_string(to_int(s)) + " n=" + std::to_string(n);
                });
        }
    return {consistency.finish(), oracle.finish()};
}

bool in_range(const LaurentPoly& p, int low, int high) {
    return p.is_zero() || (*p.low_degree() >= low && p.leading()->degree <= high);
}

// With E = sum floor(n / k_i) and D the number of k_i dividing n, bbar lives
// in degrees [-E, max(D, 1) - E] and the fibers in [-E, max(D - 1, 0) - E].
bool exponents_in_range(const BrieskornPoly& f, int n, const RealizedCoefficient& c) {
    int e = 0;
    int d = 0;
    for (const auto& t : f.terms()) {
        e += n / t.exponent;
        d += n % t.exponent == 0 ? 1 : 0;
    }
    return in_range(c.bbar, -e, std::max(d, 1) - e) && in_range(c.fplus, -e, std::max(d - 1, 0) - e) &&
           in_range(c.fminus, -e, std::max(d - 1, 0) - e);
}

std::vector<SuiteResult> zeta_suites(const SelfCheckConfig& cfg) {
    Suite roundtrip("zeta-conversion-roundtrip");
    Suite range("zeta-exponent-range");
    Suite odd("zeta-odd-sign-blindness");
    Suite complete("zeta-completeness");

    for (int d = 1; d <= cfg.max_d; ++d) {
        // Conversion round-trip includes nonsingular polynomials.
        const auto all = enumerate_normalized(d, 1, cfg.max_exp);
        std::vector<std::optional<ModifiedZeta>> zetas(all.size());
        parallel_for(all.size(), cfg.jobs, [&](std::size_t i) {
            const auto& f = all[i];
            auto who = [&] { return f.to_string(); };
            zetas[i] = modified_zeta(f, cfg.order);
            const ModifiedZeta& z = *zetas[i];
            roundtrip.check(modified_from_plain(plain_from_modified(z)) == z, who);
            const bool all_odd = std::ranges::all_of(f.terms(), [](const Term& t) { return t.exponent % 2 != 0; });
            for (int n = 1; n <= cfg.order; ++n) {
                range.check(exponents_in_range(f, n, z.at(n)), who);
                if (all_odd) odd.check(z.at(n).fplus == z.at(n).fminus, who);
            }
        });

        std::vector<std::size_t> singular;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (is_singular(all[i])) singular.push_back(i);
        parallel_for(singular.size(), cfg.jobs, [&](std::size_t a) {
            const auto& f = all[singular[a]];
            const auto& zf = *zetas[singular[a]];
            for (std::size_t b : singular) {
                const auto& g = all[b];
                complete.check(zeta_equal(zf, *zetas[b]) == classify_pair(f, g).equivalent,
                               [&] { return f.to_string() + " vs " + g.to_string(); });
            }
        });
    }
    return {roundtrip.finish(), range.finish(), odd.finish(), complete.finish()};
}

SuiteResult classification_relation(const SelfCheckConfig& cfg) {
    Suite suite("classify-equivalence-relation");
    const int max_exp = std::min(cfg.max_exp, 6);
    for (int d = 1; d <= std::min(cfg.max_d, 3); ++d) {
        const auto polys = enumerate_normalized(d, 1, max_exp);
        const std::size_t n = polys.size();
        std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
        parallel_for(n, cfg.jobs, [&](std::size_t i) {
            for (std::size_t j = 0; j < n; ++j) rel[i][j] = classify_pair(polys[i], polys[j]).equivalent;
        });
        for (std::size_t i = 0; i < n; ++i) {
            auto who = [&] { return polys[i].to_string(); };
            suite.check(rel[i][i], who);
            for (std::size_t j = 0; j < n; ++j) {
                suite.check(rel[i][j] == rel[j][i], who);
                // Transitive and symmetric: related elements have identical rows.
                if (rel[i][j]) suite.check(rel[i] == rel[j], who);
            }
            // Permuting terms and flipping odd-exponent signs leaves the verdicts alone.
            std::vector<Term> shuffled(polys[i].terms().rbegin(), polys[i].terms().rend());
            for (auto& t : shuffled)
                if (t.exponent % 2 != 0) t.sign = flip(t.sign);
            const BrieskornPoly variant(shuffled);
            for (std::size_t j = 0; j < n; ++j)
                suite.check(classify_pair(variant, polys[j]).equivalent == rel[i][j], who);
        }
    }
    return suite.finish();
}

SuiteResult recovery_suite(const SelfCheckConfig& cfg) {
    Suite suite("sign-recovery-roundtrip");
    for (int d = 1; d <= cfg.recovery_d; ++d) {
        const auto polys = enumerate_normalized(d, 2, cfg.recovery_exp);
        parallel_for(polys.size(), cfg.jobs, [&](std::size_t i) {
            const auto& f = polys[i];
            suite.check(roundtrip_check(f, default_order(f)), [&] { return f.to_string(); });
        });
    }
    return suite.finish();
}

SuiteResult table_suite(const SelfCheckConfig& cfg) {
    Suite suite("table-class-count");
    for (int d = 1; d <= cfg.max_d; ++d) {
        ClassificationTable table;
        for_each_normalized(d, 2, cfg.max_exp, [&](const BrieskornPoly& f) { table.add(f); });
        suite.check(table.class_count(static_cast<std::size_t>(d)) == predicted_class_count(d, cfg.max_exp),
                    [&] { return "d=" + std::to_string(d); });
    }
    return suite.finish();
}

}  // namespace

std::vector<std::string> fiber_peeling_violations(const TwoPowerForm& form) {
    std::vector<std::string> bad;
    if (form.empty()) return bad;
    auto groups = form.groups();
    const int a = groups.back().plus;
    const int b = groups.back().minus;
    groups.pop_back();
    const TwoPowerForm rest(groups);
    const int s = rest.num_variables();
    const LaurentPoly u = u_pow(1);
    const LaurentPoly r0 = beta_closed(rest, 0);
    const LaurentPoly rp = beta_closed(rest, 1);
    const LaurentPoly rm = beta_closed(rest, -1);
    const LaurentPoly base = u_pow(a + b + s - 1);

    const LaurentPoly d0 = beta_closed(form, 0) - base;
    if (b >= a && d0 != (u_pow(b) - u_pow(a)) * rp + u_pow(a) * r0 - u_pow(b + s - 1)) bad.emplace_back("fib0 (B >= A)");
    if (a >= b && d0 != (u_pow(a) - u_pow(b)) * rm + u_pow(b) * r0 - u_pow(a + s - 1)) bad.emplace_back("fib0 (A >= B)");

    const LaurentPoly d1 = beta_closed(form, 1) - base;
    if (b >= a && d1 != u_pow(b - 1) * (u * rp - u_pow(s))) bad.emplace_back("fib1 (B >= A)");
    if (a > b && d1 != u_pow(b) * (r0 - rm)) bad.emplace_back("fib1 (A > B)");

    const LaurentPoly dm = beta_closed(form, -1) - base;
    if (a >= b && dm != u_pow(a - 1) * (u * rm - u_pow(s))) bad.emplace_back("fib-1 (A >= B)");
    if (b > a && dm != u_pow(a) * (r0 - rp)) bad.emplace_back("fib-1 (B > A)");
    return bad;
}

std::vector<SuiteResult> run_selfcheck(const SelfCheckConfig& cfg) {
    if (cfg.max_d < 1 || cfg.max_exp < 2 || cfg.order < 1 || cfg.fiber_vars < 0 || cfg.recovery_d < 1 ||
        cfg.recovery_exp < 2)
        throw std::invalid_argument("selfcheck bounds out of range");
    std::vector<SuiteResult> out;
    out.push_back(laurent_ring_laws());
    for (auto& r : fiber_suites(cfg)) out.push_back(std::move(r));
    for (auto& r : monomial_suites()) out.push_back(std::move(r));
    for (auto& r : zeta_suites(cfg)) out.push_back(std::move(r));
    out.push_back(classification_relation(cfg));
    out.push_back(recovery_suite(cfg));
    out.push_back(table_suite(cfg));
    return out;
}

}  // namespace arcinv
