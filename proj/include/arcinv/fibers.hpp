#ifndef ARCINV_FIBERS_HPP
#define ARCINV_FIBERS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "arcinv/brieskorn.hpp"
#include "arcinv/laurent.hpp"

namespace arcinv {

/// The real set { x : sum_i sign_i * x_i^exponent_i = target } with target in {-1, 0, 1}.
/// An empty term list is the zero polynomial on R^0.
struct FiberQuery {
    std::vector<Term> terms;
    int target = 0;

    FiberQuery() = default;
    /// Throws std::invalid_argument for a target outside {-1, 0, 1} or an exponent < 1.
    FiberQuery(std::vector<Term> terms, int target);

    std::size_t num_variables() const { return terms.size(); }
};

/// Same set with every sign and the target negated.
FiberQuery negated(const FiberQuery& q);

/// A_r terms +x^(2^level) and B_r terms -y^(2^level) at one exponent level.
struct TwoPowerGroup {
    int level;
    int plus;
    int minus;

    friend bool operator==(const TwoPowerGroup&, const TwoPowerGroup&) = default;
    friend auto operator<=>(const TwoPowerGroup&, const TwoPowerGroup&) = default;
};

/// Sum of signed 2-power powers grouped by strictly increasing level, every
/// group nonempty.
class TwoPowerForm {
public:
    TwoPowerForm() = default;
    /// Validates level order and nonempty groups; throws std::invalid_argument.
    explicit TwoPowerForm(std::vector<TwoPowerGroup> groups);

    const std::vector<TwoPowerGroup>& groups() const { return groups_; }
    bool empty() const { return groups_.empty(); }
    int num_variables() const { return sigma_plus() + sigma_minus(); }
    int sigma_plus() const;
    int sigma_minus() const;
    /// Index of the first group with plus != minus; nullopt stands for "infinity".
    std::optional<std::size_t> first_unbalanced() const;

    /// Every sign flipped.
    TwoPowerForm negated() const;

    friend bool operator==(const TwoPowerForm&, const TwoPowerForm&) = default;
    friend auto operator<=>(const TwoPowerForm&, const TwoPowerForm&) = default;

private:
    std::vector<TwoPowerGroup> groups_;
};

struct EmptySum {
    friend bool operator==(const EmptySum&, const EmptySum&) = default;
};

/// Some exponent is odd; the fiber is a graph over the other variables.
struct OddPresent {
    int variables;
    friend bool operator==(const OddPresent&, const OddPresent&) = default;
};

using FiberReduction = std::variant<EmptySum, OddPresent, TwoPowerForm>;

/// Replace each even exponent 2^N * l (l odd) by 2^N and group by N.
FiberReduction reduce(std::span<const Term> terms);
inline FiberReduction reduce(const FiberQuery& q) { return reduce(q.terms); }

/// Virtual Poincare polynomial of the fiber from the closed formulas for
/// sums of 2-power powers.
LaurentPoly beta_closed(const FiberQuery& q);
LaurentPoly beta_closed(const TwoPowerForm& form, int target);

/// Same value computed by peeling the top exponent level: pairs x^k - y^k
/// are cancelled one at a time, a one-signed top level is fibred over the
/// remaining variables, and the +-1 fibers are obtained from 0-fibers with
/// one extra top-level variable followed by exact division by (u - 1).
///
/// Results are memoized per engine; an engine is not thread-safe, use one
/// per worker.
class RecursiveFiberEngine {
public:
    LaurentPoly beta(const TwoPowerForm& form, int target);
    std::size_t memo_size() const { return memo_.size(); }

private:
    LaurentPoly zero_fiber(const TwoPowerForm& form);
    LaurentPoly unit_fiber(const TwoPowerForm& form, int target);

    std::map<std::pair<TwoPowerForm, int>, LaurentPoly> memo_;
};

/// Uses a thread-local RecursiveFiberEngine.
LaurentPoly beta_recursive(const FiberQuery& q);

/// Dimension of the fiber, -1 when it is empty: n - 1 in general, 0 for the
/// origin alone (all exponents even, one sign, target 0). Computed from the
/// signs, independently of beta.
int fiber_dimension(const FiberQuery& q);

/// Compactly supported Euler characteristic of a 2-power-form fiber from its
/// sign counts. Throws std::invalid_argument when q does not reduce to a
/// TwoPowerForm.
std::int64_t euler_fiber(const FiberQuery& q);
std::int64_t euler_fiber(const TwoPowerForm& form, int target);

}  // namespace arcinv

#endif  // ARCINV_FIBERS_HPP
