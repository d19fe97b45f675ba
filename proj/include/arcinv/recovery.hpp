#ifndef ARCINV_RECOVERY_HPP
#define ARCINV_RECOVERY_HPP

#include <span>
#include <string_view>
#include <vector>

#include "arcinv/brieskorn.hpp"
#include "arcinv/laurent.hpp"
#include "arcinv/zeta.hpp"

namespace arcinv {

enum class Branch { positive, negative };

constexpr std::string_view to_string(Branch b) { return b == Branch::positive ? "positive" : "negative"; }

struct RecoveryStep {
    int k;
    SignCounts counts;
    /// beta of the +1 fiber of the sub-sum over exponents dividing k.
    LaurentPoly pi;
    /// pi - u^(D - 1), D the number of exponents dividing k.
    LaurentPoly rho;
    Branch branch;
};

struct SignRecovery {
    std::vector<RecoveryStep> steps;  // ascending k
};

/// Thrown when the zeta data cannot come from a Brieskorn polynomial with the
/// given exponents.
class RecoveryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sign counts at every relevant exponent, read off the modified zeta
/// function. exponents must be sorted ascending and all >= 2.
///
/// For each relevant k, ascending: pi is rebuilt from a_k, rho = pi - u^(D-1)
/// is a nonzero monomial, and the total number of negative signs over
/// relevant exponents dividing k equals deg(rho) when its leading
/// coefficient is positive and deg(rho) + 1 otherwise. Subtracting what the
/// proper divisors already account for leaves the count at k.
///
/// Throws std::invalid_argument for bad exponents and RecoveryError when z
/// is too short or inconsistent.
SignRecovery recover(std::span<const int> exponents, const ModifiedZeta& z);

/// recover(exponents(f), modified_zeta(f, order)) reproduces sign_counts(f, k)
/// for every relevant k.
bool roundtrip_check(const BrieskornPoly& f, int order);

}  // namespace arcinv

#endif  // ARCINV_RECOVERY_HPP
