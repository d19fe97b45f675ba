#ifndef ARCINV_CATALOG_HPP
#define ARCINV_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arcinv/brieskorn.hpp"

namespace arcinv {

/// Every normalized Brieskorn polynomial with exactly `variables` terms and
/// exponents in [min_exp, max_exp], in lexicographic order of the
/// normalized term sequence. Throws std::invalid_argument on bad bounds.
void for_each_normalized(int variables, int min_exp, int max_exp, const std::function<void(const BrieskornPoly&)>& fn);
std::vector<BrieskornPoly> enumerate_normalized(int variables, int min_exp, int max_exp);

/// Number of arc-analytic classes among normalized singular polynomials with
/// `variables` terms and exponents in [2, max_exp], counted from exponent
/// multisets and the sign counts that matter for each. Does not go through
/// classify_pair.
std::uint64_t predicted_class_count(int variables, int max_exp);

struct TableRecord {
    BrieskornPoly polynomial;
    BrieskornPoly representative;
    std::size_t class_index;  // 0-based, per number of variables
    std::vector<int> relevant;
    std::vector<SignCounts> counts;  // one per relevant exponent
};

/// Partitions a stream of normalized singular polynomials into classify_pair
/// classes. Only class representatives are kept in memory.
class ClassificationTable {
public:
    /// Classifies f against the known representatives with the same number of
    /// variables; f becomes a new representative when none matches.
    TableRecord add(const BrieskornPoly& f);

    std::size_t class_count(std::size_t variables) const;
    std::size_t class_count() const;

private:
    std::vector<std::vector<BrieskornPoly>> reps_;  // indexed by variables
};

}  // namespace arcinv

#endif  // ARCINV_CATALOG_HPP
