#include "arcinv/catalog.hpp"

#include <map>
#include <stdexcept>

namespace arcinv {

namespace {

void check_bounds(int variables, int min_exp, int max_exp) {
    if (variables < 1) throw std::invalid_argument("number of variables must be >= 1");
    if (min_exp < 1 || max_exp < min_exp) throw std::invalid_argument("exponent bounds must satisfy 1 <= min <= max");
    if (variables > 32) throw std::invalid_argument("at most 32 variables are supported");
}

// Nondecreasing index sequences of length `len` over [0, alphabet).
template <typename Fn>
void for_each_multiset(int len, int alphabet, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
        fn(idx);
        int pos = len - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == alphabet - 1) --pos;
        if (pos < 0) return;
        const int next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < len; ++i) idx[static_cast<std::size_t>(i)] = next;
    }
}

}  // namespace

void for_each_normalized(int variables, int min_exp, int max_exp, const std::function<void(const BrieskornPoly&)>& fn) {
    check_bounds(variables, min_exp, max_exp);
    // Term alphabet in normalized order: (e, +), (e, -), (e + 1, +), ...
    std::vector<Term> alphabet;
    for (int e = min_exp; e <= max_exp; ++e) {
        alphabet.push_back({e, Sign::plus});
        alphabet.push_back({e, Sign::minus});
    }
    std::vector<Term> terms(static_cast<std::size_t>(variables));
    for_each_multiset(variables, static_cast<int>(alphabet.size()), [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) terms[i] = alphabet[static_cast<std::size_t>(idx[i])];
        fn(normalize(BrieskornPoly(terms)));
    });
}

std::vector<BrieskornPoly> enumerate_normalized(int variables, int min_exp, int max_exp) {
    std::vector<BrieskornPoly> out;
    for_each_normalized(variables, min_exp, max_exp, [&](const BrieskornPoly& f) { out.push_back(f); });
    return out;
}

std::uint64_t predicted_class_count(int variables, int max_exp) {
    check_bounds(variables, 2, max_exp);
    std::uint64_t total = 0;
    for_each_multiset(variables, max_exp - 1, [&](const std::vector<int>& idx) {
        std::map<int, int> multiplicity;
        for (int i : idx) ++multiplicity[i + 2];
        std::uint64_t classes = 1;
        for (const auto& [k, mult] : multiplicity) {
            if (k % 2 != 0) continue;
            bool hit_by_odd = false;
            for (const auto& [o, _] : multiplicity) hit_by_odd = hit_by_odd || (o % 2 == 1 && k % o == 0);
            // sigma^+ ranges over 0..mult and fixes sigma^-.
            if (!hit_by_odd) classes *= static_cast<std::uint64_t>(mult + 1);
        }
        total += classes;
    });
    return total;
}

TableRecord ClassificationTable::add(const BrieskornPoly& f_in) {
    const BrieskornPoly f = normalize(f_in);
    if (!is_singular(f)) throw std::invalid_argument("classification table only holds singular polynomials");
    const std::size_t d = f.num_variables();
    if (reps_.size() <= d) reps_.resize(d + 1);
    auto& reps = reps_[d];

    std::size_t cls = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (classify_pair(f, reps[i]).equivalent) {
            cls = i;
            break;
        }
    }
    if (cls == reps.size()) reps.push_back(f);

    TableRecord rec{f, reps[cls], cls, relevant_exponents(f), {}};
    for (int k : rec.relevant) rec.counts.push_back(sign_counts(f, k));
    return rec;
}

std::size_t ClassificationTable::class_count(std::size_t variables) const {
    return variables < reps_.size() ? reps_[variables].size() : 0;
}

std::size_t ClassificationTable::class_count() const {
    std::size_t n = 0;
    for (const auto& r : reps_) n += r.size();
    return n;
}

}  // namespace arcinv
