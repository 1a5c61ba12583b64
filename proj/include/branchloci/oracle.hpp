#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "branchloci/dataset.hpp"

namespace branchloci::oracle {

// Brute-force reference predicates, written independently of the dataset module.
bool is_valid(const DataSet& d);
// Genus from 2 - 2g = n(2 - 2 g0) - sum(n - n/n_i); empty when not a non-negative integer.
std::optional<std::int64_t> genus_of(const DataSet& d);

// Every valid data set with 2 <= n <= max_n, g0 <= max_g0, at most max_pairs cone points and
// genus <= max_genus. Cone-point lists are enumerated as sorted multisets.
std::vector<DataSet> enumerate(int max_n, int max_genus, int max_g0 = 3, int max_pairs = 10);
// Every candidate the enumeration considered, valid or not (for cross-checking validate).
std::vector<DataSet> enumerate_candidates(int max_n, int max_genus, int max_g0 = 3, int max_pairs = 10);

struct CompositionCheck {
    std::size_t compatible_pairs = 0;
    std::size_t failures = 0;
};
// For each compatible (d1, r, d2, s), compose with the library and check the result against the
// reference validity predicate and the genus formula g1 + g2 + n/k - 1.
CompositionCheck check_compositions(const std::vector<DataSet>& sets);

}  // namespace branchloci::oracle
