#pragma once

#include <cstdint>

#include "insdel/bounds.hpp"

namespace insdel {

/// Point permutation for RM(*, m) placing the 2^{m-1} points with x_var = 0
/// first (counter order) and the points with x_var = 1 last. Returned as a
/// 0-based pull-back: position i of the reordered code carries point
/// perm[i]. For var = 1 this is the identity under the default point order.
std::vector<int> rm_hyperplane_ordering(int m, int var = 1);

/// Point permutation for RM(u, m), 1 <= u <= m, placing the 2^{m-u} points
/// of the block x_1 = ... = x_u = 1 as the final consecutive positions (all
/// other points first, counter order). The block sits at the end so its
/// complement forms the zero region the witness construction needs. Under
/// the default counter point order this is the identity. (The matching
/// bound additionally needs u < m/2; the ordering itself does not.)
std::vector<int> rm_t31_ordering(int u, int m);

enum class SearchObjective { exact_insdel, t21, c21 };
enum class SearchMode { exhaustive, local_search };

struct OrderingSearchResult {
    std::vector<int> best_permutation;  // 0-based pull-back column order
    SearchObjective objective = SearchObjective::exact_insdel;
    SearchMode mode = SearchMode::exhaustive;
    long best_value = 0;
    long evaluations = 0;
    std::vector<std::pair<std::uint64_t, long>> trace;  // (perm hash, value) improvements
};

struct SearchOptions {
    SearchObjective objective = SearchObjective::exact_insdel;
    SearchMode mode = SearchMode::exhaustive;
    bool maximize = false;  // search for the worst ordering instead
    long budget = 1000000;  // objective evaluations
    std::uint64_t seed = 0; // local search only
    long max_codewords = kDefaultMaxCodewords;
};

/// Minimize the objective over coordinate orderings. Exhaustive mode (n <= 8)
/// scans all n! column orders, skipping one of each mirror pair since
/// reversing the coordinate order preserves all three objectives, and stops
/// early at the metric floor 2. Local search runs steepest descent over
/// adjacent transpositions with seeded random restarts (budget/1000 of
/// them); identical seeds give identical results. The reported best value is
/// re-evaluated on the returned permutation before returning.
OrderingSearchResult search_ordering(const LinearCode& c, const SearchOptions& opts);

std::uint64_t permutation_hash(const std::vector<int>& perm);

const char* to_string(SearchObjective o);
const char* to_string(SearchMode m);
SearchObjective objective_from_string(const std::string& s);
SearchMode mode_from_string(const std::string& s);

}  // namespace insdel
