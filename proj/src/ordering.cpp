#include "insdel/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace insdel {

std::vector<int> rm_hyperplane_ordering(int m, int var) {
    if (m < 1) throw input_error("need m >= 1");
    if (var < 1 || var > m) throw input_error("splitting variable out of range");
    const int n = 1 << m;
    std::vector<int> perm;
    perm.reserve(n);
    for (int bit = 0; bit <= 1; ++bit)
        for (int p = 0; p < n; ++p)
            if (((p >> (m - var)) & 1) == bit) perm.push_back(p);
    return perm;
}

std::vector<int> rm_t31_ordering(int u, int m) {
    if (u < 1 || u > m) throw input_error("requires 1 <= u <= m");
    const int n = 1 << m;
    const int mask = ((1 << u) - 1) << (m - u);  // x_1 = ... = x_u = 1
    std::vector<int> perm;
    perm.reserve(n);
    for (int p = 0; p < n; ++p)
        if ((p & mask) != mask) perm.push_back(p);
    for (int p = 0; p < n; ++p)
        if ((p & mask) == mask) perm.push_back(p);
    return perm;
}

std::uint64_t permutation_hash(const std::vector<int>& perm) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (int v : perm) {
        h ^= (std::uint64_t)(std::uint32_t)v;
        h *= 1099511628211ULL;
    }
    return h;
}

const char* to_string(SearchObjective o) {
    switch (o) {
        case SearchObjective::exact_insdel: return "exact_insdel";
        case SearchObjective::t21: return "t21";
        case SearchObjective::c21: return "c21";
    }
    return "?";
}

const char* to_string(SearchMode m) {
    return m == SearchMode::exhaustive ? "exhaustive" : "local_search";
}

SearchObjective objective_from_string(const std::string& s) {
    if (s == "exact" || s == "exact_insdel") return SearchObjective::exact_insdel;
    if (s == "t21") return SearchObjective::t21;
    if (s == "c21") return SearchObjective::c21;
    throw input_error("unknown objective '" + s + "' (expected exact|t21|c21)");
}

SearchMode mode_from_string(const std::string& s) {
    if (s == "exhaustive") return SearchMode::exhaustive;
    if (s == "local" || s == "local_search") return SearchMode::local_search;
    throw input_error("unknown search mode '" + s + "' (expected exhaustive|local)");
}

namespace {

class ObjectiveEval {
public:
    ObjectiveEval(const LinearCode& c, const SearchOptions& opts) : code_(c), opts_(opts) {
        if (opts.objective == SearchObjective::exact_insdel)
            base_words_ = all_codewords(c, opts.max_codewords);
    }

    long operator()(const std::vector<int>& perm) const {
        if (opts_.objective == SearchObjective::exact_insdel) {
            std::vector<Word> permuted(base_words_.size(), Word(code_.n));
            for (size_t w = 0; w < base_words_.size(); ++w)
                for (int j = 0; j < code_.n; ++j) permuted[w][j] = base_words_[w][perm[j]];
            return insdel_exact_over(permuted).distance;
        }
        const LinearCode pc = permute_coordinates(code_, perm);
        BoundOptions bopts;
        bopts.max_codewords = opts_.max_codewords;
        if (opts_.objective == SearchObjective::t21) return t21_bound_search(pc, bopts).value;
        return c21_bound(pc, bopts).value;
    }

private:
    const LinearCode& code_;
    const SearchOptions& opts_;
    std::vector<Word> base_words_;
};

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

OrderingSearchResult search_ordering(const LinearCode& c, const SearchOptions& opts) {
    OrderingSearchResult res;
    res.objective = opts.objective;
    res.mode = opts.mode;
    const ObjectiveEval eval(c, opts);
    const int n = c.n;

    std::vector<int> best_perm;
    long best_value = opts.maximize ? std::numeric_limits<long>::min()
                                    : std::numeric_limits<long>::max();
    auto improves = [&](long value) {
        return opts.maximize ? value > best_value : value < best_value;
    };
    auto consider = [&](const std::vector<int>& perm, long value) {
        if (improves(value) || (value == best_value && perm < best_perm)) {
            best_value = value;
            best_perm = perm;
            res.trace.emplace_back(permutation_hash(perm), value);
        }
    };
    // the metric floor for distinct codewords; no ordering can go lower
    auto at_floor = [&] { return !opts.maximize && best_value <= 2; };

    if (opts.mode == SearchMode::exhaustive) {
        if (n > 8) throw input_error("exhaustive ordering search requires n <= 8");
        if (factorial(n) / 2.0 > (double)opts.budget)
            throw guard_error("exhaustive search needs about n!/2 evaluations; raise --budget");
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // evaluate only one of each mirror pair
            std::vector<int> rev(perm.rbegin(), perm.rend());
            if (rev < perm) continue;
            const long v = eval(perm);
            ++res.evaluations;
            consider(perm, v);
            if (at_floor()) break;
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        std::mt19937_64 rng(opts.seed);
        const long restarts = std::max(1L, opts.budget / 1000);
        for (long rs = 0; rs < restarts && res.evaluations < opts.budget; ++rs) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            long cur = eval(perm);
            ++res.evaluations;
            consider(perm, cur);
            bool improved = true;
            while (improved && res.evaluations < opts.budget) {
                improved = false;
                int best_swap = -1;
                long best_neigh = cur;
                for (int i = 0; i + 1 < n && res.evaluations < opts.budget; ++i) {
                    std::swap(perm[i], perm[i + 1]);
                    const long v = eval(perm);
                    ++res.evaluations;
                    std::swap(perm[i], perm[i + 1]);
                    if (opts.maximize ? v > best_neigh : v < best_neigh) {
                        best_neigh = v;
                        best_swap = i;
                    }
                }
                if (best_swap >= 0) {
                    std::swap(perm[best_swap], perm[best_swap + 1]);
                    cur = best_neigh;
                    consider(perm, cur);
                    improved = true;
                }
            }
            if (at_floor()) break;
        }
    }

    res.best_permutation = best_perm;
    res.best_value = best_value;
    if (eval(best_perm) != best_value)
        throw internal_error("ordering search result failed re-verification");
    return res;
}

}  // namespace insdel
