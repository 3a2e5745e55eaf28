#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "insdel/ordering.hpp"
#include "insdel/report.hpp"

using namespace insdel;

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::optional<long> bound_value(const AnalysisReport& rep, const std::string& name) {
    for (const BoundResult& b : rep.bounds)
        if (b.name == name) return b.applicable ? std::optional<long>(b.value) : std::nullopt;
    return std::nullopt;
}

}  // namespace

TEST_CASE("hyperplane ordering") {
    CHECK(rm_hyperplane_ordering(1) == identity_perm(2));
    // x_1 is the top bit, so the default counter order is already split
    CHECK(rm_hyperplane_ordering(3) == identity_perm(8));
    // splitting on x_2 interleaves the halves
    CHECK(rm_hyperplane_ordering(3, 2) == std::vector<int>{0, 1, 4, 5, 2, 3, 6, 7});
    CHECK_THROWS_AS(rm_hyperplane_ordering(3, 4), input_error);
}

TEST_CASE("t31 ordering") {
    CHECK(rm_t31_ordering(1, 3) == rm_hyperplane_ordering(3));
    // the four points with x_1 = x_2 = 1 already occupy the last positions
    const auto p24 = rm_t31_ordering(2, 4);
    for (int i = 12; i < 16; ++i) CHECK((p24[i] & 0b1100) == 0b1100);
    CHECK(p24 == identity_perm(16));
    CHECK_THROWS_AS(rm_t31_ordering(0, 4), input_error);
    CHECK_THROWS_AS(rm_t31_ordering(5, 4), input_error);
}

TEST_CASE("t31 ordering feeds c21 to reproduce the formula bound") {
    BoundOptions opts;
    for (const auto& [u, m] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}}) {
        const LinearCode rm = permute_coordinates(reed_muller(u, m), rm_t31_ordering(u, m));
        CHECK(c21_bound(rm, opts).value == t31_rm_bound(u, m).value);
    }
}

TEST_CASE("exhaustive search") {
    const Field f2(2);
    SearchOptions so;
    so.objective = SearchObjective::exact_insdel;
    so.mode = SearchMode::exhaustive;

    const LinearCode rep(f2, Matrix::from_rows(f2, {{1, 1}}), "rep2");
    const OrderingSearchResult r = search_ordering(rep, so);
    CHECK(r.best_value == 4);  // both orderings are equivalent
    CHECK(r.evaluations >= 1);

    // the Hermitian code already sits at the metric floor: search confirms 2
    const OrderingSearchResult h = search_ordering(hermitian_example(1), so);
    CHECK(h.best_value == 2);

    so.budget = 10;
    CHECK_THROWS_AS(search_ordering(hermitian_example(1), so), guard_error);
    so.budget = 1000000;
    const Field f3(3);
    const LinearCode wide(f3, Matrix::from_rows(f3, {Word(9, 1)}), "rep9");
    CHECK_THROWS_AS(search_ordering(wide, so), input_error);  // n > 8
}

TEST_CASE("cyclic codes have insdel distance 2 in cyclic order") {
    const Field f2(2);
    const LinearCode hamming = cyclic_code(f2, 7, {1, 1, 0, 1});
    CHECK(insdel_code_exact(hamming, 64).distance == 2);

    // a local search over orderings can only report a value >= the floor
    SearchOptions so;
    so.mode = SearchMode::local_search;
    so.budget = 4000;
    so.seed = 11;
    const OrderingSearchResult r = search_ordering(hamming, so);
    CHECK(r.best_value >= 2);
    CHECK(r.evaluations <= so.budget);

    // searching for the worst ordering instead: the identity already sits at
    // the floor, so the maximum can only be above it
    SearchOptions mx = so;
    mx.maximize = true;
    const OrderingSearchResult worst = search_ordering(hamming, mx);
    CHECK(worst.best_value >= 2);
    CHECK(worst.best_value >= r.best_value);
}

TEST_CASE("local search is deterministic and monotone") {
    SearchOptions so;
    so.mode = SearchMode::local_search;
    so.objective = SearchObjective::t21;
    so.budget = 3000;
    so.seed = 42;
    const LinearCode h2 = hermitian_example(2);
    const OrderingSearchResult a = search_ordering(h2, so);
    const OrderingSearchResult b = search_ordering(h2, so);
    CHECK(a.best_permutation == b.best_permutation);
    CHECK(a.best_value == b.best_value);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.trace == b.trace);
    // improvements only
    for (size_t i = 1; i < a.trace.size(); ++i) CHECK(a.trace[i].second <= a.trace[i - 1].second);

    // exhaustive on the same objective can only be at least as good
    SearchOptions ex = so;
    ex.mode = SearchMode::exhaustive;
    ex.budget = 1000000;
    CHECK(search_ordering(h2, ex).best_value <= a.best_value);
}

TEST_CASE("apply_and_report") {
    AnalyzeOptions opts;
    opts.with_exact = true;
    opts.with_ghw = true;
    opts.with_bounds = true;
    const LinearCode h1 = hermitian_example(1);

    const AnalysisReport base = analyze_code(h1, opts);
    CHECK(apply_and_report(h1, identity_perm(8), opts) == base);

    // ordering 1 -> ordering 2: c22 loses applicability, the exact distance
    // moves from 2 to 4, ordering-free bounds stay put
    const AnalysisReport moved = apply_and_report(h1, {0, 1, 2, 5, 3, 6, 4, 7}, opts);
    CHECK(moved.exact->distance == 4);
    CHECK(base.exact->distance == 2);
    CHECK_FALSE(bound_value(moved, "c22").has_value());
    CHECK(bound_value(base, "c22") == 6);
    CHECK(bound_value(moved, "half_singleton") == bound_value(base, "half_singleton"));
    CHECK(bound_value(moved, "c23") == bound_value(base, "c23"));
    CHECK(bound_value(moved, "c24_exact") == bound_value(base, "c24_exact"));
    CHECK(bound_value(moved, "p41") == bound_value(base, "p41"));
    CHECK(moved.notes.size() == 2);
}

TEST_CASE("ordering-free bounds are permutation invariant") {
    std::mt19937_64 rng(8);
    AnalyzeOptions opts;
    opts.with_bounds = true;
    opts.with_exact = true;
    const char* free_names[] = {"c23",        "half_singleton", "c24_exact", "c24_plotkin",
                                "direct_2dH", "singleton_2nk1", "cz21_2nk",  "p41"};
    for (int trial = 0; trial < 8; ++trial) {
        const Field f = trial % 2 ? Field(3) : Field(2, 2);
        std::uniform_int_distribution<int> el(0, f.q() - 1), nd(3, 7);
        const int n = nd(rng);
        std::uniform_int_distribution<int> kd(1, std::min(3, n));
        const int k = kd(rng);
        Matrix G(f, k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) G.set(i, j, el(rng));
        if (G.rank() != k) continue;
        const LinearCode c(f, G, "random");
        const AnalysisReport base = analyze_code(c, opts);

        std::vector<int> perm = identity_perm(n);
        std::shuffle(perm.begin(), perm.end(), rng);
        const AnalysisReport permuted = apply_and_report(c, perm, opts);
        for (const char* name : free_names)
            CHECK(bound_value(base, name) == bound_value(permuted, name));
        CHECK(base.d_hamming == permuted.d_hamming);

        // the exact distance is reversal invariant
        std::vector<int> rev(n);
        for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
        const AnalysisReport reversed = apply_and_report(c, rev, opts);
        CHECK(reversed.exact->distance == base.exact->distance);
    }
}

TEST_CASE("search results round through permutation serialization") {
    const auto perm = rm_hyperplane_ordering(3, 2);
    CHECK(permutation_hash(perm) != permutation_hash(identity_perm(8)));
    CHECK(objective_from_string("exact") == SearchObjective::exact_insdel);
    CHECK(mode_from_string("local") == SearchMode::local_search);
    CHECK_THROWS_AS(objective_from_string("nope"), input_error);
}
