#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "insdel/metrics.hpp"

using namespace insdel;

namespace {

// Independent LCS oracle: plain memoized recursion, no shared code with the
// two-row dynamic program under test.
int lcs_recursive(const Word& a, const Word& b, size_t i, size_t j,
                  std::map<std::pair<size_t, size_t>, int>& memo) {
    if (i == a.size() || j == b.size()) return 0;
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best;
    if (a[i] == b[j]) {
        best = 1 + lcs_recursive(a, b, i + 1, j + 1, memo);
    } else {
        best = std::max(lcs_recursive(a, b, i + 1, j, memo), lcs_recursive(a, b, i, j + 1, memo));
    }
    memo[key] = best;
    return best;
}

int lcs_oracle(const Word& a, const Word& b) {
    std::map<std::pair<size_t, size_t>, int> memo;
    return lcs_recursive(a, b, 0, 0, memo);
}

Word random_word(int n, int q, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, q - 1);
    Word w(n);
    for (int& v : w) v = d(rng);
    return w;
}

}  // namespace

TEST_CASE("weights and supports") {
    CHECK(hamming_weight(Word(8, 0)) == 0);
    const Word w5{3, 2, 1, 1, 1, 0, 0, 0};  // (w^2, w, 1, 1, 1, 0, 0, 0)
    CHECK(hamming_weight(w5) == 5);
    CHECK(support(w5) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(hamming_distance(w5, w5) == 0);
    CHECK(hamming_distance({1, 0, 2}, {1, 1, 0}) == 2);
    CHECK_THROWS_AS(hamming_distance({1, 0}, {1}), input_error);
}

TEST_CASE("lcs pinned values") {
    const Word x{0, 0, 1, 2, 3, 1, 2, 3};
    CHECK(lcs_length(x, x) == 8);
    // the two codeword pairs of the Hermitian example
    CHECK(lcs_length({0, 0, 1, 2, 3, 1, 2, 3}, {0, 0, 2, 3, 1, 2, 3, 1}) == 7);
    CHECK(lcs_length({0, 0, 1, 1, 2, 2, 3, 3}, {0, 0, 2, 2, 3, 3, 1, 1}) == 6);
    CHECK(lcs_length({}, {1, 2}) == 0);
    CHECK(lcs_length({1, 2, 3}, {4, 5}) == 0);

    const Word wit = lcs_witness({0, 0, 1, 2, 3, 1, 2, 3}, {0, 0, 2, 3, 1, 2, 3, 1});
    CHECK((int)wit.size() == 7);
}

TEST_CASE("lcs agrees with an independent oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(0, 9), qd(2, 4);
        const int q = qd(rng);
        const Word a = random_word(nd(rng), q, rng), b = random_word(nd(rng), q, rng);
        CHECK(lcs_length(a, b) == lcs_oracle(a, b));
        CHECK(lcs_length(a, b) == lcs_length(b, a));
        const Word wit = lcs_witness(a, b);
        CHECK((int)wit.size() == lcs_length(a, b));
    }
}

TEST_CASE("pair insdel distance") {
    const Word x1{0, 0, 1, 2, 3, 1, 2, 3}, x2{0, 0, 2, 3, 1, 2, 3, 1};
    CHECK(insdel_pair(x1, x1).distance == 0);
    CHECK(insdel_pair(x1, x2).distance == 2);
    CHECK(insdel_pair({0, 0, 1, 1, 2, 2, 3, 3}, {0, 0, 2, 2, 3, 3, 1, 1}).distance == 4);
    CHECK_THROWS_AS(insdel_pair({1}, {1, 2}), input_error);
}

TEST_CASE("pair insdel is a metric bounded by 2 d_H") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(1, 8), qd(2, 4);
        const int n = nd(rng), q = qd(rng);
        const Word a = random_word(n, q, rng), b = random_word(n, q, rng),
                   c = random_word(n, q, rng);
        const int dab = insdel_pair(a, b).distance;
        CHECK(dab == insdel_pair(b, a).distance);            // symmetry
        CHECK((dab == 0) == (a == b));                       // identity
        CHECK(dab <= insdel_pair(a, c).distance + insdel_pair(c, b).distance);  // triangle
        CHECK(dab <= 2 * hamming_distance(a, b));
        CHECK(dab % 2 == 0);
    }
}

TEST_CASE("exact code oracle") {
    const Field f2(2);
    const LinearCode rep(f2, Matrix::from_rows(f2, {{1, 1}}), "rep2");
    const CodeInsdel r = insdel_code_exact(rep, 16);
    CHECK(r.distance == 4);  // lcs(00, 11) = 0
    CHECK(r.lcs == 0);

    const CodeInsdel h1 = insdel_code_exact(hermitian_example(1), kDefaultMaxCodewords);
    CHECK(h1.distance == 2);
    CHECK(h1.lcs == 7);
    CHECK(h1.message_index_a == 1);  // message (0,0,1)
    CHECK(h1.message_index_b == 2);  // message (0,0,2)
    CHECK(h1.witness_a == Word{0, 0, 1, 2, 3, 1, 2, 3});
    CHECK(h1.witness_b == Word{0, 0, 2, 3, 1, 2, 3, 1});

    const CodeInsdel h2 = insdel_code_exact(hermitian_example(2), kDefaultMaxCodewords);
    CHECK(h2.distance == 4);
    CHECK(h2.lcs == 6);

    CHECK_THROWS_AS(insdel_code_exact(hermitian_example(1), 10), guard_error);
}

TEST_CASE("oracle is deterministic across thread counts") {
    const LinearCode h = hermitian_example(2);
    const CodeInsdel serial = insdel_code_exact(h, 64, 1);
    for (int threads : {2, 3, 8}) CHECK(insdel_code_exact(h, 64, threads) == serial);
}

TEST_CASE("oracle invariances") {
    const LinearCode h1 = hermitian_example(1);
    const auto words = all_codewords(h1, 64);

    // reversal of all codewords preserves the minimum
    std::vector<Word> reversed;
    for (const Word& w : words) reversed.emplace_back(w.rbegin(), w.rend());
    CHECK(insdel_exact_over(reversed).distance == insdel_exact_over(words).distance);

    // global symbol relabeling preserves every pairwise LCS
    const std::vector<int> relabel{2, 0, 3, 1};
    std::vector<Word> mapped;
    for (const Word& w : words) {
        Word t(w.size());
        for (size_t i = 0; i < w.size(); ++i) t[i] = relabel[w[i]];
        mapped.push_back(std::move(t));
    }
    CHECK(insdel_exact_over(mapped).distance == insdel_exact_over(words).distance);
}

TEST_CASE("partial rank") {
    const LinearCode h = hermitian_example(1);
    CHECK(partial_rank(Word(8, 0), h) == 0);
    CHECK(partial_rank({3, 2, 1, 1, 1, 0, 0, 0}, h) == 3);
    CHECK_THROWS_AS(partial_rank({1, 0, 0, 0, 0, 0, 0, 0}, h), input_error);  // not a codeword

    // every full-support codeword of an MDS code has partial rank k
    const Field f5(5);
    const LinearCode rs = reed_solomon(f5, {0, 1, 2, 3}, 2);
    for (const Word& w : all_codewords(rs, 32))
        if (hamming_weight(w) == rs.n) CHECK(partial_rank(w, rs) == rs.k);

    // rank(x, C) <= min(wt(x), k) on every codeword of a few codes
    for (const LinearCode& c : {hermitian_example(1), reed_muller(1, 3), rs})
        for (const Word& w : all_codewords(c, 256))
            CHECK(partial_rank(w, c) <= std::min(hamming_weight(w), c.k));
}

TEST_CASE("information-free sets") {
    const LinearCode h = hermitian_example(1);
    CHECK(is_information_free(h, {}));
    CHECK(is_information_free(h, {0, 1, 2}));
    CHECK_FALSE(is_information_free(h, {0, 1, 2, 3}));  // |S| > k
    CHECK(partial_rank(Word(8, 0), h) == 0);
}

TEST_CASE("generalized Hamming weights") {
    const LinearCode h = hermitian_example(1);
    CHECK(ghw_exact(h, 1, kDefaultMaxSubspaces) == 5);
    CHECK(ghw_exact(h, 2, kDefaultMaxSubspaces) == 7);
    CHECK(ghw_exact(h, 3, kDefaultMaxSubspaces) == 8);  // no identically-zero coordinate
    CHECK(ghw_profile(h, kDefaultMaxSubspaces) == std::vector<long>{5, 7, 8});
    CHECK_THROWS_AS(ghw_exact(h, 4, kDefaultMaxSubspaces), input_error);
    CHECK_THROWS_AS(ghw_exact(h, 2, 10), guard_error);

    CHECK(subspace_count(4, 3, 2, 1000) == 21);
    CHECK(subspace_count(2, 4, 2, 1000) == 35);
    CHECK(subspace_count(2, 11, 5, 1000) == 1001);  // saturates at cap+1
}

TEST_CASE("ghw profile properties on random codes") {
    std::mt19937_64 rng(31);
    for (const int q : {2, 3, 4}) {
        const Field f = q == 4 ? Field(2, 2) : Field(q);
        std::uniform_int_distribution<int> el(0, q - 1);
        int done = 0;
        while (done < 10) {
            std::uniform_int_distribution<int> nd(3, 8);
            const int n = nd(rng);
            std::uniform_int_distribution<int> kd(1, std::min(4, n));
            const int k = kd(rng);
            Matrix G(f, k, n);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j) G.set(i, j, el(rng));
            if (G.rank() != k) continue;
            ++done;
            const LinearCode c(f, G, "random");
            const auto prof = ghw_profile(c, kDefaultMaxSubspaces);
            CHECK(prof[0] == min_hamming_distance(c, 4096));
            for (int r = 1; r <= k; ++r) {
                if (r >= 2) CHECK(prof[r - 1] > prof[r - 2]);     // strictly increasing
                CHECK(prof[r - 1] <= n - k + r);                  // generalized Singleton
                CHECK(prof[r - 1] <= plotkin_ghw_bound(n, q, k, r));
            }
        }
    }
}

TEST_CASE("plotkin ghw bound values") {
    // [8,3]_4: floor(8*3*16/63), floor(8*15*4/63), floor(8*63/63)
    CHECK(plotkin_ghw_bound(8, 4, 3, 1) == 6);
    CHECK(plotkin_ghw_bound(8, 4, 3, 2) == 7);
    CHECK(plotkin_ghw_bound(8, 4, 3, 3) == 8);
    // (7,3,2): 4, 6, 7
    CHECK(plotkin_ghw_bound(7, 2, 3, 1) == 4);
    CHECK(plotkin_ghw_bound(7, 2, 3, 2) == 6);
    CHECK(plotkin_ghw_bound(7, 2, 3, 3) == 7);
}
