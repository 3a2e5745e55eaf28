#pragma once

#include "insdel/code.hpp"

namespace insdel {

int hamming_weight(const Word& x);
int hamming_distance(const Word& a, const Word& b);
std::vector<int> support(const Word& x);  // 0-based, ascending

/// Length of a longest common subsequence (classic dynamic program).
int lcs_length(const Word& a, const Word& b);
/// One longest common subsequence (by full-table backtrack).
Word lcs_witness(const Word& a, const Word& b);

struct PairInsdel {
    int distance = 0;  // 2(n - lcs)
    int lcs = 0;
    bool operator==(const PairInsdel&) const = default;
};
/// Insdel distance between two equal-length words.
PairInsdel insdel_pair(const Word& a, const Word& b);

struct CodeInsdel {
    int distance = 0;
    int lcs = 0;
    std::uint64_t message_index_a = 0;
    std::uint64_t message_index_b = 0;
    Word witness_a, witness_b;
    Word common;  // a longest common subsequence of the witness pair
    bool operator==(const CodeInsdel&) const = default;
};

/// Exact insdel distance of a code: the minimum over all unordered pairs of
/// distinct codewords. Every pair is examined - linearity does NOT reduce
/// this to codeword weights, because the LCS is not translation invariant,
/// so there is no "minimum weight" shortcut. The witness pair is the
/// lexicographically smallest attaining pair by (message index a, message
/// index b); the reduction is deterministic for any thread count.
CodeInsdel insdel_code_exact(const LinearCode& c, long max_codewords, int threads = 1);

/// Same oracle over a precomputed codeword list in lexicographic message
/// order (index = message index).
CodeInsdel insdel_exact_over(const std::vector<Word>& words, int threads = 1);

/// Minimum Hamming weight of a nonzero codeword (= minimum distance).
int min_hamming_distance(const LinearCode& c, long max_codewords);
int min_hamming_distance_over(const std::vector<Word>& words);

/// dim of the projection of the code onto supp(x); x must be a codeword.
int partial_rank(const Word& x, const LinearCode& c);

/// True iff projecting the code onto S (0-based, strictly increasing) is
/// surjective, i.e. rank of the selected generator columns equals |S|.
bool is_information_free(const LinearCode& c, const std::vector<int>& S);

/// Number of r-dimensional subspaces of F_q^k (Gaussian binomial), saturated
/// at cap+1 when it exceeds cap.
std::uint64_t subspace_count(long q, int k, int r, std::uint64_t cap);

/// r-th generalized Hamming weight: the minimum support size over all
/// r-dimensional subcodes, by enumerating canonical reduced-row-echelon
/// bases of the message space in lexicographic pivot order.
long ghw_exact(const LinearCode& c, int r, long max_subspaces);
std::vector<long> ghw_profile(const LinearCode& c, long max_subspaces);

/// floor(n (q^r - 1) q^{k-r} / (q^k - 1)).
long plotkin_ghw_bound(long n, long q, int k, int r);

}  // namespace insdel
