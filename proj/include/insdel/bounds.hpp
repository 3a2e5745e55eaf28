#pragma once

#include <optional>
#include <utility>

#include "insdel/metrics.hpp"

namespace insdel {

/// One named upper bound on the insdel distance of a code. Inapplicability
/// is data, not failure: reports list every bound with a reason when a
/// calculator does not apply.
struct BoundResult {
    std::string name;
    long value = 0;
    bool applicable = true;
    std::string reason;  // set when !applicable
    std::vector<std::pair<std::string, long>> params;
    std::optional<std::pair<Word, Word>> witness;  // codeword pair certifying d_insdel <= value
    std::optional<Word> witness_codeword;          // the codeword x behind the bound
    bool operator==(const BoundResult&) const = default;
};

struct BoundOptions {
    long max_codewords = kDefaultMaxCodewords;
    long max_subspaces = kDefaultMaxSubspaces;
    // (u, m) when the code is a Reed-Muller code whose point order keeps
    // each block x_1 = ... = x_j = 1 consecutive (the counter order does)
    std::optional<std::pair<int, int>> rm_params;
};

/// Codewords available for scanning bounds: either the full code or, when
/// q^k exceeds the guard, the minimum-weight codewords found in the first
/// max_codewords messages (partial mode, flagged in params).
struct CodewordScan {
    std::vector<Word> words;  // full list, lexicographic message order
    bool full = true;
    long scanned = 0;  // messages enumerated when partial
};
CodewordScan scan_codewords(const LinearCode& c, long max_codewords);

/// Window-rank search instantiating the information-free-subset bound:
/// minimizes 2(n - h - z + 1) over nonzero codewords x and intervals [a, b],
/// where h is the rank of the generator columns in the window and z the
/// number of zero coordinates of x outside it. Attaches the constructed
/// certifying pair.
BoundResult t21_bound_search(const LinearCode& c, const BoundOptions& opts);
BoundResult t21_bound_search(const LinearCode& c, const BoundOptions& opts,
                             const CodewordScan& scan);

/// Constructive certificate: given a codeword x, an information-free set S
/// (0-based, ascending) with extremes i1 < ih, and t such that x has at
/// least n-|S|-t zeros in [0,i1) or (ih,n), builds a codeword a whose values
/// on S telescope the partial sums of x (a_{i1} = 0), so that
/// lcs(a, a+x) >= n-t-1 and hence insdel(a, a+x) <= 2(t+1).
std::pair<Word, Word> t21_witness(const LinearCode& c, const Word& x,
                                  const std::vector<int>& S, int t);

/// min over nonzero codewords x of 2(L(x) - S(x) - rank(x, C) + 2), with
/// S/L the first/last support indices.
BoundResult c21_bound(const LinearCode& c, const BoundOptions& opts);
BoundResult c21_bound(const LinearCode& c, const BoundOptions& opts, const CodewordScan& scan);

/// 2(d_H - k + 1) when d_H > n/2 and some minimum-weight codeword has
/// consecutive support.
BoundResult c22_bound(const LinearCode& c, const BoundOptions& opts);
BoundResult c22_bound(const LinearCode& c, const BoundOptions& opts, const CodewordScan& scan);

/// Branch bound: 2(n-2k+2) when d_H >= k, else 2(n-k-d_H+2).
BoundResult c23_bound(const LinearCode& c, std::optional<long> d_hamming);

/// max{2(n-2k+2), 2}; always applicable. When 2k > n the shift-codeword
/// witness pair is attached if one exists.
BoundResult half_singleton_bound(const LinearCode& c);

/// For 2k > n: stacks the parity-check matrix H over its cyclic column
/// shift and takes a non-constant null-space vector y, giving codewords
/// (a, left_shift(a)) with a = right_shift(y); their insdel distance is 2.
/// Returns nullopt (with a diagnostic) when only constant solutions exist.
std::optional<std::pair<Word, Word>> half_singleton_witness(const LinearCode& c,
                                                            std::string* diagnostic = nullptr);

/// min over r of max{2(d_r - 2r + 2), 2} with exact generalized Hamming
/// weights, or with the Plotkin estimate floor(n(q^r-1)q^{k-r}/(q^k-1)).
BoundResult c24_bound_exact(const LinearCode& c, long max_subspaces);
BoundResult c24_bound_plotkin(const LinearCode& c);

/// Reed-Muller block-order bound 2(1 + sum_{j=u+1}^{m-u} C(m-u, j)) for
/// 1 <= u < m/2; checks the identity value = 2(2^{m-u} - rank + 1) with
/// rank = sum_{j<=u} C(m-u, j).
BoundResult t31_rm_bound(int u, int m);

/// Per-r values for codes whose generalized Hamming weights meet the
/// Plotkin bound: 2(d_r - 2r + 2) for the code and 2(d_r - 2r + 3) for its
/// one-coordinate insertion extension, d_r floored.
struct P41Result {
    std::vector<BoundResult> cyclic;
    std::vector<BoundResult> agfc;
};
P41Result p41_bounds(long n, int k, long q);

/// direct_2dH = 2 d_H, singleton_2nk1 = 2(n-k+1), cz21_2nk = 2(n-k) for
/// n > k >= 2.
std::vector<BoundResult> direct_bounds(const LinearCode& c, std::optional<long> d_hamming);

/// All twelve named bounds in report order: t21_search, c21, c22, c23,
/// half_singleton, c24_exact, c24_plotkin, direct_2dH, singleton_2nk1,
/// cz21_2nk, t31_rm, p41.
std::vector<BoundResult> all_bounds(const LinearCode& c, const BoundOptions& opts);

}  // namespace insdel
