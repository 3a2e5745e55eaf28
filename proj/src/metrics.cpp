#include "insdel/metrics.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace insdel {

int hamming_weight(const Word& x) {
    return (int)std::count_if(x.begin(), x.end(), [](int v) { return v != 0; });
}

int hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw input_error("length mismatch");
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::vector<int> support(const Word& x) {
    std::vector<int> s;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back((int)i);
    return s;
}

int lcs_length(const Word& a, const Word& b) {
    const size_t nb = b.size();
    std::vector<int> prev(nb + 1, 0), cur(nb + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        const int ai = a[i - 1];
        for (size_t j = 1; j <= nb; ++j)
            cur[j] = (ai == b[j - 1]) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        std::swap(prev, cur);
    }
    return prev[nb];
}

Word lcs_witness(const Word& a, const Word& b) {
    const size_t na = a.size(), nb = b.size();
    std::vector<std::vector<int>> dp(na + 1, std::vector<int>(nb + 1, 0));
    for (size_t i = 1; i <= na; ++i)
        for (size_t j = 1; j <= nb; ++j)
            dp[i][j] = (a[i - 1] == b[j - 1]) ? dp[i - 1][j - 1] + 1
                                              : std::max(dp[i - 1][j], dp[i][j - 1]);
    Word out;
    size_t i = na, j = nb;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1]) {
            out.push_back(a[i - 1]);
            --i;
            --j;
        } else if (dp[i - 1][j] >= dp[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

PairInsdel insdel_pair(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw input_error("length mismatch");
    const int l = lcs_length(a, b);
    return {2 * ((int)a.size() - l), l};
}

namespace {

struct PairBest {
    int distance = std::numeric_limits<int>::max();
    std::uint64_t i = 0, j = 0;
    bool better_than(const PairBest& o) const {
        if (distance != o.distance) return distance < o.distance;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

PairBest scan_rows(const std::vector<Word>& words, std::uint64_t begin, std::uint64_t stride) {
    PairBest best;
    const std::uint64_t m = words.size();
    for (std::uint64_t i = begin; i < m; i += stride)
        for (std::uint64_t j = i + 1; j < m; ++j) {
            const int l = lcs_length(words[i], words[j]);
            const int d = 2 * ((int)words[i].size() - l);
            PairBest cand{d, i, j};
            if (cand.better_than(best)) best = cand;
        }
    return best;
}

}  // namespace

CodeInsdel insdel_exact_over(const std::vector<Word>& words, int threads) {
    if (words.size() < 2) throw input_error("need at least two codewords");
    threads = std::clamp(threads, 1, 64);
    PairBest best;
    if (threads == 1 || words.size() < 64) {
        best = scan_rows(words, 0, 1);
    } else {
        std::vector<PairBest> local(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { local[t] = scan_rows(words, t, threads); });
        for (auto& th : pool) th.join();
        // deterministic reduction: identical to the serial minimum
        for (const auto& l : local)
            if (l.better_than(best)) best = l;
    }
    CodeInsdel out;
    out.distance = best.distance;
    out.message_index_a = best.i;
    out.message_index_b = best.j;
    out.witness_a = words[best.i];
    out.witness_b = words[best.j];
    out.common = lcs_witness(out.witness_a, out.witness_b);
    out.lcs = (int)out.common.size();
    return out;
}

CodeInsdel insdel_code_exact(const LinearCode& c, long max_codewords, int threads) {
    return insdel_exact_over(all_codewords(c, max_codewords), threads);
}

int min_hamming_distance_over(const std::vector<Word>& words) {
    int best = std::numeric_limits<int>::max();
    for (const Word& w : words) {
        const int wt = hamming_weight(w);
        if (wt > 0) best = std::min(best, wt);
    }
    if (best == std::numeric_limits<int>::max()) throw input_error("no nonzero codeword");
    return best;
}

int min_hamming_distance(const LinearCode& c, long max_codewords) {
    return min_hamming_distance_over(all_codewords(c, max_codewords));
}

int partial_rank(const Word& x, const LinearCode& c) {
    if (!contains(c, x)) throw input_error("vector is not a codeword");
    return c.gen.columns(support(x)).rank();
}

bool is_information_free(const LinearCode& c, const std::vector<int>& S) {
    if ((int)S.size() > c.k) return false;
    return c.gen.columns(S).rank() == (int)S.size();
}

std::uint64_t subspace_count(long q, int k, int r, std::uint64_t cap) {
    if (r < 0 || r > k) return 0;
    // [k r]_q = prod_{i=0}^{r-1} (q^k - q^i) / (q^r - q^i), via the Pascal
    // recurrence [a b] = [a-1 b-1] + q^b [a-1 b], saturating at cap+1
    std::vector<std::vector<unsigned __int128>> g(k + 1,
                                                  std::vector<unsigned __int128>(r + 1, 0));
    const unsigned __int128 sat = (unsigned __int128)cap + 1;
    for (int a = 0; a <= k; ++a) {
        g[a][0] = 1;
        for (int b = 1; b <= std::min(a, r); ++b) {
            if (a == b) {
                g[a][b] = 1;
                continue;
            }
            unsigned __int128 qb = 1;
            for (int t = 0; t < b; ++t) {
                qb *= (unsigned)q;
                if (qb > sat) {
                    qb = sat;
                    break;
                }
            }
            unsigned __int128 v = g[a - 1][b - 1] + qb * g[a - 1][b];
            g[a][b] = v > sat ? sat : v;
        }
    }
    unsigned __int128 v = g[k][r];
    return v > sat ? (std::uint64_t)sat : (std::uint64_t)v;
}

namespace {

// Visit every canonical r x k reduced-row-echelon basis of rank r, pivot
// sets in lexicographic order, free entries counting in row-major order.
template <typename Fn>
void for_each_rref_basis(const Field& f, int k, int r, Fn&& visit) {
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    const int q = f.q();
    while (true) {
        std::vector<bool> is_pivot(k, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_cells;
        for (int i = 0; i < r; ++i)
            for (int j = pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) free_cells.emplace_back(i, j);

        std::vector<Word> basis(r, Word(k, 0));
        for (int i = 0; i < r; ++i) basis[i][pivots[i]] = 1;
        std::vector<int> vals(free_cells.size(), 0);
        while (true) {
            for (size_t t = 0; t < free_cells.size(); ++t)
                basis[free_cells[t].first][free_cells[t].second] = vals[t];
            visit(basis);
            size_t t = free_cells.size();
            while (t > 0 && ++vals[t - 1] == q) vals[--t] = 0;
            if (t == 0) break;
        }

        // next pivot combination
        int i = r - 1;
        while (i >= 0 && pivots[i] == k - (r - i)) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace

long ghw_exact(const LinearCode& c, int r, long max_subspaces) {
    if (r < 1 || r > c.k) throw input_error("need 1 <= r <= k");
    const std::uint64_t count = subspace_count(c.field.q(), c.k, r, (std::uint64_t)max_subspaces);
    if (count > (std::uint64_t)max_subspaces)
        throw guard_error("number of " + std::to_string(r) + "-dimensional subspaces exceeds the guard " +
                          std::to_string(max_subspaces));
    long best = c.n + 1;
    std::vector<char> in_support((size_t)c.n);
    for_each_rref_basis(c.field, c.k, r, [&](const std::vector<Word>& basis) {
        std::fill(in_support.begin(), in_support.end(), 0);
        // supp of a subcode is the union of the supports of any basis
        for (const Word& msg : basis) {
            const Word cw = encode(c, msg);
            for (int j = 0; j < c.n; ++j)
                if (cw[j] != 0) in_support[j] = 1;
        }
        long s = (long)std::count(in_support.begin(), in_support.end(), (char)1);
        best = std::min(best, s);
    });
    return best;
}

std::vector<long> ghw_profile(const LinearCode& c, long max_subspaces) {
    std::vector<long> out;
    for (int r = 1; r <= c.k; ++r) out.push_back(ghw_exact(c, r, max_subspaces));
    return out;
}

long plotkin_ghw_bound(long n, long q, int k, int r) {
    if (r < 1 || r > k) throw input_error("need 1 <= r <= k");
    unsigned __int128 qk = 1, qr = 1, qkr = 1;
    for (int i = 0; i < k; ++i) {
        qk *= (unsigned)q;
        if (qk > ((unsigned __int128)1 << 110))
            throw guard_error("q^k too large for the Plotkin formula");
    }
    for (int i = 0; i < r; ++i) qr *= (unsigned)q;
    for (int i = 0; i < k - r; ++i) qkr *= (unsigned)q;
    const unsigned __int128 num = (unsigned __int128)n * (qr - 1) * qkr;
    return (long)(num / (qk - 1));
}

}  // namespace insdel
