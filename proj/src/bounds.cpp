#include "insdel/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace insdel {
namespace {

long clamp2(long v) { return std::max(v, 2L); }

Word word_add(const Field& f, const Word& a, const Word& b) {
    Word out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Word word_scale(const Field& f, int s, const Word& a) {
    Word out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
    return out;
}

// Incrementally maintained echelon basis of column vectors.
struct EchelonBasis {
    const Field& f;
    std::vector<Word> rows;  // reduced, normalized, sorted by leading index

    explicit EchelonBasis(const Field& fld) : f(fld) {}

    // Returns true when v was independent (rank grew).
    bool insert(Word v) {
        for (const Word& r : rows) {
            const int lead = first_nonzero(r);
            if (v[lead] != 0) {
                const int c = v[lead];
                for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, r[i]));
            }
        }
        const int lead = first_nonzero(v);
        if (lead < 0) return false;
        const int iv = f.inv(v[lead]);
        if (iv != 1)
            for (auto& x : v) x = f.mul(iv, x);
        rows.insert(std::upper_bound(rows.begin(), rows.end(), v,
                                     [](const Word& a, const Word& b) {
                                         return first_nonzero(a) < first_nonzero(b);
                                     }),
                    std::move(v));
        return true;
    }

    static int first_nonzero(const Word& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return (int)i;
        return -1;
    }
};

Word gen_column(const LinearCode& c, int j) {
    Word col(c.k);
    for (int i = 0; i < c.k; ++i) col[i] = c.gen.at(i, j);
    return col;
}

// Rank of every column window [a, b], by extending an echelon basis.
std::vector<std::vector<int>> window_ranks(const LinearCode& c) {
    std::vector<std::vector<int>> h(c.n, std::vector<int>(c.n, 0));
    for (int a = 0; a < c.n; ++a) {
        EchelonBasis basis(c.field);
        int rank = 0;
        for (int b = a; b < c.n; ++b) {
            if (basis.insert(gen_column(c, b))) ++rank;
            h[a][b] = rank;
        }
    }
    return h;
}

// First `target` independent columns among `candidates` (ascending).
std::vector<int> greedy_independent(const LinearCode& c, const std::vector<int>& candidates,
                                    int target) {
    EchelonBasis basis(c.field);
    std::vector<int> S;
    for (int j : candidates) {
        if ((int)S.size() == target) break;
        if (basis.insert(gen_column(c, j))) S.push_back(j);
    }
    if ((int)S.size() != target) throw internal_error("independent column selection failed");
    return S;
}

std::vector<int> range_vec(int a, int b) {  // [a, b] inclusive
    std::vector<int> v;
    for (int j = a; j <= b; ++j) v.push_back(j);
    return v;
}

void push_partial_params(BoundResult& r, const CodewordScan& scan, long candidates) {
    if (!scan.full) {
        r.params.emplace_back("partial_scan", 1);
        r.params.emplace_back("messages_scanned", scan.scanned);
        r.params.emplace_back("candidates", candidates);
    }
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (unsigned)(n - k + i) / (unsigned)i;
        if (r > (unsigned __int128)std::numeric_limits<long long>::max())
            throw guard_error("binomial overflow");
    }
    return (long long)r;
}

}  // namespace

CodewordScan scan_codewords(const LinearCode& c, long max_codewords) {
    CodewordScan scan;
    try {
        scan.words = all_codewords(c, max_codewords);
        scan.full = true;
        scan.scanned = (long)scan.words.size();
    } catch (const guard_error&) {
        // Partial mode: keep only the minimum-weight codewords seen in the
        // first max_codewords messages. Any nonzero codeword yields a sound
        // bound, so a restricted scan stays sound, just possibly weaker.
        scan.full = false;
        scan.scanned = max_codewords;
        std::vector<Word> prefix = codeword_prefix(c, (std::uint64_t)max_codewords);
        int min_wt = std::numeric_limits<int>::max();
        for (const Word& w : prefix) {
            const int wt = hamming_weight(w);
            if (wt == 0) continue;
            if (wt < min_wt) {
                min_wt = wt;
                scan.words.clear();
            }
            if (wt == min_wt) scan.words.push_back(w);
        }
    }
    return scan;
}

std::pair<Word, Word> t21_witness(const LinearCode& c, const Word& x, const std::vector<int>& S,
                                  int t) {
    if (!contains(c, x)) throw input_error("x is not a codeword");
    if (hamming_weight(x) == 0) throw input_error("x must be nonzero");
    if (S.empty()) throw input_error("S must be nonempty");
    for (size_t i = 0; i < S.size(); ++i) {
        if (S[i] < 0 || S[i] >= c.n) throw input_error("S index out of range");
        if (i > 0 && S[i] <= S[i - 1]) throw input_error("S must be strictly increasing");
    }
    if (!is_information_free(c, S)) throw input_error("S is not information-free");
    if (t < 0) throw input_error("t must be nonnegative");
    const int h = (int)S.size();
    const int i1 = S.front(), ih = S.back();
    int side_zeros = 0;
    for (int j = 0; j < c.n; ++j)
        if ((j < i1 || j > ih) && x[j] == 0) ++side_zeros;
    if (side_zeros < c.n - h - t)
        throw input_error("x lacks the required zeros outside the span of S");

    // a_{i1} = 0; a_{ij} = a_{i1} - x_{i2} - ... - x_{ij}
    Word prescribed(h, 0);
    for (int j = 1; j < h; ++j) prescribed[j] = c.field.sub(prescribed[j - 1], x[S[j]]);
    auto msg = c.gen.columns(S).transpose().solve(prescribed);
    if (!msg) throw internal_error("projection onto an information-free set must be surjective");
    Word a = encode(c, *msg);
    return {a, word_add(c.field, a, x)};
}

BoundResult t21_bound_search(const LinearCode& c, const BoundOptions& opts) {
    return t21_bound_search(c, opts, scan_codewords(c, opts.max_codewords));
}

BoundResult t21_bound_search(const LinearCode& c, const BoundOptions& opts,
                             const CodewordScan& scan) {
    (void)opts;
    BoundResult r;
    r.name = "t21_search";
    const auto h = window_ranks(c);
    long best = std::numeric_limits<long>::max();
    int best_a = -1, best_b = -1, best_h = 0, best_z = 0, best_t = 0;
    const Word* best_x = nullptr;
    long candidates = 0;
    std::vector<int> zeros_before(c.n + 1, 0);
    for (const Word& x : scan.words) {
        if (hamming_weight(x) == 0) continue;
        ++candidates;
        for (int j = 0; j < c.n; ++j) zeros_before[j + 1] = zeros_before[j] + (x[j] == 0);
        for (int a = 0; a < c.n; ++a)
            for (int b = a; b < c.n; ++b) {
                const int hw = h[a][b];
                if (hw == 0) continue;
                const int z = zeros_before[a] + (zeros_before[c.n] - zeros_before[b + 1]);
                const int t = c.n - hw - z;
                const long val = 2L * (t + 1);
                if (val < best) {
                    best = val;
                    best_a = a;
                    best_b = b;
                    best_h = hw;
                    best_z = z;
                    best_t = t;
                    best_x = &x;
                }
            }
    }
    if (best_x == nullptr) {
        r.applicable = false;
        r.reason = "no nonzero codeword available to scan";
        return r;
    }
    r.value = clamp2(best);
    r.params.emplace_back("a", best_a + 1);
    r.params.emplace_back("b", best_b + 1);
    r.params.emplace_back("h", best_h);
    r.params.emplace_back("z", best_z);
    r.params.emplace_back("t", best_t);
    push_partial_params(r, scan, candidates);
    r.witness_codeword = *best_x;
    const std::vector<int> S = greedy_independent(c, range_vec(best_a, best_b), best_h);
    r.witness = t21_witness(c, *best_x, S, best_t);
    return r;
}

BoundResult c21_bound(const LinearCode& c, const BoundOptions& opts) {
    return c21_bound(c, opts, scan_codewords(c, opts.max_codewords));
}

BoundResult c21_bound(const LinearCode& c, const BoundOptions& opts, const CodewordScan& scan) {
    (void)opts;
    BoundResult r;
    r.name = "c21";
    long best = std::numeric_limits<long>::max();
    const Word* best_x = nullptr;
    std::vector<int> best_sup;
    int best_rank = 0;
    long candidates = 0;
    for (const Word& x : scan.words) {
        const std::vector<int> sup = support(x);
        if (sup.empty()) continue;
        ++candidates;
        const int first = sup.front(), last = sup.back();
        const int rank = c.gen.columns(sup).rank();
        const long val = 2L * (last - first - rank + 2);
        if (val < best) {
            best = val;
            best_x = &x;
            best_sup = sup;
            best_rank = rank;
        }
    }
    if (best_x == nullptr) {
        r.applicable = false;
        r.reason = "no nonzero codeword available to scan";
        return r;
    }
    r.value = clamp2(best);
    r.params.emplace_back("S", best_sup.front() + 1);
    r.params.emplace_back("L", best_sup.back() + 1);
    r.params.emplace_back("rank", best_rank);
    r.params.emplace_back("wt", (long)best_sup.size());
    r.params.emplace_back("consecutive_support",
                          best_sup.back() - best_sup.front() + 1 == (int)best_sup.size() ? 1 : 0);
    push_partial_params(r, scan, candidates);
    r.witness_codeword = *best_x;
    const int t = best_sup.back() - best_sup.front() - best_rank + 1;
    const std::vector<int> S = greedy_independent(c, best_sup, best_rank);
    r.witness = t21_witness(c, *best_x, S, t);
    return r;
}

BoundResult c22_bound(const LinearCode& c, const BoundOptions& opts) {
    return c22_bound(c, opts, scan_codewords(c, opts.max_codewords));
}

BoundResult c22_bound(const LinearCode& c, const BoundOptions& opts, const CodewordScan& scan) {
    (void)opts;
    BoundResult r;
    r.name = "c22";
    if (!scan.full) {
        r.applicable = false;
        r.reason = "codeword enumeration exceeds the guard; exact d_H unavailable";
        return r;
    }
    const long d_h = min_hamming_distance_over(scan.words);
    r.params.emplace_back("d_H", d_h);
    if (2 * d_h <= c.n) {
        r.applicable = false;
        r.reason = "requires minimum distance d_H > n/2";
        return r;
    }
    const Word* found = nullptr;
    for (const Word& x : scan.words) {
        const std::vector<int> sup = support(x);
        if ((long)sup.size() != d_h) continue;
        if (sup.back() - sup.front() + 1 == (int)sup.size()) {
            found = &x;
            break;
        }
    }
    if (found == nullptr) {
        r.applicable = false;
        r.reason = "no minimum-weight codeword with consecutive index support";
        return r;
    }
    // canonical representative: scale so the last nonzero coordinate is 1
    const std::vector<int> sup = support(*found);
    Word x = word_scale(c.field, c.field.inv((*found)[sup.back()]), *found);
    const int rank = c.gen.columns(sup).rank();
    if (rank != c.k)
        throw internal_error("support columns of a heavy consecutive codeword must have rank k");
    r.value = clamp2(2L * (d_h - c.k + 1));
    r.params.emplace_back("S", sup.front() + 1);
    r.params.emplace_back("L", sup.back() + 1);
    r.params.emplace_back("rank", rank);
    r.witness_codeword = x;
    r.witness = t21_witness(c, x, greedy_independent(c, sup, c.k), (int)d_h - c.k);
    return r;
}

BoundResult c23_bound(const LinearCode& c, std::optional<long> d_hamming) {
    BoundResult r;
    r.name = "c23";
    const long data_free = std::max(2L * (c.n - 2 * c.k + 2), 2L * (c.k - 1));
    r.params.emplace_back("data_free_max", data_free);
    if (!d_hamming) {
        r.applicable = false;
        r.reason = "exact d_H unavailable (enumeration guard)";
        return r;
    }
    const long d_h = *d_hamming;
    const bool high_branch = d_h >= c.k;
    r.value = clamp2(high_branch ? 2L * (c.n - 2 * c.k + 2) : 2L * (c.n - c.k - d_h + 2));
    r.params.emplace_back("d_H", d_h);
    r.params.emplace_back("branch_d_H_ge_k", high_branch ? 1 : 0);
    return r;
}

std::optional<std::pair<Word, Word>> half_singleton_witness(const LinearCode& c,
                                                            std::string* diagnostic) {
    if (2 * c.k <= c.n) throw input_error("requires 2k > n");
    const Matrix H = parity_check(c.gen);
    const int hr = H.rows();
    // column i of the stacked matrix is (h_i, h_{i+1 mod n})
    Matrix stacked(c.field, 2 * hr, c.n);
    for (int i = 0; i < hr; ++i)
        for (int j = 0; j < c.n; ++j) {
            stacked.set(i, j, H.at(i, j));
            stacked.set(hr + i, j, H.at(i, (j + 1) % c.n));
        }
    const Matrix null_basis = stacked.null_space();
    std::vector<Word> candidates;
    for (int i = 0; i < null_basis.rows(); ++i) candidates.push_back(null_basis.row(i));
    for (int i = 0; i < null_basis.rows(); ++i)
        for (int j = i + 1; j < null_basis.rows(); ++j)
            candidates.push_back(word_add(c.field, null_basis.row(i), null_basis.row(j)));
    for (const Word& y : candidates) {
        const bool constant = std::all_of(y.begin(), y.end(), [&](int v) { return v == y[0]; });
        if (constant) continue;
        Word a(c.n);
        a[0] = y[c.n - 1];
        for (int j = 1; j < c.n; ++j) a[j] = y[j - 1];
        return std::make_pair(a, y);  // y is the left cyclic shift of a
    }
    if (diagnostic)
        *diagnostic = "only constant shift-invariant solutions exist in the null space";
    return std::nullopt;
}

BoundResult half_singleton_bound(const LinearCode& c) {
    BoundResult r;
    r.name = "half_singleton";
    r.value = clamp2(2L * (c.n - 2 * c.k + 2));
    if (2 * c.k > c.n) {
        std::string diag;
        if (auto w = half_singleton_witness(c, &diag)) {
            r.witness = *w;
            r.params.emplace_back("witness_distance", 2);
        }
    }
    return r;
}

namespace {

BoundResult c24_from_profile(const LinearCode& c, const std::vector<long>& dr,
                             const std::string& name) {
    BoundResult r;
    r.name = name;
    long best = std::numeric_limits<long>::max();
    int best_r = 1;
    for (int rr = 1; rr <= c.k; ++rr) {
        const long v = clamp2(2L * (dr[rr - 1] - 2 * rr + 2));
        if (v < best) {
            best = v;
            best_r = rr;
        }
    }
    r.value = best;
    r.params.emplace_back("r", best_r);
    for (int rr = 1; rr <= c.k; ++rr)
        r.params.emplace_back("d_" + std::to_string(rr), dr[rr - 1]);
    return r;
}

}  // namespace

BoundResult c24_bound_exact(const LinearCode& c, long max_subspaces) {
    try {
        return c24_from_profile(c, ghw_profile(c, max_subspaces), "c24_exact");
    } catch (const guard_error& e) {
        BoundResult r;
        r.name = "c24_exact";
        r.applicable = false;
        r.reason = e.what();
        return r;
    }
}

BoundResult c24_bound_plotkin(const LinearCode& c) {
    try {
        std::vector<long> dr;
        for (int rr = 1; rr <= c.k; ++rr)
            dr.push_back(plotkin_ghw_bound(c.n, c.field.q(), c.k, rr));
        return c24_from_profile(c, dr, "c24_plotkin");
    } catch (const guard_error& e) {
        BoundResult r;
        r.name = "c24_plotkin";
        r.applicable = false;
        r.reason = e.what();
        return r;
    }
}

BoundResult t31_rm_bound(int u, int m) {
    if (u < 1 || 2 * u >= m) throw input_error("requires 1 <= u < m/2");
    long long sum_high = 0;
    for (int j = u + 1; j <= m - u; ++j) sum_high += binomial(m - u, j);
    long long rank = 0;
    for (int j = 0; j <= u; ++j) rank += binomial(m - u, j);
    const long long weight = 1LL << (m - u);
    BoundResult r;
    r.name = "t31_rm";
    r.value = (long)(2 * (1 + sum_high));
    if (r.value != 2 * (weight - rank + 1))
        throw internal_error("t31 combinatorial identity failed");
    r.params.emplace_back("u", u);
    r.params.emplace_back("m", m);
    r.params.emplace_back("rank", (long)rank);
    r.params.emplace_back("weight", (long)weight);
    return r;
}

P41Result p41_bounds(long n, int k, long q) {
    P41Result out;
    for (int rr = 1; rr <= k; ++rr) {
        const long dr = plotkin_ghw_bound(n, q, k, rr);
        BoundResult cyc;
        cyc.name = "p41";
        cyc.value = 2L * (dr - 2 * rr + 2);
        cyc.params = {{"r", rr}, {"d_r", dr}};
        BoundResult ag;
        ag.name = "p41";
        ag.value = 2L * (dr - 2 * rr + 3);
        ag.params = {{"r", rr}, {"d_r", dr}};
        out.cyclic.push_back(std::move(cyc));
        out.agfc.push_back(std::move(ag));
    }
    return out;
}

std::vector<BoundResult> direct_bounds(const LinearCode& c, std::optional<long> d_hamming) {
    std::vector<BoundResult> out;
    BoundResult direct;
    direct.name = "direct_2dH";
    if (d_hamming) {
        direct.value = clamp2(2 * *d_hamming);
        direct.params.emplace_back("d_H", *d_hamming);
    } else {
        direct.applicable = false;
        direct.reason = "exact d_H unavailable (enumeration guard)";
    }
    out.push_back(std::move(direct));

    BoundResult singleton;
    singleton.name = "singleton_2nk1";
    singleton.value = clamp2(2L * (c.n - c.k + 1));
    out.push_back(std::move(singleton));

    BoundResult cz;
    cz.name = "cz21_2nk";
    if (c.n > c.k && c.k >= 2) {
        cz.value = clamp2(2L * (c.n - c.k));
    } else {
        cz.applicable = false;
        cz.reason = "requires n > k >= 2";
    }
    out.push_back(std::move(cz));
    return out;
}

std::vector<BoundResult> all_bounds(const LinearCode& c, const BoundOptions& opts) {
    const CodewordScan scan = scan_codewords(c, opts.max_codewords);
    std::optional<long> d_h;
    if (scan.full) d_h = min_hamming_distance_over(scan.words);

    std::vector<BoundResult> out;
    out.push_back(t21_bound_search(c, opts, scan));
    out.push_back(c21_bound(c, opts, scan));
    out.push_back(c22_bound(c, opts, scan));
    out.push_back(c23_bound(c, d_h));
    out.push_back(half_singleton_bound(c));
    out.push_back(c24_bound_exact(c, opts.max_subspaces));
    out.push_back(c24_bound_plotkin(c));
    for (auto& b : direct_bounds(c, d_h)) out.push_back(std::move(b));

    if (opts.rm_params) {
        const auto [u, m] = *opts.rm_params;
        if (u >= 1 && 2 * u < m) {
            out.push_back(t31_rm_bound(u, m));
        } else {
            BoundResult r;
            r.name = "t31_rm";
            r.applicable = false;
            r.reason = "requires 1 <= u < m/2";
            out.push_back(std::move(r));
        }
    } else {
        BoundResult r;
        r.name = "t31_rm";
        r.applicable = false;
        r.reason = "code is not a Reed-Muller construction in block point order";
        out.push_back(std::move(r));
    }

    // Summary row for the Plotkin-profile family bound; the per-r table is
    // carried in params (cyclic values; the agfc column predicts the
    // one-coordinate insertion extension, not this code).
    BoundResult p41;
    p41.name = "p41";
    try {
        const P41Result rows = p41_bounds(c.n, c.k, c.field.q());
        long best = std::numeric_limits<long>::max();
        int best_r = 1;
        for (int rr = 1; rr <= c.k; ++rr) {
            const long v = clamp2(rows.cyclic[rr - 1].value);
            if (v < best) {
                best = v;
                best_r = rr;
            }
        }
        p41.value = best;
        p41.params.emplace_back("r", best_r);
        for (int rr = 1; rr <= c.k; ++rr) {
            p41.params.emplace_back("cyclic_" + std::to_string(rr), rows.cyclic[rr - 1].value);
            p41.params.emplace_back("agfc_" + std::to_string(rr), rows.agfc[rr - 1].value);
        }
    } catch (const guard_error& e) {
        p41.applicable = false;
        p41.reason = e.what();
    }
    out.push_back(std::move(p41));
    return out;
}

}  // namespace insdel
