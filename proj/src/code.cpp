#include "insdel/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace insdel {
namespace {

// Remainder of a modulo monic g, both degree-ascending over F.
Word fq_poly_mod(Word a, const Word& g, const Field& F) {
    auto norm = [](Word& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    norm(a);
    const int dg = (int)g.size() - 1;
    while ((int)a.size() - 1 >= dg) {
        const int shift = (int)a.size() - 1 - dg;
        const int c = a.back();
        for (int i = 0; i <= dg; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, g[i]));
        norm(a);
    }
    return a;
}

bool is_identity_perm(const std::vector<int>& perm) {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != (int)i) return false;
    return true;
}

}  // namespace

LinearCode::LinearCode(Field f, Matrix g, std::string label_)
    : field(std::move(f)), n(g.cols()), k(g.rows()), gen(std::move(g)), label(std::move(label_)) {
    if (field != gen.field()) throw input_error("generator matrix field mismatch");
    if (n < 1 || k < 1) throw input_error("code must have n >= 1 and k >= 1");
    if (k > n) throw input_error("dimension exceeds length");
    if (gen.rank() != k) throw input_error("generator matrix is rank-deficient");
}

Word encode(const LinearCode& c, const Word& msg) {
    if ((int)msg.size() != c.k) throw input_error("message length mismatch");
    return vec_times(c.field, msg, c.gen);
}

Word message_of_index(const LinearCode& c, std::uint64_t index) {
    Word msg(c.k, 0);
    const std::uint64_t q = (std::uint64_t)c.field.q();
    for (int i = c.k - 1; i >= 0; --i) {
        msg[i] = (int)(index % q);
        index /= q;
    }
    return msg;
}

std::uint64_t codeword_count_guarded(const LinearCode& c, long max_codewords) {
    unsigned __int128 count = 1;
    for (int i = 0; i < c.k; ++i) {
        count *= (unsigned)c.field.q();
        if (count > (unsigned __int128)max_codewords)
            throw guard_error("q^k exceeds the codeword guard " + std::to_string(max_codewords) +
                              "; raise --max-codewords or run a bounds-only analysis");
    }
    return (std::uint64_t)count;
}

std::vector<Word> all_codewords(const LinearCode& c, long max_codewords) {
    const std::uint64_t count = codeword_count_guarded(c, max_codewords);
    std::vector<Word> words;
    words.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) words.push_back(encode(c, message_of_index(c, i)));
    return words;
}

std::vector<Word> codeword_prefix(const LinearCode& c, std::uint64_t count) {
    unsigned __int128 total = 1;
    for (int i = 0; i < c.k; ++i) {
        total *= (unsigned)c.field.q();
        if (total >= count) break;
    }
    if ((unsigned __int128)count > total) count = (std::uint64_t)total;
    std::vector<Word> words;
    words.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) words.push_back(encode(c, message_of_index(c, i)));
    return words;
}

std::optional<Word> decode_message(const LinearCode& c, const Word& x) {
    if ((int)x.size() != c.n) throw input_error("codeword length mismatch");
    return c.gen.transpose().solve(x);
}

bool contains(const LinearCode& c, const Word& x) { return decode_message(c, x).has_value(); }

LinearCode reed_solomon(const Field& f, const Word& points, int k) {
    const int n = (int)points.size();
    if (n < 1 || n > f.q()) throw input_error("need 1 <= n <= q evaluation points");
    std::set<int> distinct(points.begin(), points.end());
    if ((int)distinct.size() != n) throw input_error("evaluation points must be distinct");
    if (k < 1 || k > n) throw input_error("need 1 <= k <= n");
    Matrix G(f, k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) G.set(i, j, f.pow(points[j], i));
    std::ostringstream label;
    label << "rs(q=" << f.q() << ",n=" << n << ",k=" << k << ")";
    return LinearCode(f, std::move(G), label.str());
}

LinearCode reed_muller(int u, int m, const std::vector<int>& point_order) {
    if (m < 1 || m > 16) throw input_error("need 1 <= m <= 16");
    if (u < 0 || u > m) throw input_error("need 0 <= u <= m");
    const int n = 1 << m;
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    bool block_order = true;
    if (!point_order.empty()) {
        if ((int)point_order.size() != n) throw input_error("point order must list all 2^m points");
        std::vector<bool> seen(n, false);
        for (int p : point_order) {
            if (p < 0 || p >= n || seen[p]) throw input_error("point order is not a permutation");
            seen[p] = true;
        }
        pts = point_order;
        block_order = is_identity_perm(pts);
    }

    // monomials of degree <= u, graded, lexicographic within a degree
    std::vector<std::vector<int>> monomials;
    for (int d = 0; d <= u; ++d) {
        std::vector<int> comb(d);
        std::iota(comb.begin(), comb.end(), 1);
        while (true) {
            monomials.push_back(comb);
            if (d == 0) break;
            int i = d - 1;
            while (i >= 0 && comb[i] == m - (d - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    Field f2(2);
    Matrix G(f2, (int)monomials.size(), n);
    for (size_t r = 0; r < monomials.size(); ++r)
        for (int j = 0; j < n; ++j) {
            int v = 1;
            for (int var : monomials[r]) v &= (pts[j] >> (m - var)) & 1;  // x_1 = MSB
            G.set((int)r, j, v);
        }
    std::ostringstream label;
    label << "rm(u=" << u << ",m=" << m << ",order=" << (block_order ? "block" : "custom") << ")";
    return LinearCode(f2, std::move(G), label.str());
}

LinearCode cyclic_code(const Field& f, int n, const Word& g) {
    Word gen_poly = g;
    while (!gen_poly.empty() && gen_poly.back() == 0) gen_poly.pop_back();
    if (gen_poly.empty()) throw input_error("generator polynomial must be nonzero");
    for (int c : gen_poly)
        if (c < 0 || c >= f.q()) throw input_error("generator polynomial coefficient out of range");
    if (gen_poly.back() != 1) throw input_error("generator polynomial must be monic");
    const int deg = (int)gen_poly.size() - 1;
    if (n < 1) throw input_error("need n >= 1");
    if (deg > n - 1) throw input_error("deg(g) must be at most n-1");
    Word xn_minus_1(n + 1, 0);
    xn_minus_1[0] = f.neg(1);
    xn_minus_1[n] = 1;
    if (!fq_poly_mod(xn_minus_1, gen_poly, f).empty())
        throw input_error("generator polynomial does not divide x^n - 1");
    const int k = n - deg;
    Matrix G(f, k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= deg; ++j) G.set(i, i + j, gen_poly[j]);
    std::ostringstream label;
    label << "cyclic(q=" << f.q() << ",n=" << n << ",g=";
    for (int i = deg; i >= 0; --i) {
        label << gen_poly[i];
        if (i > 0) label << ',';
    }
    label << ")";
    return LinearCode(f, std::move(G), label.str());
}

LinearCode hermitian_example(int ordering) {
    if (ordering != 1 && ordering != 2) throw input_error("ordering must be 1 or 2");
    Field f4(2, 2);
    std::vector<Word> rows;
    if (ordering == 1)
        rows = {{1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 2, 2, 3, 3, 3}, {0, 0, 1, 2, 3, 1, 2, 3}};
    else
        rows = {{1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 2, 3, 2, 3}, {0, 0, 1, 1, 2, 2, 3, 3}};
    return LinearCode(f4, Matrix::from_rows(f4, rows),
                      "hermitian-ordering-" + std::to_string(ordering));
}

LinearCode agfc_insert(const LinearCode& c, const Word& f, int pos) {
    if ((int)f.size() != c.n) throw input_error("functional length mismatch");
    if (std::all_of(f.begin(), f.end(), [](int v) { return v == 0; }))
        throw input_error("functional must be nonzero (a non-trivial linear function)");
    for (int v : f)
        if (v < 0 || v >= c.field.q()) throw input_error("functional coefficient out of range");
    if (pos < 0 || pos > c.n) throw input_error("insertion position out of range");
    Matrix G(c.field, c.k, c.n + 1);
    for (int i = 0; i < c.k; ++i) {
        int dot = 0;
        for (int j = 0; j < c.n; ++j) dot = c.field.add(dot, c.field.mul(f[j], c.gen.at(i, j)));
        for (int j = 0; j < pos; ++j) G.set(i, j, c.gen.at(i, j));
        G.set(i, pos, dot);
        for (int j = pos; j < c.n; ++j) G.set(i, j + 1, c.gen.at(i, j));
    }
    std::ostringstream label;
    label << c.label << ";agfc(pos=" << pos + 1 << ")";
    return LinearCode(c.field, std::move(G), label.str());
}

LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm) {
    if ((int)perm.size() != c.n) throw input_error("permutation length mismatch");
    std::vector<bool> seen(c.n, false);
    for (int p : perm) {
        if (p < 0 || p >= c.n || seen[p]) throw input_error("not a permutation");
        seen[p] = true;
    }
    if (is_identity_perm(perm)) return c;
    Matrix G(c.field, c.k, c.n);
    for (int i = 0; i < c.k; ++i)
        for (int j = 0; j < c.n; ++j) G.set(i, j, c.gen.at(i, perm[j]));
    return LinearCode(c.field, std::move(G), c.label + ";permuted");
}

LinearCode shorten(const LinearCode& c, const std::vector<int>& positions) {
    for (size_t t = 0; t < positions.size(); ++t) {
        if (positions[t] < 0 || positions[t] >= c.n)
            throw input_error("shortening position out of range");
        if (t > 0 && positions[t] <= positions[t - 1])
            throw input_error("shortening positions must be strictly increasing");
    }
    if (positions.empty()) return c;
    // messages whose codewords vanish on the selected positions
    Matrix B = c.gen.columns(positions).transpose().null_space();
    if (B.rows() == 0) throw input_error("shortening kills the code (dimension 0)");
    Matrix full = B.times(c.gen);
    std::vector<int> keep;
    size_t t = 0;
    for (int j = 0; j < c.n; ++j) {
        if (t < positions.size() && positions[t] == j) {
            ++t;
            continue;
        }
        keep.push_back(j);
    }
    return LinearCode(c.field, full.columns(keep), c.label + ";shortened");
}

bool same_row_space(const LinearCode& a, const LinearCode& b) {
    if (a.field != b.field || a.n != b.n || a.k != b.k) return false;
    return a.gen.rref() == b.gen.rref();
}

}  // namespace insdel
