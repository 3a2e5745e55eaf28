#include "insdel/galois.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace insdel {
namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over F_p, coefficients degree-ascending, zero poly = empty.
using Poly = std::vector<int>;

void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (int)((r[i + j] + (long)a[i] * b[j]) % p);
    normalize(r);
    return r;
}

// Remainder of a modulo monic g.
Poly poly_mod(Poly a, const Poly& g, int p) {
    normalize(a);
    const int dg = (int)g.size() - 1;
    while ((int)a.size() - 1 >= dg) {
        const int shift = (int)a.size() - 1 - dg;
        const int c = a.back();
        for (int i = 0; i <= dg; ++i) {
            long v = a[shift + i] - (long)c * g[i];
            a[shift + i] = (int)(((v % p) + p) % p);
        }
        normalize(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Poly& f, int p) {
    const int m = (int)f.size() - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        // odometer over the d low coefficients; leading coefficient is 1
        std::vector<int> low(d, 0);
        while (true) {
            Poly g = low;
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
            int i = 0;
            while (i < d && ++low[i] == p) low[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

Poly value_to_poly(int v, int p, int m) {
    Poly d(m, 0);
    for (int i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;  // not normalized; fixed length m
}

int poly_to_value(const Poly& a, int p, int m) {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + (i < (int)a.size() ? a[i] : 0);
    return v;
}

const std::map<std::pair<int, int>, std::vector<int>>& default_moduli() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},        // x^2+x+1
        {{2, 3}, {1, 1, 0, 1}},     // x^3+x+1
        {{3, 2}, {1, 0, 1}},        // x^2+1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4+x+1
    };
    return table;
}

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus) : p_(p), m_(m) {
    if (!is_prime(p)) throw input_error("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw input_error("field extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > 1024) throw input_error("field order p^m exceeds the supported limit 1024");
    }
    q_ = (int)q;

    if (m == 1) {
        if (!modulus.empty()) throw input_error("prime fields take no modulus");
    } else {
        if (modulus.empty()) {
            auto it = default_moduli().find({p, m});
            if (it == default_moduli().end())
                throw input_error("no built-in modulus for p=" + std::to_string(p) + " m=" +
                                  std::to_string(m) + "; supply one explicitly");
            modulus = it->second;
        }
        if ((int)modulus.size() != m + 1)
            throw input_error("modulus must list m+1 coefficients");
        for (int c : modulus)
            if (c < 0 || c >= p) throw input_error("modulus coefficient out of range [0, p)");
        if (modulus.back() != 1) throw input_error("modulus must be monic");
        if (!is_irreducible(modulus, p))
            throw input_error("modulus is reducible over F_" + std::to_string(p));
        modulus_ = std::move(modulus);
    }

    // Multiplication table for small fields; larger ones multiply directly.
    if (q_ <= 256) {
        auto tab = std::make_shared<std::vector<std::uint16_t>>((size_t)q_ * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b)
                (*tab)[(size_t)a * q_ + b] = (std::uint16_t)mul_direct(a, b);
        mul_table_ = std::move(tab);
    }
    auto inv = std::make_shared<std::vector<std::uint16_t>>(q_, 0);
    for (int a = 1; a < q_; ++a) (*inv)[a] = (std::uint16_t)pow(a, q_ - 2);
    inv_table_ = std::move(inv);
}

void Field::check_element(int a) const {
    if (a < 0 || a >= q_)
        throw input_error("element " + std::to_string(a) + " out of range for field of order " +
                          std::to_string(q_));
}

int Field::add(int a, int b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    Poly da = value_to_poly(a, p_, m_), db = value_to_poly(b, p_, m_);
    for (int i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return poly_to_value(da, p_, m_);
}

int Field::neg(int a) const {
    check_element(a);
    if (m_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    Poly d = value_to_poly(a, p_, m_);
    for (int i = 0; i < m_; ++i) d[i] = (p_ - d[i]) % p_;
    return poly_to_value(d, p_, m_);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul_direct(int a, int b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return (int)(((long)a * b) % p_);
    Poly prod = poly_mul(value_to_poly(a, p_, m_), value_to_poly(b, p_, m_), p_);
    return poly_to_value(poly_mod(std::move(prod), modulus_, p_), p_, m_);
}

int Field::mul(int a, int b) const {
    if (mul_table_) {
        check_element(a);
        check_element(b);
        return (*mul_table_)[(size_t)a * q_ + b];
    }
    return mul_direct(a, b);
}

int Field::pow(int a, long e) const {
    check_element(a);
    if (e < 0) throw input_error("negative exponent");
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul_table_ ? mul(r, base) : mul_direct(r, base);
        base = mul_table_ ? mul(base, base) : mul_direct(base, base);
        e >>= 1;
    }
    return r;
}

int Field::inv(int a) const {
    check_element(a);
    if (a == 0) throw input_error("inverse of zero");
    return (*inv_table_)[a];
}

std::string Field::header() const {
    std::ostringstream os;
    os << "field p=" << p_ << " m=" << m_;
    if (m_ > 1) {
        os << " poly=";
        for (int i = m_; i >= 0; --i) {
            os << modulus_[i];
            if (i > 0) os << ',';
        }
    }
    return os.str();
}

}  // namespace insdel
