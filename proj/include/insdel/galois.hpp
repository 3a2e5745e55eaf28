#pragma once

#include <memory>
#include <string>
#include <vector>

#include "insdel/common.hpp"

namespace insdel {

/// Exact arithmetic in F_q, q = p^m <= 1024.
///
/// Elements are the integers 0..q-1: the base-p digits d_0..d_{m-1} of a
/// value encode the polynomial d_0 + d_1*a + ... + d_{m-1}*a^{m-1} in
/// F_p[a]/(modulus). The encoding is a bijection, so files and reports can
/// carry plain integers.
class Field {
public:
    /// Prime field F_p.
    explicit Field(int p) : Field(p, 1) {}

    /// F_{p^m}. `modulus` lists coefficients degree-ascending (c_0 first,
    /// monic, irreducible, length m+1). When omitted for m > 1, a built-in
    /// default is used for q in {4, 8, 9, 16}:
    ///   F_4: x^2+x+1   F_8: x^3+x+1   F_9: x^2+1   F_16: x^4+x+1
    /// With the F_4 default, w (the root with w^2+w+1=0) is the integer 2
    /// and w^2 is 3.
    Field(int p, int m, std::vector<int> modulus = {});

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    /// Degree-ascending modulus coefficients; empty for m == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // requires a != 0
    int pow(int a, long e) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// Code-file header line: "field p=2 m=2 poly=1,1,1" with the poly
    /// coefficients degree-descending; poly is omitted for m = 1.
    std::string header() const;

    /// Multiplication by polynomial multiply-and-reduce, bypassing the
    /// lookup table. Identical results by construction; kept public so
    /// tests can cross-check the table path.
    int mul_direct(int a, int b) const;

private:
    int p_ = 0;
    int m_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    // lookup tables, shared so Field copies stay cheap
    std::shared_ptr<const std::vector<std::uint16_t>> mul_table_;
    std::shared_ptr<const std::vector<std::uint16_t>> inv_table_;

    void check_element(int a) const;
};

}  // namespace insdel
