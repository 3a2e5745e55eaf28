#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "insdel/matrix.hpp"

namespace insdel {

/// A linear [n, k]_q code given by a rank-k generator matrix.
struct LinearCode {
    Field field;
    int n = 0;
    int k = 0;
    Matrix gen;
    std::string label;

    LinearCode(Field f, Matrix g, std::string label_);
};

/// msg * G. msg has length k.
Word encode(const LinearCode& c, const Word& msg);

/// Message vector of the index-th codeword in lexicographic message order
/// (first message coordinate is the most significant base-q digit).
Word message_of_index(const LinearCode& c, std::uint64_t index);

/// q^k, or guard_error when it exceeds max_codewords.
std::uint64_t codeword_count_guarded(const LinearCode& c, long max_codewords);

/// All q^k codewords in lexicographic message order (guarded).
std::vector<Word> all_codewords(const LinearCode& c, long max_codewords);

/// First `count` codewords in lexicographic message order (count <= q^k not
/// required; enumeration stops at min(count, q^k)).
std::vector<Word> codeword_prefix(const LinearCode& c, std::uint64_t count);

/// Message msg with msg * G = x, or nullopt when x is not a codeword.
std::optional<Word> decode_message(const LinearCode& c, const Word& x);
bool contains(const LinearCode& c, const Word& x);

/// Reed-Solomon code: G[i][j] = points[j]^i, i = 0..k-1. Points must be
/// distinct field elements, n <= q.
LinearCode reed_solomon(const Field& f, const Word& points, int k);

/// Binary Reed-Muller code RM(u, m): evaluations of all monomials of degree
/// <= u at the 2^m points of F_2^m. Points are enumerated as m-bit counter
/// integers 0..2^m-1 with x_1 the most significant bit, unless an explicit
/// point order (a permutation of 0..2^m-1, listing point ids in coordinate
/// order) is supplied.
LinearCode reed_muller(int u, int m, const std::vector<int>& point_order = {});

/// Cyclic code of length n from a monic generator polynomial g (coefficients
/// degree-ascending) dividing x^n - 1. k = n - deg g; rows of G are the
/// shifts x^i * g.
LinearCode cyclic_code(const Field& f, int n, const Word& g);

/// The [8,3,5] code over F_4 from the Hermitian curve, with one of the two
/// fixed coordinate orderings of its 8 rational points (1 or 2). Generator
/// matrices are hard-coded constants; w = 2, w^2 = 3.
LinearCode hermitian_example(int ordering);

/// Length n+1 code obtained by inserting the value of the linear functional
/// c -> f.c into every codeword before 0-based position pos (pos in [0, n]).
/// f must be nonzero. Dimension is preserved.
LinearCode agfc_insert(const LinearCode& c, const Word& f, int pos);

/// Column permutation: new coordinate i carries old coordinate perm[i]
/// (0-based pull-back). The identity returns the code unchanged.
LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm);

/// Subcode of words vanishing at `positions` (0-based, strictly increasing),
/// with those coordinates deleted. Throws when the result has dimension 0.
LinearCode shorten(const LinearCode& c, const std::vector<int>& positions);

/// Same field, length and row space.
bool same_row_space(const LinearCode& a, const LinearCode& b);

}  // namespace insdel
