#pragma once

#include <iosfwd>
#include <string>

#include "insdel/code.hpp"

namespace insdel {

/// Line-oriented code file ('#' starts a comment):
///
///   field p=2 m=2 poly=1,1,1
///   n 8
///   k 3
///   label hermitian-ordering-1
///   row 1 1 1 1 1 1 1 1
///   row 0 1 2 2 2 3 3 3
///   row 0 0 1 2 3 1 2 3
///
/// poly lists modulus coefficients degree-descending and is omitted for
/// m = 1; the optional label line carries provenance. Elements are the
/// integer encodings of the field module.
std::string serialize_code(const LinearCode& c);
LinearCode parse_code(std::istream& in);
LinearCode load_code_file(const std::string& path);
void save_code_file(const LinearCode& c, const std::string& path);

/// Permutation line: "perm 3 1 2 ..." (1-indexed images; entry i is the old
/// position carried by new position i). Returned 0-based.
std::string serialize_permutation(const std::vector<int>& perm0);
std::vector<int> parse_permutation_line(const std::string& line);
std::vector<int> load_permutation_file(const std::string& path);

/// Comma-separated integer list such as "1,0,1,1".
std::vector<int> parse_int_csv(const std::string& s);

}  // namespace insdel
