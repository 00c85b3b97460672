#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crcodes/linalg.hpp"

namespace crcodes {

// Shared matrix text format.
//
//   # optional comment lines
//   q=<int> p=<int> s=<int> modulus=<int> rows=<int> cols=<int>
//   <row of space-separated entry codes 0..q-1>
//   ...
//
// modulus is the integer code of the field's primitive polynomial over F_p
// (sum of coefficient * p^i, including the monic leading term).
void write_matrix(std::ostream& os, const Matrix& m, const std::vector<std::string>& comments = {});
Matrix read_matrix(std::istream& is);

void write_matrix_file(const std::string& path, const Matrix& m,
                       const std::vector<std::string>& comments = {});
Matrix read_matrix_file(const std::string& path);

} // namespace crcodes
