#pragma once

#include <utility>
#include <vector>

#include "crcodes/gf.hpp"

namespace crcodes {

// Dense matrix over a finite field, entries stored row-major as field codes.
class Matrix {
  public:
    Matrix(FieldPtr field, int rows, int cols);
    static Matrix identity(FieldPtr field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    int at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }
    void set(int r, int c, int v);

    std::vector<int> row(int r) const;
    std::vector<int> col(int c) const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

  private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<int> a_;
};

struct RrefResult {
    Matrix m;
    int rank;
    std::vector<int> pivots; // pivot column per nonzero row
};

// Reduced row-echelon form (Gauss-Jordan); same row space as the input.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// Rows of the result form a basis of {v : m v^T = 0}.
Matrix nullspace_basis(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<int> mat_vec(const Matrix& m, const std::vector<int>& v);
Matrix col_select(const Matrix& m, const std::vector<int>& cols);
Matrix h_concat(const Matrix& a, const Matrix& b);
Matrix v_concat(const Matrix& a, const Matrix& b);
Matrix mat_inverse(const Matrix& m); // square, invertible

// Canonical projective representative: returns (w, lambda) with v = lambda*w
// and the first nonzero entry of w equal to 1.
std::pair<std::vector<int>, int> proj_normalize(const Field& f, const std::vector<int>& v);

// Order key for canonical column ordering: entries compared as integer
// codes, most significant first. Requires q^len to fit in 63 bits.
long long vec_key(const Field& f, const std::vector<int>& v);
std::vector<int> vec_from_key(const Field& f, int len, long long key);

std::vector<int> scaled(const Field& f, const std::vector<int>& v, int lambda);
std::vector<int> vec_add(const Field& f, const std::vector<int>& a, const std::vector<int>& b);

} // namespace crcodes
