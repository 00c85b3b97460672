#include "crcodes/linalg.hpp"

#include <algorithm>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field().same(b.field())) throw InputError("matrices are over different fields");
}

} // namespace

Matrix::Matrix(FieldPtr field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    a_.assign((size_t)rows * cols, 0);
}

Matrix Matrix::identity(FieldPtr field, int n) {
    Matrix m(std::move(field), n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(int r, int c, int v) {
    if (v < 0 || v >= field_->q()) throw InputError("entry is not a field element code");
    a_[(size_t)r * cols_ + c] = v;
}

std::vector<int> Matrix::row(int r) const {
    return std::vector<int>(a_.begin() + (size_t)r * cols_, a_.begin() + (size_t)(r + 1) * cols_);
}

std::vector<int> Matrix::col(int c) const {
    std::vector<int> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_->same(other.field()) && a_ == other.a_;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (r.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < r.cols(); ++c) {
                int t = r.at(lead, c);
                r.set(lead, c, r.at(piv, c));
                r.set(piv, c, t);
            }
        const int scale = f.inv(r.at(lead, col));
        for (int c = 0; c < r.cols(); ++c) r.set(lead, c, f.mul(r.at(lead, c), scale));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            const int factor = r.at(i, col);
            if (factor == 0) continue;
            for (int c = 0; c < r.cols(); ++c)
                r.set(i, c, f.sub(r.at(i, c), f.mul(factor, r.at(lead, c))));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {r, (int)pivots.size(), pivots};
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivots) is_pivot[c] = true;

    Matrix basis(m.field_ptr(), m.cols() - rr.rank, m.cols());
    int bi = 0;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.set(bi, free, 1);
        for (int r = 0; r < rr.rank; ++r) basis.set(bi, rr.pivots[r], f.neg(rr.m.at(r, free)));
        ++bi;
    }
    return basis;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    const Field& f = a.field();
    Matrix r(a.field_ptr(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, f.add(r.at(i, j), f.mul(aik, b.at(k, j))));
        }
    return r;
}

std::vector<int> mat_vec(const Matrix& m, const std::vector<int>& v) {
    if ((int)v.size() != m.cols()) throw InputError("matrix-vector dimension mismatch");
    const Field& f = m.field();
    std::vector<int> r(m.rows(), 0);
    for (int j = 0; j < m.cols(); ++j) {
        if (v[j] == 0) continue;
        for (int i = 0; i < m.rows(); ++i) r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
    }
    return r;
}

Matrix col_select(const Matrix& m, const std::vector<int>& cols) {
    Matrix r(m.field_ptr(), m.rows(), (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= m.cols()) throw InputError("column index out of range");
        for (int i = 0; i < m.rows(); ++i) r.set(i, j, m.at(i, cols[j]));
    }
    return r;
}

Matrix h_concat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw InputError("h_concat row mismatch");
    Matrix r(a.field_ptr(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Matrix v_concat(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw InputError("v_concat column mismatch");
    Matrix r(a.field_ptr(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
        for (int i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
    }
    return r;
}

Matrix mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
    RrefResult rr = rref(h_concat(m, Matrix::identity(m.field_ptr(), m.rows())));
    if (rr.rank < m.rows()) throw InputError("matrix is singular");
    Matrix inv(m.field_ptr(), m.rows(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) inv.set(i, j, rr.m.at(i, m.cols() + j));
    return inv;
}

std::pair<std::vector<int>, int> proj_normalize(const Field& f, const std::vector<int>& v) {
    int lead = 0;
    for (int x : v) {
        if (x != 0) {
            lead = x;
            break;
        }
    }
    if (lead == 0) throw InputError("projective normalization of the zero vector");
    const int s = f.inv(lead);
    std::vector<int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = f.mul(v[i], s);
    return {w, lead};
}

long long vec_key(const Field& f, const std::vector<int>& v) {
    long long key = 0;
    for (int x : v) {
        if (key > ((long long)1 << 62) / f.q()) throw InputError("vector key overflow");
        key = key * f.q() + x;
    }
    return key;
}

std::vector<int> vec_from_key(const Field& f, int len, long long key) {
    std::vector<int> v(len);
    for (int i = len - 1; i >= 0; --i) {
        v[i] = (int)(key % f.q());
        key /= f.q();
    }
    return v;
}

std::vector<int> scaled(const Field& f, const std::vector<int>& v, int lambda) {
    std::vector<int> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = f.mul(v[i], lambda);
    return r;
}

std::vector<int> vec_add(const Field& f, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw InputError("vector addition dimension mismatch");
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

} // namespace crcodes
