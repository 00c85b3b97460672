#include "crcodes/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "crcodes/errors.hpp"

namespace crcodes {

std::string family_name(Family f) {
    switch (f) {
        case Family::hamming: return "hamming";
        case Family::b: return "b";
        case Family::a: return "a";
        case Family::c: return "c";
    }
    throw InternalError("unknown family");
}

Family family_from_name(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back((char)std::tolower((unsigned char)c));
    if (s == "hamming" || s == "h") return Family::hamming;
    if (s == "b") return Family::b;
    if (s == "a") return Family::a;
    if (s == "c") return Family::c;
    throw InputError("unknown family '" + name + "' (expected hamming, b, a or c)");
}

std::pair<int, int> prime_power_decompose(int q) {
    if (q < 2) throw InputError("q must be a prime power >= 2");
    int p = q;
    for (int d = 2; (long long)d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int s = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    return {p, s};
}

namespace {

// all rn (or however many) columns must be pairwise projectively distinct
void check_projectively_distinct(const Field& f, const Matrix& m, const char* what) {
    std::unordered_set<long long> seen;
    for (int j = 0; j < m.cols(); ++j) {
        auto [w, s] = proj_normalize(f, m.col(j));
        (void)s;
        if (!seen.insert(vec_key(f, w)).second)
            throw InternalError(std::string(what) + ": columns are not projectively distinct");
    }
}

// canonical projective representatives of F_q^len, in canonical order
std::vector<std::vector<int>> canonical_points(const Field& f, int len) {
    long long total = 1;
    for (int i = 0; i < len; ++i) total *= f.q();
    std::vector<std::vector<int>> pts;
    for (long long key = 1; key < total; ++key) {
        std::vector<int> v = vec_from_key(f, len, key);
        int lead = 0;
        for (int x : v)
            if (x != 0) {
                lead = x;
                break;
            }
        if (lead == 1) pts.push_back(std::move(v));
    }
    return pts;
}

Matrix columns_to_matrix(const FieldPtr& f, const std::vector<std::vector<int>>& cols) {
    if (cols.empty()) throw InternalError("empty column list");
    Matrix m(f, (int)cols[0].size(), (int)cols.size());
    for (int j = 0; j < (int)cols.size(); ++j)
        for (int i = 0; i < (int)cols[0].size(); ++i) m.set(i, j, cols[j][i]);
    return m;
}

// stacked column (top; bottom) built from the field labels of H's columns:
// top = label * top_mult, bottom = label * bottom_mult (0 mult = zero half)
Matrix stacked_blocks(const ExtContext& ctx, const HammingH& ham,
                      const std::vector<std::pair<int, int>>& block_mults) {
    const int m = ctx.t;
    const int n = (int)ham.labels.size();
    std::vector<std::vector<int>> cols;
    cols.reserve(block_mults.size() * n);
    for (auto [tm, bm] : block_mults) {
        for (int c = 0; c < n; ++c) {
            std::vector<int> v(2 * m, 0);
            if (tm != 0) {
                std::vector<int> top = elem_to_vec(ctx, ctx.ext->mul(ham.labels[c], tm));
                std::copy(top.begin(), top.end(), v.begin());
            }
            if (bm != 0) {
                std::vector<int> bot = elem_to_vec(ctx, ctx.ext->mul(ham.labels[c], bm));
                std::copy(bot.begin(), bot.end(), v.begin() + m);
            }
            cols.push_back(std::move(v));
        }
    }
    return columns_to_matrix(ctx.base, cols);
}

} // namespace

HammingH hamming_parity_check(const ExtContext& ctx) {
    if (ctx.t < 2) throw InputError("Hamming construction needs m >= 2");
    const Field& base = *ctx.base;
    const Field& ext = *ctx.ext;
    const long long n = ctx.n;

    HammingH ham{Matrix(ctx.base, ctx.t, (int)n), {}, false};
    ham.cyclic = std::gcd(n, (long long)(base.q() - 1)) == 1;

    if (ham.cyclic) {
        // column i = coordinates of xi^i; these cover every projective point
        int cur = 1;
        for (int i = 0; i < n; ++i) {
            ham.labels.push_back(cur);
            std::vector<int> v = elem_to_vec(ctx, cur);
            for (int r = 0; r < ctx.t; ++r) ham.h.set(r, i, v[r]);
            cur = ext.mul(cur, ctx.xi);
        }
    } else {
        const auto pts = canonical_points(base, ctx.t);
        if ((long long)pts.size() != n) throw InternalError("projective point count mismatch");
        for (int i = 0; i < n; ++i) {
            for (int r = 0; r < ctx.t; ++r) ham.h.set(r, i, pts[i][r]);
            ham.labels.push_back(vec_to_elem(ctx, pts[i]));
        }
    }

    check_projectively_distinct(base, ham.h, "hamming_parity_check");
    return ham;
}

Matrix mult_matrix(const ExtContext& ctx, int c) {
    Matrix m(ctx.base, ctx.t, ctx.t);
    for (int k = 0; k < ctx.t; ++k) {
        std::vector<int> col = elem_to_vec(ctx, ctx.ext->mul(c, ctx.ext->exp(k)));
        for (int r = 0; r < ctx.t; ++r) m.set(r, k, col[r]);
    }
    return m;
}

Matrix hb_matrix(const ExtContext& ctx, const HammingH& ham, int r) {
    if (r < 1 || r > ctx.n)
        throw InputError("family b requires 1 <= r <= n = " + std::to_string(ctx.n));
    std::vector<std::pair<int, int>> mults;
    for (int j = 1; j <= r; ++j) mults.emplace_back(1, ctx.ext->pow(ctx.xi, j));
    Matrix h = stacked_blocks(ctx, ham, mults);
    check_projectively_distinct(*ctx.base, h, "hb_matrix");
    return h;
}

Matrix ha_matrix(const ExtContext& ctx, const HammingH& ham, int r) {
    if (r == ctx.n)
        throw InputError("family a rejects r = n = " + std::to_string(ctx.n) +
                         ": the blocks [H;H] and [H;H_n] would be pairs of linearly dependent columns");
    if (r < -2 || r > ctx.n - 1)
        throw InputError("family a requires -2 <= r <= n-1 = " + std::to_string(ctx.n - 1));
    std::vector<std::pair<int, int>> mults;
    mults.emplace_back(1, 0);                    // [H ; O]
    if (r >= -1) mults.emplace_back(0, 1);       // [O ; H]
    if (r >= 0) mults.emplace_back(1, 1);        // [H ; H]
    for (int j = 1; j <= r; ++j) mults.emplace_back(1, ctx.ext->pow(ctx.xi, j));
    Matrix h = stacked_blocks(ctx, ham, mults);
    check_projectively_distinct(*ctx.base, h, "ha_matrix");
    return h;
}

std::pair<Matrix, Matrix> h2m_split(const ExtContext& ctx, const HammingH& ham, int r) {
    if (r < 1 || r > ctx.n)
        throw InputError("the supplementary split is defined here for 1 <= r <= n = " + std::to_string(ctx.n) +
                         " only: beyond n the left part is no longer the Construction-I matrix");
    const Field& base = *ctx.base;
    Matrix hb = hb_matrix(ctx, ham, r);

    std::unordered_set<long long> used;
    for (int j = 0; j < hb.cols(); ++j) {
        auto [w, s] = proj_normalize(base, hb.col(j));
        (void)s;
        if (!used.insert(vec_key(base, w)).second) throw InternalError("h2m_split: duplicate class in H_b");
    }

    std::vector<std::vector<int>> rest;
    for (auto& pt : canonical_points(base, 2 * ctx.t))
        if (!used.count(vec_key(base, pt))) rest.push_back(pt);

    long long total = 1;
    for (int i = 0; i < 2 * ctx.t; ++i) total *= base.q();
    const long long points = (total - 1) / (base.q() - 1);
    if ((long long)rest.size() + hb.cols() != points)
        throw InternalError("h2m_split: parts do not partition the projective points");

    return {hb, columns_to_matrix(ctx.base, rest)};
}

Matrix hb_normal_transform(const ExtContext& ctx, int r) {
    const Field& ext = *ctx.ext;
    const int xi = ctx.xi;
    const int xi2 = ext.mul(xi, xi);
    int x, y, z, w;
    if (r == 2) {
        // [ -xi^2  1 ; -xi  1 ] sends blocks (v, xi v), (v, xi^2 v) to
        // ((xi - xi^2) v, 0), (0, (xi^2 - xi) v)
        x = ext.neg(xi2);
        y = 1;
        z = ext.neg(xi);
        w = 1;
    } else if (r == 3) {
        // lambda scales the top rows so the third block becomes diagonal
        const int lambda = ext.div(ext.add(xi, 1), xi);
        x = ext.neg(ext.mul(lambda, xi2));
        y = lambda;
        z = ext.neg(xi);
        w = 1;
    } else {
        throw InputError("hb_normal_transform is defined for r in {2, 3}");
    }
    Matrix top = h_concat(mult_matrix(ctx, x), mult_matrix(ctx, y));
    Matrix bottom = h_concat(mult_matrix(ctx, z), mult_matrix(ctx, w));
    Matrix t = v_concat(top, bottom);
    if (rank(t) != 2 * ctx.t) throw InternalError("hb_normal_transform: transform is singular");
    return t;
}

ScaleEquivalence equiv_scale_transform(const ExtContext& ctx, const HammingH& ham, int i, int j) {
    if (i < 1 || j < 1 || i + j > ctx.n)
        throw InputError("equiv_scale_transform requires i >= 1, j >= 1, i + j <= n");

    std::vector<std::pair<int, int>> mults;
    for (int k = i; k <= i + j - 1; ++k) mults.emplace_back(1, ctx.ext->pow(ctx.xi, k));
    ScaleEquivalence eq{stacked_blocks(ctx, ham, mults), hb_matrix(ctx, ham, j),
                        Matrix(ctx.base, 2 * ctx.t, 2 * ctx.t), {}, false, false};

    Matrix ident = Matrix::identity(ctx.base, ctx.t);
    Matrix zero(ctx.base, ctx.t, ctx.t);
    eq.transform = v_concat(h_concat(ident, zero),
                            h_concat(zero, mult_matrix(ctx, ctx.ext->pow(ctx.xi, i - 1))));

    Matrix transformed = mat_mul(eq.transform, eq.base);
    eq.columns_match = (transformed == eq.shifted);
    eq.column_map.resize(eq.base.cols());
    std::iota(eq.column_map.begin(), eq.column_map.end(), 0);
    eq.row_spaces_equal = (rref(eq.shifted).m == rref(eq.base).m);
    if (!eq.columns_match || !eq.row_spaces_equal)
        throw InternalError("equiv_scale_transform: transform does not carry H_b(j) onto the shifted blocks");
    return eq;
}

std::vector<std::string> Construction::provenance_comments() const {
    std::vector<std::string> c;
    c.push_back("family=" + family_name(spec.family) + " q=" + std::to_string(spec.q) + " m=" +
                std::to_string(spec.m) + " r=" + std::to_string(spec.r) + " n=" + std::to_string(n));
    c.push_back("primitive_polynomial_code=" + std::to_string(ctx.base->modulus_code()) +
                " cyclic_hamming=" + (ham.cyclic ? std::string("1") : std::string("0")));
    if (!ham.cyclic)
        c.push_back("note: gcd(n, q-1) != 1, canonical-representative Hamming matrix; block "
                    "matrices H_i are defined by field multiplication of the column labels");
    return c;
}

Construction build_construction(const ConstructionSpec& spec) {
    auto [p, s] = prime_power_decompose(spec.q);
    if (spec.m < 2) throw InputError("constructions require m >= 2");
    ExtContext ctx = ext_context(field_new(p, s), spec.m);
    HammingH ham = hamming_parity_check(ctx);

    Construction con{spec, ctx, ham, ham.h, std::nullopt, ctx.n};
    switch (spec.family) {
        case Family::hamming:
            con.h = ham.h;
            break;
        case Family::b:
            con.h = hb_matrix(ctx, ham, spec.r);
            con.block_structure = BlockStructure{(int)ctx.n, spec.r};
            break;
        case Family::a:
            con.h = ha_matrix(ctx, ham, spec.r);
            con.block_structure = BlockStructure{(int)ctx.n, spec.r + 3};
            break;
        case Family::c:
            con.h = h2m_split(ctx, ham, spec.r).second;
            break;
    }
    return con;
}

} // namespace crcodes
