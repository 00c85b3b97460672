#include "crcodes/codes.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

constexpr long long syndrome_space_guard = 1 << 24;

} // namespace

LinearCode code_from_parity_check(const Matrix& h, std::optional<BlockStructure> blocks) {
    if (h.is_zero()) throw InputError("parity-check matrix is zero");
    for (int j = 0; j < h.cols(); ++j) {
        bool zero = true;
        for (int i = 0; i < h.rows() && zero; ++i) zero = (h.at(i, j) == 0);
        if (zero) throw InputError("parity-check matrix has a zero column (column " + std::to_string(j) + ")");
    }
    if (blocks) {
        if (blocks->n <= 0 || blocks->r <= 0 || blocks->n * blocks->r != h.cols())
            throw InputError("block structure does not partition the coordinates");
    }

    RrefResult rr = rref(h);
    Matrix reduced = h;
    if (rr.rank < h.rows()) {
        // drop dependent rows; keep the canonical rref basis of the row space
        Matrix basis(h.field_ptr(), rr.rank, h.cols());
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < h.cols(); ++j) basis.set(i, j, rr.m.at(i, j));
        reduced = basis;
    }
    return LinearCode(h.field_ptr(), h, reduced, blocks);
}

std::optional<int> min_distance(const LinearCode& c, int limit) {
    if (limit < 1) throw InputError("min_distance limit must be >= 1");
    const Field& f = c.field();
    const Matrix& h = c.parity_check();
    const int n = c.length();

    // w = 2: two columns in the same projective class.
    std::unordered_set<long long> classes;
    bool repeat = false;
    for (int j = 0; j < n; ++j) {
        auto [w, s] = proj_normalize(f, h.col(j));
        (void)s;
        if (!classes.insert(vec_key(f, w)).second) repeat = true;
    }
    if (repeat) return limit >= 2 ? std::optional<int>(2) : std::nullopt;

    // w >= 3: no smaller dependency exists, so every (w-1)-subset is
    // independent and it suffices to find a w-subset of rank w-1.
    for (int w = 3; w <= limit; ++w) {
        std::vector<int> idx(w);
        // iterate over all w-subsets of columns
        for (int i = 0; i < w; ++i) idx[i] = i;
        if (w > n) break;
        while (true) {
            Matrix sub = col_select(h, idx);
            if (rank(sub) < w) return w;
            int i = w - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

SyndromeSpace::SyndromeSpace(const Field& f, int dim) : q_(f.q()), p_(f.p()), dim_(dim) {
    size_ = 1;
    for (int i = 0; i < dim; ++i) {
        size_ *= q_;
        if (size_ > syndrome_space_guard)
            throw InputError("syndrome space guard exceeded: q^rank must be <= 2^24");
    }
}

long long SyndromeSpace::add(long long a, long long b) const {
    if (p_ == 2) return a ^ b;
    // componentwise field addition == digitwise addition mod p of the codes
    long long r = 0, w = 1;
    while (a != 0 || b != 0) {
        r += (a % p_ + b % p_) % p_ * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

long long SyndromeSpace::from_vec(const std::vector<int>& v) const {
    long long s = 0, w = 1;
    for (int i = 0; i < dim_; ++i) {
        s += (long long)v[i] * w;
        w *= q_;
    }
    return s;
}

std::vector<int> SyndromeSpace::to_vec(long long s) const {
    std::vector<int> v(dim_);
    for (int i = 0; i < dim_; ++i) {
        v[i] = (int)(s % q_);
        s /= q_;
    }
    return v;
}

namespace {

// Syndrome codes of alpha * h_i for every column i and alpha in F_q*.
std::vector<long long> column_syndromes(const LinearCode& c, const SyndromeSpace& ss) {
    const Field& f = c.field();
    const Matrix& h = c.parity_check();
    std::vector<long long> out;
    out.reserve((size_t)c.length() * (f.q() - 1));
    for (int j = 0; j < c.length(); ++j) {
        std::vector<int> col = h.col(j);
        for (int alpha = 1; alpha < f.q(); ++alpha) out.push_back(ss.from_vec(scaled(f, col, alpha)));
    }
    return out;
}

} // namespace

CosetTable coset_table(const LinearCode& c) {
    SyndromeSpace ss(c.field(), c.redundancy());
    const std::vector<long long> edges = column_syndromes(c, ss);

    CosetTable t;
    t.weights.assign(ss.size(), -1);
    t.weights[0] = 0;
    std::deque<long long> frontier{0};
    long long seen = 1;
    t.level_sizes.push_back(1);

    while (!frontier.empty()) {
        std::deque<long long> next;
        long long count = 0;
        for (long long s : frontier) {
            const int8_t w = t.weights[s];
            for (long long e : edges) {
                const long long u = ss.add(s, e);
                if (t.weights[u] == -1) {
                    t.weights[u] = (int8_t)(w + 1);
                    next.push_back(u);
                    ++count;
                }
            }
        }
        if (count > 0) t.level_sizes.push_back(count);
        seen += count;
        frontier = std::move(next);
    }
    if (seen != ss.size()) throw InternalError("syndrome BFS did not reach the whole space");
    t.rho = (int)t.level_sizes.size() - 1;
    return t;
}

IntersectionData intersection_data(const LinearCode& c, const CosetTable& t) {
    SyndromeSpace ss(c.field(), c.redundancy());
    const std::vector<long long> edges = column_syndromes(c, ss);
    const long long degree = (long long)c.length() * (c.field().q() - 1);

    IntersectionData d;
    d.regular = true;
    std::vector<long long> down(t.rho + 1, -1), up(t.rho + 1, -1), witness(t.rho + 1, -1);

    for (long long s = 0; s < ss.size(); ++s) {
        const int w = t.weights[s];
        long long cs = 0, bs = 0;
        for (long long e : edges) {
            const int wu = t.weights[ss.add(s, e)];
            if (wu == w - 1) ++cs;
            else if (wu == w + 1) ++bs;
        }
        if (down[w] == -1) {
            down[w] = cs;
            up[w] = bs;
            witness[w] = s;
        } else if (down[w] != cs || up[w] != bs) {
            d.regular = false;
            d.refutation = RegularityRefutation{w, witness[w], s, down[w], up[w], cs, bs};
            return d;
        }
    }

    d.levels.resize(t.rho + 1);
    for (int l = 0; l <= t.rho; ++l) {
        d.levels[l].c = down[l];
        d.levels[l].b = up[l];
        d.levels[l].a = degree - down[l] - up[l];
    }
    for (int l = 0; l < t.rho; ++l) d.ia_b.push_back(d.levels[l].b);
    for (int l = 1; l <= t.rho; ++l) d.ia_c.push_back(d.levels[l].c);
    return d;
}

std::pair<bool, IntersectionData> is_completely_regular(const LinearCode& c) {
    CosetTable t = coset_table(c);
    IntersectionData d = intersection_data(c, t);
    return {d.regular, d};
}

Weight2Witnesses weight2_witnesses(const LinearCode& b3) {
    if (!b3.blocks() || b3.blocks()->r != 3)
        throw InputError("weight2_witnesses: block structure missing or not a three-block code");
    const Field& f = b3.field();
    const FieldPtr fp = b3.field_ptr();
    const Matrix& orig = b3.original_parity_check();
    if (orig.rows() % 2 != 0) throw InputError("weight2_witnesses: expected a 2m-row parity check");
    const int m = orig.rows() / 2;
    const int n = b3.blocks()->n;

    // Construction-I layout check: the top m rows repeat the Hamming matrix
    // across all three blocks.
    for (int j = 1; j < 3; ++j)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c)
                if (orig.at(r, j * n + c) != orig.at(r, c))
                    throw InputError("weight2_witnesses: top rows are not block-replicated");

    Matrix h(fp, m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) h.set(r, c, orig.at(r, c));
    Matrix zero(fp, m, n);

    // the paper's presentation of the code: [H|O|H ; O|H|H]
    Matrix top = h_concat(h_concat(h, zero), h);
    Matrix bottom = h_concat(h_concat(zero, h), h);
    LinearCode pres = code_from_parity_check(v_concat(top, bottom), BlockStructure{n, 3});

    CosetTable t = coset_table(pres);
    SyndromeSpace ss(f, pres.redundancy());
    const Matrix& hp = pres.parity_check();

    Weight2Witnesses out{pres, {}, {}};
    std::unordered_set<long long> seen;
    for (int i = 0; i < n; ++i) {
        for (int alpha = 1; alpha < f.q(); ++alpha) {
            for (int j = 0; j < n; ++j) {
                if (i == j && alpha == 1) continue;
                std::vector<int> x(3 * n, 0);
                x[i] = alpha;
                x[n + j] = 1;
                std::vector<int> syn = vec_add(f, scaled(f, hp.col(i), alpha), hp.col(n + j));
                const long long s = ss.from_vec(syn);
                if (t.weights[s] != 2)
                    throw InternalError("weight2_witnesses: witness vector is not at distance 2");
                if (!seen.insert(s).second)
                    throw InternalError("weight2_witnesses: two witness vectors share a coset");
                out.vectors.push_back(std::move(x));
                out.syndromes.push_back(s);
            }
        }
    }
    return out;
}

} // namespace crcodes
