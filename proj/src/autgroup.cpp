#include "crcodes/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

constexpr long long monomial_degree_guard = 256; // N(q-1) cap for the exact search

std::string pack_map(const MonomialMap& m) {
    std::string s;
    s.reserve(m.perm.size() * 4);
    for (size_t i = 0; i < m.perm.size(); ++i) {
        s.push_back((char)(m.perm[i] & 0xff));
        s.push_back((char)((m.perm[i] >> 8) & 0xff));
        s.push_back((char)(m.scales[i] & 0xff));
        s.push_back((char)((m.scales[i] >> 8) & 0xff));
    }
    return s;
}

} // namespace

MonomialMap MonomialMap::identity(int n) {
    MonomialMap m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.scales.assign(n, 1);
    return m;
}

MonomialMap compose(const Field& f, const MonomialMap& a, const MonomialMap& b) {
    if (a.size() != b.size()) throw InputError("monomial composition size mismatch");
    MonomialMap r;
    r.perm.resize(a.size());
    r.scales.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
        r.perm[i] = b.perm[a.perm[i]];
        r.scales[i] = f.mul(a.scales[i], b.scales[a.perm[i]]);
    }
    return r;
}

MonomialMap inverse(const Field& f, const MonomialMap& a) {
    MonomialMap r;
    r.perm.resize(a.size());
    r.scales.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
        r.perm[a.perm[i]] = i;
        r.scales[a.perm[i]] = f.inv(a.scales[i]);
    }
    return r;
}

std::vector<int> apply_monomial(const Field& f, const MonomialMap& m, const std::vector<int>& x) {
    if ((int)x.size() != m.size()) throw InputError("monomial application size mismatch");
    std::vector<int> y(x.size(), 0);
    for (int i = 0; i < m.size(); ++i) y[m.perm[i]] = f.mul(m.scales[i], x[i]);
    return y;
}

std::optional<Matrix> automorphism_lift(const LinearCode& c, const MonomialMap& m) {
    const Field& f = c.field();
    const Matrix& h = c.parity_check();
    const int n = c.length();
    if (m.size() != n) throw InputError("monomial map has wrong length");
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) {
        if (m.perm[i] < 0 || m.perm[i] >= n || hit[m.perm[i]]) throw InputError("perm is not a permutation");
        hit[m.perm[i]] = 1;
        if (m.scales[i] <= 0 || m.scales[i] >= f.q()) throw InputError("scale is not a nonzero field element");
    }

    Matrix hm(c.field_ptr(), h.rows(), n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> col = scaled(f, h.col(m.perm[i]), m.scales[i]);
        for (int r = 0; r < h.rows(); ++r) hm.set(r, i, col[r]);
    }

    const std::vector<int> pivots = rref(h).pivots;
    Matrix s = mat_mul(col_select(hm, pivots), mat_inverse(col_select(h, pivots)));
    if (mat_mul(s, h) != hm) return std::nullopt;
    return s;
}

// ---------------------------------------------------------------------------
// exact backtracking search over syndrome-space lifts

namespace {

struct ColumnModel {
    const LinearCode* code = nullptr;
    int rows = 0, n = 0;
    std::vector<std::vector<int>> cols;
    std::vector<int> norm_scale; // cols[j] = norm_scale[j] * normalized rep
    std::unordered_map<long long, int> class_of;
    std::vector<std::vector<std::pair<int, int>>> triples; // partner pairs
    std::vector<int> color;
};

ColumnModel make_model(const LinearCode& c, const char* who) {
    const Field& f = c.field();
    ColumnModel m;
    m.code = &c;
    m.rows = c.redundancy();
    m.n = c.length();
    if ((long long)m.n * (f.q() - 1) > monomial_degree_guard)
        throw InputError(std::string(who) + ": N(q-1) exceeds the exact-search guard");
    for (int j = 0; j < m.n; ++j) {
        m.cols.push_back(c.parity_check().col(j));
        auto [w, sc] = proj_normalize(f, m.cols.back());
        m.norm_scale.push_back(sc);
        if (!m.class_of.emplace(vec_key(f, w), j).second)
            throw InputError(std::string(who) +
                             ": columns must be pairwise projectively distinct for the exact search");
    }

    // dependent projective triples {i, j, k}: k's class appears in the span
    // of columns i and j
    m.triples.assign(m.n, {});
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            for (int lam = 1; lam < f.q(); ++lam) {
                std::vector<int> v = vec_add(f, m.cols[i], scaled(f, m.cols[j], lam));
                bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
                if (zero) continue;
                auto [w, sc] = proj_normalize(f, v);
                (void)sc;
                auto it = m.class_of.find(vec_key(f, w));
                if (it == m.class_of.end() || it->second <= j) continue;
                const int k = it->second;
                m.triples[i].emplace_back(j, k);
                m.triples[j].emplace_back(i, k);
                m.triples[k].emplace_back(i, j);
            }
    return m;
}

// Weisfeiler-Lehman-style refinement of column colors over the dependent
// triple structure; run jointly so colors are comparable across two codes.
void refine_colors(std::vector<ColumnModel*> models, int rounds = 2) {
    for (ColumnModel* m : models) {
        m->color.resize(m->n);
        for (int i = 0; i < m->n; ++i) m->color[i] = (int)m->triples[i].size();
    }
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::vector<std::vector<int>>> sigs;
        std::vector<std::vector<int>> flat;
        for (ColumnModel* m : models) {
            sigs.emplace_back();
            for (int i = 0; i < m->n; ++i) {
                std::vector<int> sig{m->color[i]};
                std::vector<std::pair<int, int>> partners;
                for (auto [x, y] : m->triples[i])
                    partners.emplace_back(std::min(m->color[x], m->color[y]),
                                          std::max(m->color[x], m->color[y]));
                std::sort(partners.begin(), partners.end());
                for (auto [a, b] : partners) {
                    sig.push_back(a);
                    sig.push_back(b);
                }
                sigs.back().push_back(sig);
                flat.push_back(sig);
            }
        }
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        size_t mi = 0;
        for (ColumnModel* m : models) {
            for (int i = 0; i < m->n; ++i)
                m->color[i] =
                    (int)(std::lower_bound(flat.begin(), flat.end(), sigs[mi][i]) - flat.begin());
            ++mi;
        }
    }
}

// Incremental Gaussian elimination used to reject singular partial lifts.
struct RankTracker {
    const Field* f;
    std::vector<std::vector<int>> reduced;
    std::vector<int> pivot_pos;

    bool try_add(std::vector<int> v) {
        for (size_t k = 0; k < reduced.size(); ++k) {
            const int x = v[pivot_pos[k]];
            if (x != 0) v = vec_add(*f, v, scaled(*f, reduced[k], f->neg(x)));
        }
        int pos = -1;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                pos = (int)i;
                break;
            }
        if (pos < 0) return false;
        const int s = f->inv(v[pos]);
        reduced.push_back(scaled(*f, v, s));
        pivot_pos.push_back(pos);
        return true;
    }
    void pop() {
        reduced.pop_back();
        pivot_pos.pop_back();
    }
};

struct SearchResultSink {
    // return false to stop the search
    std::function<bool(const MonomialMap&, const Matrix&)> emit;
};

class MonomialSearch {
  public:
    MonomialSearch(const ColumnModel& from, const ColumnModel& to, long long max_nodes,
                   const std::vector<int>& column_order)
        : f_(from.code->field()), from_(from), to_(to), max_nodes_(max_nodes) {
        const int rows = from.rows;
        std::vector<int> order(from.n);
        std::iota(order.begin(), order.end(), 0);
        if (!column_order.empty()) {
            if ((int)column_order.size() != from.n) throw InputError("column_order has wrong length");
            order = column_order;
        }

        // greedy basis: earliest projectively independent columns in `order`
        RankTracker tracker{&f_, {}, {}};
        for (int c : order) {
            if ((int)basis_.size() == rows) break;
            if (tracker.try_add(from.cols[c])) basis_.push_back(c);
        }
        if ((int)basis_.size() != rows) throw InputError("parity check does not have full row rank");

        Matrix b(from.code->field_ptr(), rows, rows);
        for (int t = 0; t < rows; ++t)
            for (int r = 0; r < rows; ++r) b.set(r, t, from.cols[basis_[t]][r]);
        binv_ = std::make_unique<Matrix>(mat_inverse(b));

        coords_.resize(from.n);
        by_level_.assign(rows + 1, {});
        for (int c = 0; c < from.n; ++c) {
            coords_[c] = mat_vec(*binv_, from.cols[c]);
            int level = 0;
            for (int t = 0; t < rows; ++t)
                if (coords_[c][t] != 0) level = t + 1;
            by_level_[level].push_back(c);
        }
        if (!by_level_[0].empty()) throw InternalError("column with empty basis support");
    }

    long long nodes() const { return nodes_; }

    void run(const SearchResultSink& sink) {
        img_.assign(basis_.size(), {});
        assigned_to_.assign(from_.n, -1);
        assigned_scale_.assign(from_.n, 0);
        used_.assign(to_.n, 0);
        rank_ = RankTracker{&f_, {}, {}};
        stopped_ = false;
        descend(0, sink);
    }

  private:
    bool check_level_columns(int level, std::vector<int>& trail) {
        for (int c : by_level_[level]) {
            std::vector<int> v(from_.rows, 0);
            for (int t = 0; t < level; ++t) {
                const int g = coords_[c][t];
                if (g != 0) v = vec_add(f_, v, scaled(f_, img_[t], g));
            }
            auto [w, sc] = proj_normalize(f_, v);
            auto it = to_.class_of.find(vec_key(f_, w));
            if (it == to_.class_of.end()) return false;
            const int j = it->second;
            if (used_[j] || to_.color[j] != from_.color[c]) return false;
            used_[j] = 1;
            assigned_to_[c] = j;
            assigned_scale_[c] = f_.mul(sc, f_.inv(to_.norm_scale[j]));
            trail.push_back(c);
        }
        return true;
    }

    void unwind(std::vector<int>& trail) {
        for (int c : trail) {
            used_[assigned_to_[c]] = 0;
            assigned_to_[c] = -1;
        }
        trail.clear();
    }

    void descend(int level, const SearchResultSink& sink) {
        if (stopped_) return;
        const int rows = from_.rows;
        if (level == rows) {
            Matrix img_mat(from_.code->field_ptr(), rows, rows);
            for (int t = 0; t < rows; ++t)
                for (int r = 0; r < rows; ++r) img_mat.set(r, t, img_[t][r]);
            Matrix s = mat_mul(img_mat, *binv_);
            MonomialMap m{assigned_to_, assigned_scale_};
            if (!sink.emit(m, s)) stopped_ = true;
            return;
        }

        const int bcol = basis_[level];
        for (int j = 0; j < to_.n && !stopped_; ++j) {
            if (used_[j] || to_.color[j] != from_.color[bcol]) continue;
            for (int lam = 1; lam < f_.q() && !stopped_; ++lam) {
                if (++nodes_ > max_nodes_) throw BudgetExceeded("monomial search node budget exhausted");
                img_[level] = scaled(f_, to_.cols[j], lam);
                if (!rank_.try_add(img_[level])) continue;
                std::vector<int> trail;
                if (check_level_columns(level + 1, trail)) descend(level + 1, sink);
                unwind(trail);
                rank_.pop();
            }
        }
    }

    const Field& f_;
    const ColumnModel& from_;
    const ColumnModel& to_;
    long long max_nodes_;
    long long nodes_ = 0;
    std::vector<int> basis_;
    std::unique_ptr<Matrix> binv_;
    std::vector<std::vector<int>> coords_;
    std::vector<std::vector<int>> by_level_;
    std::vector<std::vector<int>> img_;
    std::vector<int> assigned_to_, assigned_scale_;
    std::vector<char> used_;
    RankTracker rank_{nullptr, {}, {}};
    bool stopped_ = false;
};

} // namespace

AutGroupResult maut_search(const LinearCode& c, const SearchBudget& budget,
                           const std::vector<int>& column_order) {
    ColumnModel model = make_model(c, "maut_search");
    refine_colors({&model});

    AutGroupResult res;
    std::vector<MonomialMap> elements;
    bool over_budget = false;
    MonomialSearch search(model, model, budget.max_nodes, column_order);
    SearchResultSink sink;
    sink.emit = [&](const MonomialMap& m, const Matrix&) {
        elements.push_back(m);
        if ((long long)elements.size() > budget.max_elements) {
            over_budget = true;
            return false;
        }
        return true;
    };
    try {
        search.run(sink);
    } catch (const BudgetExceeded&) {
        over_budget = true;
    }
    res.nodes_visited = search.nodes();
    res.order = elements.size();
    if (over_budget) {
        res.complete = false;
        return res;
    }
    res.complete = true;

    const MonomialMap ident = MonomialMap::identity(c.length());
    if (std::find(elements.begin(), elements.end(), ident) == elements.end())
        throw InternalError("maut_search: identity not found");

    for (const MonomialMap& g : reduce_generators(c.field(), elements)) {
        auto lift = automorphism_lift(c, g);
        if (!lift) throw InternalError("maut_search: found element fails verification");
        res.generators.push_back({g, *lift});
    }

    CosetTable t = coset_table(c);
    res.rho = t.rho;
    std::vector<Matrix> lifts;
    for (const auto& g : res.generators) lifts.push_back(g.lift);
    res.orbits = orbits_on_cosets(c, lifts, t);
    res.ct = (res.orbits.count == t.rho + 1);
    return res;
}

std::vector<Matrix> gl_generators(const FieldPtr& f, int m) {
    std::vector<Matrix> gens;
    Matrix d = Matrix::identity(f, m);
    d.set(0, 0, f->primitive());
    if (f->q() > 2) gens.push_back(d);
    if (m == 1) {
        if (gens.empty()) gens.push_back(Matrix::identity(f, 1));
        return gens;
    }
    Matrix cycle(f, m, m);
    for (int i = 0; i < m; ++i) cycle.set((i + 1) % m, i, 1);
    gens.push_back(cycle);
    Matrix trans = Matrix::identity(f, m);
    trans.set(0, 1, 1);
    gens.push_back(trans);
    return gens;
}

unsigned long long gl_order(int q, int m) {
    unsigned long long qm = 1;
    for (int i = 0; i < m; ++i) qm *= (unsigned long long)q;
    unsigned long long order = 1, qk = 1;
    for (int k = 0; k < m; ++k) {
        order *= qm - qk;
        qk *= (unsigned long long)q;
    }
    return order;
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix za(a.field_ptr(), a.rows(), b.cols());
    Matrix zb(a.field_ptr(), b.rows(), a.cols());
    return v_concat(h_concat(a, za), h_concat(zb, b));
}

Matrix block_antidiag(const Matrix& a, const Matrix& b) {
    Matrix za(a.field_ptr(), a.rows(), b.cols());
    Matrix zb(a.field_ptr(), b.rows(), a.cols());
    return v_concat(h_concat(za, a), h_concat(b, zb));
}

// Induced monomial maps of lifts that permute the column classes of hcols;
// every map is verified against the code before it is returned.
std::vector<MonomialMap> maps_from_schema(const LinearCode& code, const Matrix& hcols,
                                          const std::vector<Matrix>& mats) {
    const Field& f = code.field();
    std::unordered_map<long long, int> class_of;
    std::vector<int> norm_scale(hcols.cols());
    for (int j = 0; j < hcols.cols(); ++j) {
        auto [w, sc] = proj_normalize(f, hcols.col(j));
        norm_scale[j] = sc;
        if (!class_of.emplace(vec_key(f, w), j).second)
            throw InternalError("schema columns are not projectively distinct");
    }

    std::vector<MonomialMap> maps;
    for (const Matrix& s : mats) {
        MonomialMap m;
        m.perm.resize(hcols.cols());
        m.scales.resize(hcols.cols());
        for (int i = 0; i < hcols.cols(); ++i) {
            auto [w, sc] = proj_normalize(f, mat_vec(s, hcols.col(i)));
            auto it = class_of.find(vec_key(f, w));
            if (it == class_of.end())
                throw InternalError("schema lift does not stabilize the column classes");
            m.perm[i] = it->second;
            m.scales[i] = f.mul(sc, f.inv(norm_scale[it->second]));
        }
        if (!is_automorphism(code, m))
            throw InternalError("schema-induced map failed automorphism verification");
        maps.push_back(std::move(m));
    }
    return maps;
}

} // namespace

std::vector<MonomialMap> gl_lift_generators(const Construction& con, Schema schema) {
    const ExtContext& ctx = con.ctx;
    const FieldPtr& base = ctx.base;
    const int m = ctx.t;
    LinearCode code = con.make_code();

    const bool is_b = con.spec.family == Family::b;
    const bool is_a = con.spec.family == Family::a;

    switch (schema) {
        case Schema::gl_single: {
            const int rows = code.redundancy();
            long long total = 1;
            for (int i = 0; i < rows; ++i) total *= base->q();
            if ((long long)code.length() != (total - 1) / (base->q() - 1))
                throw InputError("gl_single schema mismatch: columns do not cover every projective point");
            return maps_from_schema(code, code.parity_check(), gl_generators(base, rows));
        }
        case Schema::b2: {
            Matrix hp = con.h;
            if (is_b && con.spec.r == 2) hp = mat_mul(hb_normal_transform(ctx, 2), con.h);
            else if (!(is_a && con.spec.r == -1))
                throw InputError("b2 schema mismatch: expected family b r=2 or family a r=-1");
            Matrix ident = Matrix::identity(base, m);
            std::vector<Matrix> mats;
            for (const Matrix& g : gl_generators(base, m)) {
                mats.push_back(block_diag(g, ident));
                mats.push_back(block_diag(ident, g));
            }
            mats.push_back(block_antidiag(ident, ident));
            return maps_from_schema(code, hp, mats);
        }
        case Schema::b3: {
            Matrix hp = con.h;
            if (is_b && con.spec.r == 3) hp = mat_mul(hb_normal_transform(ctx, 3), con.h);
            else if (!(is_a && con.spec.r == 0))
                throw InputError("b3 schema mismatch: expected family b r=3 or family a r=0");
            Matrix ident = Matrix::identity(base, m);
            Matrix neg_ident(base, m, m);
            for (int i = 0; i < m; ++i) neg_ident.set(i, i, base->neg(1));
            std::vector<Matrix> mats;
            for (const Matrix& g : gl_generators(base, m)) mats.push_back(block_diag(g, g));
            mats.push_back(block_antidiag(ident, ident));
            Matrix zero(base, m, m);
            mats.push_back(v_concat(h_concat(ident, zero), h_concat(ident, neg_ident)));
            return maps_from_schema(code, hp, mats);
        }
        case Schema::torus_full: {
            if (!(is_b && con.spec.r == ctx.n))
                throw InputError("torus_full schema mismatch: expected family b with r = n");
            Matrix malpha = mult_matrix(ctx, ctx.ext->primitive());
            Matrix mxi = mult_matrix(ctx, ctx.xi);
            Matrix ident = Matrix::identity(base, m);
            std::vector<Matrix> mats{block_diag(malpha, malpha), block_diag(ident, mxi),
                                     block_antidiag(ident, ident)};
            return maps_from_schema(code, con.h, mats);
        }
        case Schema::torus_diag: {
            if (!(is_b && con.spec.r == ctx.n - 1))
                throw InputError("torus_diag schema mismatch: expected family b with r = n-1");
            Matrix malpha = mult_matrix(ctx, ctx.ext->primitive());
            Matrix ident = Matrix::identity(base, m);
            std::vector<Matrix> mats{block_diag(malpha, malpha), block_antidiag(ident, ident)};
            return maps_from_schema(code, con.h, mats);
        }
    }
    throw InternalError("unknown schema");
}

std::vector<MonomialMap> structured_generators(const Construction& con) {
    const long long n = con.n;
    switch (con.spec.family) {
        case Family::hamming:
            return gl_lift_generators(con, Schema::gl_single);
        case Family::b:
            if (con.spec.r == 1) return gl_lift_generators(con, Schema::gl_single);
            if (con.spec.r == 2) return gl_lift_generators(con, Schema::b2);
            if (con.spec.r == 3) return gl_lift_generators(con, Schema::b3);
            if (con.spec.r == n) return gl_lift_generators(con, Schema::torus_full);
            if (con.spec.r == n - 1) return gl_lift_generators(con, Schema::torus_diag);
            return {};
        case Family::a:
            if (con.spec.r == -2) return gl_lift_generators(con, Schema::gl_single);
            if (con.spec.r == -1) return gl_lift_generators(con, Schema::b2);
            if (con.spec.r == 0) return gl_lift_generators(con, Schema::b3);
            return {};
        case Family::c:
            return {};
    }
    return {};
}

OrbitInfo orbits_on_cosets(const LinearCode& c, const std::vector<Matrix>& lifts, const CosetTable& t) {
    SyndromeSpace ss(c.field(), c.redundancy());
    const long long size = ss.size();

    std::vector<int> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (const Matrix& s : lifts) {
        if (s.rows() != c.redundancy() || s.cols() != c.redundancy())
            throw InputError("orbit lift has wrong dimensions");
        for (long long v = 0; v < size; ++v) {
            const long long u = ss.from_vec(mat_vec(s, ss.to_vec(v)));
            if (t.weights[u] != t.weights[v])
                throw InternalError("orbit action does not preserve coset weight");
            int a = find((int)v), b = find((int)u);
            if (a != b) parent[a] = b;
        }
    }

    OrbitInfo info;
    info.orbit_of.assign(size, -1);
    std::unordered_map<int, int> id_of_root;
    for (long long v = 0; v < size; ++v) {
        const int root = find((int)v);
        auto [it, fresh] = id_of_root.emplace(root, (int)id_of_root.size());
        const int id = it->second;
        info.orbit_of[v] = id;
        if (fresh) {
            info.orbit_weight.push_back(t.weights[v]);
            info.orbit_size.push_back(0);
        }
        if (info.orbit_weight[id] != t.weights[v])
            throw InternalError("orbit contains two coset weights");
        ++info.orbit_size[id];
    }
    info.count = (int)id_of_root.size();
    return info;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

CtResult is_completely_transitive(const LinearCode& code, const std::vector<MonomialMap>& structured,
                                  const SearchBudget& budget) {
    CtResult res;
    CosetTable t = coset_table(code);
    res.rho = t.rho;

    if (!structured.empty()) {
        std::vector<Matrix> lifts;
        for (const MonomialMap& m : structured) {
            auto lift = automorphism_lift(code, m);
            if (!lift) throw InternalError("structured generator failed verification");
            lifts.push_back(*lift);
        }
        OrbitInfo orbits = orbits_on_cosets(code, lifts, t);
        if (orbits.count == t.rho + 1) {
            res.verdict = Verdict::yes;
            res.mode = "structured";
            res.orbit_count = orbits.count;
            res.note = "verified subgroup already has rho+1 orbits";
            return res;
        }
    }

    AutGroupResult full = maut_search(code, budget);
    res.mode = "full";
    if (!full.complete) {
        res.verdict = Verdict::unknown;
        res.note = "search budget exhausted after " + std::to_string(full.nodes_visited) + " nodes";
        res.full = std::move(full);
        return res;
    }
    res.verdict = full.ct ? Verdict::yes : Verdict::no;
    res.orbit_count = full.orbits.count;
    res.full = std::move(full);
    return res;
}

CtResult is_completely_transitive(const Construction& con, const SearchBudget& budget) {
    return is_completely_transitive(con.make_code(), structured_generators(con), budget);
}

BoundCheck ct_necessary_bound(long long n, int q, int r, unsigned long long maut_order) {
    BoundCheck b;
    const long long nq = n * (q - 1);
    b.required = std::max<long long>(r, nq + 2 - r);
    b.divisible = (nq > 0) && (maut_order % (unsigned long long)nq == 0);
    if (b.divisible) b.c = (long long)(maut_order / (unsigned long long)nq);
    b.satisfied = b.divisible && b.c >= b.required;
    return b;
}

EquivalenceResult code_equivalence(const LinearCode& c1, const LinearCode& c2,
                                   const SearchBudget& budget) {
    if (!c1.field().same(c2.field())) throw InputError("code_equivalence: different fields");
    if (c1.length() != c2.length()) throw InputError("code_equivalence: different lengths");
    if (c1.dimension() != c2.dimension()) throw InputError("code_equivalence: different dimensions");

    ColumnModel m1 = make_model(c1, "code_equivalence");
    ColumnModel m2 = make_model(c2, "code_equivalence");
    refine_colors({&m1, &m2});

    EquivalenceResult res;
    std::vector<int> cs1 = m1.color, cs2 = m2.color;
    std::sort(cs1.begin(), cs1.end());
    std::sort(cs2.begin(), cs2.end());
    if (cs1 != cs2) {
        res.found = Verdict::no;
        return res;
    }

    MonomialSearch search(m1, m2, budget.max_nodes, {});
    SearchResultSink sink;
    std::optional<MonomialMap> witness;
    sink.emit = [&](const MonomialMap& m, const Matrix&) {
        witness = m;
        return false;
    };
    try {
        search.run(sink);
    } catch (const BudgetExceeded&) {
        res.found = Verdict::unknown;
        res.nodes_visited = search.nodes();
        return res;
    }
    res.nodes_visited = search.nodes();
    if (!witness) {
        res.found = Verdict::no;
        return res;
    }

    // the witness must carry generators of the first code into the second
    const Field& f = c1.field();
    Matrix gen = nullspace_basis(c1.parity_check());
    for (int i = 0; i < gen.rows(); ++i) {
        std::vector<int> y = apply_monomial(f, *witness, gen.row(i));
        for (int v : mat_vec(c2.parity_check(), y))
            if (v != 0) throw InternalError("equivalence witness fails codeword verification");
    }
    res.found = Verdict::yes;
    res.witness = std::move(witness);
    return res;
}

RemarkCheck binary_remark_check(int m, int r, const SearchBudget& budget) {
    ConstructionSpec cspec{2, m, Family::c, r};
    Construction conc = build_construction(cspec);
    const long long n = conc.n;
    if (r < 1 || r > n - 1) throw InputError("binary_remark_check requires 1 <= r <= n-1");
    ConstructionSpec aspec{2, m, Family::a, (int)(n - r - 1)};
    Construction cona = build_construction(aspec);

    LinearCode cc = conc.make_code();
    LinearCode ca = cona.make_code();

    RemarkCheck check;
    check.n = (int)n;
    auto [crc, dc] = is_completely_regular(cc);
    auto [cra, da] = is_completely_regular(ca);
    check.params_match = cc.length() == ca.length() && cc.dimension() == ca.dimension() &&
                         min_distance(cc, 3) == min_distance(ca, 3) && crc == cra &&
                         dc.ia_b == da.ia_b && dc.ia_c == da.ia_c;
    check.equivalence = code_equivalence(cc, ca, budget);
    return check;
}

unsigned long long monomial_closure_order(const Field& f, const std::vector<MonomialMap>& gens,
                                          unsigned long long limit) {
    if (gens.empty()) return 1;
    const int n = gens[0].size();
    std::unordered_set<std::string> seen;
    std::deque<MonomialMap> queue;
    const MonomialMap ident = MonomialMap::identity(n);
    seen.insert(pack_map(ident));
    queue.push_back(ident);
    while (!queue.empty()) {
        MonomialMap cur = std::move(queue.front());
        queue.pop_front();
        for (const MonomialMap& g : gens) {
            MonomialMap next = compose(f, cur, g);
            if (seen.insert(pack_map(next)).second) {
                if (seen.size() > limit) throw BudgetExceeded("monomial closure limit exceeded");
                queue.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

std::vector<MonomialMap> reduce_generators(const Field& f, const std::vector<MonomialMap>& elements) {
    if (elements.empty()) return {};
    const int n = elements[0].size();
    std::vector<MonomialMap> gens;
    std::unordered_set<std::string> closure;
    closure.insert(pack_map(MonomialMap::identity(n)));

    for (const MonomialMap& e : elements) {
        if (closure.count(pack_map(e))) continue;
        gens.push_back(e);
        // regrow the closure with the new generator
        std::deque<MonomialMap> queue;
        queue.push_back(MonomialMap::identity(n));
        closure.clear();
        closure.insert(pack_map(queue.front()));
        while (!queue.empty()) {
            MonomialMap cur = std::move(queue.front());
            queue.pop_front();
            for (const MonomialMap& g : gens) {
                MonomialMap next = compose(f, cur, g);
                if (closure.insert(pack_map(next)).second) queue.push_back(std::move(next));
            }
        }
        if (closure.size() == elements.size()) break;
    }
    return gens;
}

std::string write_witnesses(const std::vector<MonomialMap>& maps) {
    std::ostringstream os;
    for (const MonomialMap& m : maps) {
        os << "perm=";
        for (int i = 0; i < m.size(); ++i) os << (i ? " " : "") << m.perm[i];
        os << " scales=";
        for (int i = 0; i < m.size(); ++i) os << (i ? " " : "") << m.scales[i];
        os << "\n";
    }
    return os.str();
}

std::vector<MonomialMap> read_witnesses(const std::string& text) {
    std::vector<MonomialMap> maps;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto perm_pos = line.find("perm=");
        const auto scales_pos = line.find(" scales=");
        if (perm_pos != 0 || scales_pos == std::string::npos)
            throw InputError("witness line must look like 'perm=... scales=...'");
        MonomialMap m;
        std::istringstream ps(line.substr(5, scales_pos - 5));
        int v;
        while (ps >> v) m.perm.push_back(v);
        std::istringstream ssc(line.substr(scales_pos + 8));
        while (ssc >> v) m.scales.push_back(v);
        if (m.perm.size() != m.scales.size() || m.perm.empty())
            throw InputError("witness line has mismatched perm/scales lengths");
        maps.push_back(std::move(m));
    }
    return maps;
}

} // namespace crcodes
