#include "crcodes/gf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

constexpr long long prime_field_guard = 1 << 16;
constexpr long long ext_field_guard = 1 << 24;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arithmetic of the base field during table construction. For the prime
// bottom of a tower this is plain modular arithmetic; for tower extensions
// it delegates to the already-built base tables.
struct BaseArith {
    int q;
    std::function<int(int, int)> add, mul;
    std::function<int(int)> neg;
};

BaseArith prime_arith(int p) {
    return {p,
            [p](int a, int b) { return (a + b) % p; },
            [p](int a, int b) { return (a * b) % p; },
            [p](int a) { return (p - a) % p; }};
}

BaseArith field_arith(const FieldPtr& f) {
    return {f->q(),
            [f](int a, int b) { return f->add(a, b); },
            [f](int a, int b) { return f->mul(a, b); },
            [f](int a) { return f->neg(a); }};
}

// Multiply the residue e (degree < t, coords over the base) by x and reduce
// modulo the monic polynomial with low coefficients c[0..t-1].
void mul_by_x(const BaseArith& ba, std::vector<int>& e, const std::vector<int>& c) {
    const int t = (int)e.size();
    const int top = e[t - 1];
    for (int j = t - 1; j > 0; --j) e[j] = e[j - 1];
    e[0] = 0;
    if (top != 0)
        for (int j = 0; j < t; ++j) e[j] = ba.add(e[j], ba.neg(ba.mul(top, c[j])));
}

bool is_one(const std::vector<int>& e) {
    if (e[0] != 1) return false;
    for (size_t j = 1; j < e.size(); ++j)
        if (e[j] != 0) return false;
    return true;
}

// Multiplicative order of x modulo the candidate polynomial, or 0 if the
// powers of x never return to 1 (x not a unit). The candidate is primitive
// exactly when the order is q^t - 1.
long long order_of_x(const BaseArith& ba, const std::vector<int>& c, long long bound) {
    std::vector<int> e(c.size(), 0);
    e[0] = 1;
    for (long long step = 1; step <= bound; ++step) {
        mul_by_x(ba, e, c);
        if (is_one(e)) return step;
    }
    return 0;
}

// Lexicographically smallest primitive polynomial of degree t over the base,
// coefficient lists compared by their integer code sum c_i * q^i.
std::vector<int> smallest_primitive(const BaseArith& ba, int t, long long qt) {
    std::vector<int> c(t);
    for (long long code = 1; code < qt; ++code) {
        long long rem = code;
        for (int i = 0; i < t; ++i) {
            c[i] = (int)(rem % ba.q);
            rem /= ba.q;
        }
        if (c[0] == 0) continue; // divisible by x, x is not a unit
        if (order_of_x(ba, c, qt - 1) == qt - 1) return c;
    }
    throw InternalError("no primitive polynomial found");
}

long long checked_pow(long long b, int e, long long guard) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > guard) return guard + 1;
    }
    return r;
}

} // namespace

struct FieldBuilder {
    static FieldPtr build(const BaseArith& ba, int p, int base_deg, int t) {
        long long qt = 1;
        for (int i = 0; i < t; ++i) qt *= ba.q;

        auto f = std::shared_ptr<Field>(new Field());
        f->p_ = p;
        f->deg_ = base_deg * t;
        f->q_ = (int)qt;
        f->base_q_ = ba.q;
        f->t_ = t;
        f->modulus_ = smallest_primitive(ba, t, qt);
        f->modulus_.push_back(1); // monic

        f->exp_.assign(qt - 1, 0);
        f->log_.assign(qt, -1);
        std::vector<int> e(t, 0);
        e[0] = 1;
        for (long long i = 0; i < qt - 1; ++i) {
            long long code = 0, w = 1;
            for (int j = 0; j < t; ++j) {
                code += (long long)e[j] * w;
                w *= ba.q;
            }
            f->exp_[i] = (int)code;
            if (f->log_[code] != -1) throw InternalError("exp table not injective");
            f->log_[code] = (int)i;
            mul_by_x(ba, e, f->modulus_);
        }
        if (!is_one(e)) throw InternalError("primitive element order mismatch");
        return f;
    }
};

FieldPtr Field::prime_power(int p, int s) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime, got p=" + std::to_string(p));
    if (s < 1) throw InputError("field extension degree must be >= 1");
    if (checked_pow(p, s, prime_field_guard) > prime_field_guard)
        throw InputError("field size guard exceeded: p^s must be <= 2^16");
    return FieldBuilder::build(prime_arith(p), p, 1, s);
}

FieldPtr Field::extension(const FieldPtr& base, int t) {
    if (t < 1) throw InputError("extension degree must be >= 1");
    if (checked_pow(base->q(), t, ext_field_guard) > ext_field_guard)
        throw InputError("field size guard exceeded: q^t must be <= 2^24");
    return FieldBuilder::build(field_arith(base), base->p(), base->degree(), t);
}

long long Field::modulus_code() const {
    long long code = 0, w = 1;
    for (int c : modulus_) {
        code += c * w;
        w *= base_q_;
    }
    return code;
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && q_ == other.q_ && base_q_ == other.base_q_ && modulus_ == other.modulus_;
}

int Field::add(int a, int b) const {
    if (p_ == 2) return a ^ b;
    int r = 0, w = 1;
    while (a != 0 || b != 0) {
        r += (a % p_ + b % p_) % p_ * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    if (p_ == 2) return a;
    int r = 0, w = 1;
    while (a != 0) {
        r += (p_ - a % p_) % p_ * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

int Field::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[((long long)log_[a] + log_[b]) % (q_ - 1)];
}

int Field::inv(int a) const {
    if (a == 0) throw InputError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Field::pow(int a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw InputError("inverse of zero");
        return 0;
    }
    long long m = q_ - 1;
    long long idx = ((long long)log_[a] * (e % m)) % m;
    return exp_[(idx + m) % m];
}

int Field::exp(long long i) const {
    long long m = q_ - 1;
    return exp_[((i % m) + m) % m];
}

int Field::log(int a) const {
    if (a == 0) throw InputError("log of zero");
    return log_[a];
}

std::vector<int> Field::to_base_vec(int a) const {
    std::vector<int> v(t_);
    for (int j = 0; j < t_; ++j) {
        v[j] = a % base_q_;
        a /= base_q_;
    }
    return v;
}

int Field::from_base_vec(const std::vector<int>& v) const {
    if ((int)v.size() != t_) throw InputError("coordinate vector has wrong length");
    long long code = 0, w = 1;
    for (int j = 0; j < t_; ++j) {
        if (v[j] < 0 || v[j] >= base_q_) throw InputError("coordinate out of range");
        code += (long long)v[j] * w;
        w *= base_q_;
    }
    return (int)code;
}

FieldPtr field_new(int p, int s) { return Field::prime_power(p, s); }

ExtContext ext_context(const FieldPtr& base, int t) {
    ExtContext ctx;
    ctx.base = base;
    ctx.ext = Field::extension(base, t);
    ctx.t = t;
    const long long qt = ctx.ext->q();
    ctx.n = (qt - 1) / (base->q() - 1);
    ctx.xi = ctx.ext->exp(base->q() - 1);

    // xi must have multiplicative order exactly n.
    if (ctx.ext->pow(ctx.xi, ctx.n) != 1) throw InternalError("xi^n != 1");
    for (long long d = 1; d * d <= ctx.n; ++d) {
        if (ctx.n % d != 0) continue;
        for (long long div : {d, ctx.n / d}) {
            if (div < ctx.n && ctx.ext->pow(ctx.xi, div) == 1)
                throw InternalError("xi has order smaller than n");
        }
    }
    return ctx;
}

std::vector<int> elem_to_vec(const ExtContext& ctx, int a) { return ctx.ext->to_base_vec(a); }

int vec_to_elem(const ExtContext& ctx, const std::vector<int>& v) { return ctx.ext->from_base_vec(v); }

} // namespace crcodes
