#pragma once

#include <memory>
#include <vector>

namespace crcodes {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic tables for a finite field F_{p^s}.
//
// Every field is realized as base[x]/(f) where f is the lexicographically
// smallest primitive polynomial of the right degree over the base field
// (coefficient lists ordered by their integer code sum c_i * base_q^i).
// The base is either the prime field F_p or another Field (tower extension).
//
// Elements are encoded as integers 0..q-1: the base-base_q digits of the
// code are the polynomial coordinates, lowest degree first. Since the root
// of f is primitive by construction, exp/log tables cover all of F_q*.
class Field {
  public:
    // F_{p^s} over the prime field. Guard: p prime, s >= 1, p^s <= 2^16.
    static FieldPtr prime_power(int p, int s);

    // Degree-t extension of an existing field. Guard: base_q^t <= 2^24.
    static FieldPtr extension(const FieldPtr& base, int t);

    int p() const { return p_; }
    int degree() const { return deg_; } // over the prime field
    int q() const { return q_; }
    int base_q() const { return base_q_; }   // order of the immediate base
    int ext_degree() const { return t_; }    // degree over the immediate base

    // Modulus over the immediate base, ascending degree, monic (length t+1).
    const std::vector<int>& modulus() const { return modulus_; }
    long long modulus_code() const; // sum modulus_[i] * base_q^i

    bool same(const Field& other) const;

    int add(int a, int b) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;

    // exp(i) = alpha^(i mod (q-1)) for the primitive element alpha.
    int exp(long long i) const;
    int log(int a) const; // a != 0
    int primitive() const { return exp_[1 % exp_.size()]; }

    // Polynomial coordinates over the immediate base (length ext_degree()).
    std::vector<int> to_base_vec(int a) const;
    int from_base_vec(const std::vector<int>& v) const;

  private:
    Field() = default;
    int p_ = 0, deg_ = 0, q_ = 0, base_q_ = 0, t_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_; // q-1 entries, exp_[0] = 1
    std::vector<int> log_; // q entries, log_[0] = -1
    friend struct FieldBuilder;
};

// Spec-facing constructor: tables for F_{p^s}.
FieldPtr field_new(int p, int s);

// A base field together with a degree-t extension and a fixed element xi
// of multiplicative order n = (q^t - 1)/(q - 1): xi = alpha^(q-1) for the
// stored primitive element alpha of the extension.
struct ExtContext {
    FieldPtr base;
    FieldPtr ext;
    int t = 0;
    long long n = 0;
    int xi = 0;
};

ExtContext ext_context(const FieldPtr& base, int t);

// Coordinates of an extension element in the polynomial basis (F_q-linear).
std::vector<int> elem_to_vec(const ExtContext& ctx, int a);
int vec_to_elem(const ExtContext& ctx, const std::vector<int>& v);

} // namespace crcodes
