#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crcodes/codes.hpp"
#include "crcodes/gf.hpp"
#include "crcodes/linalg.hpp"

namespace crcodes {

enum class Family { hamming, b, a, c };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ConstructionSpec {
    int q = 2;
    int m = 3;
    Family family = Family::hamming;
    int r = 1; // ignored for family hamming
};

// Parity check of the q-ary Hamming code of length n = (q^m-1)/(q-1),
// with one field-element label per column.
//
// When gcd(n, q-1) = 1 a cyclic version exists and column i is the
// coordinate vector of xi^i. Otherwise the columns are the canonical
// projective representatives in canonical order; block matrices H_i are
// then still defined through field multiplication of the labels by xi^i.
struct HammingH {
    Matrix h;
    std::vector<int> labels; // extension-field element per column
    bool cyclic = false;
};

HammingH hamming_parity_check(const ExtContext& ctx);

// The m x m matrix of y -> c*y on F_{q^m} in the polynomial basis.
Matrix mult_matrix(const ExtContext& ctx, int c);

// Construction I: blocks [H ; H_j] for j = 1..r, where H_j = H * xi^j.
Matrix hb_matrix(const ExtContext& ctx, const HammingH& ham, int r);

// Construction II: blocks [H;O], [O;H], [H;H], [H;H_1] ... [H;H_r];
// r in {-2,...,n-1}, degenerating to the three short matrices for r <= 0.
Matrix ha_matrix(const ExtContext& ctx, const HammingH& ham, int r);

// Split of the full projective point set of F_q^{2m}: the Construction-I
// matrix H_b(r) plus the canonical representatives of all points it does
// not cover, in canonical order.
std::pair<Matrix, Matrix> h2m_split(const ExtContext& ctx, const HammingH& ham, int r);

// Row transform diag(I, M_{xi^{i-1}}) showing that the code with blocks
// H_i..H_{i+j-1} coincides with the Construction-I code of j blocks.
struct ScaleEquivalence {
    Matrix shifted;         // parity check with blocks H_i .. H_{i+j-1}
    Matrix base;            // H_b(j)
    Matrix transform;       // 2m x 2m
    std::vector<int> column_map; // column c of transform*base == column column_map[c] of shifted
    bool columns_match = false;
    bool row_spaces_equal = false;
};

ScaleEquivalence equiv_scale_transform(const ExtContext& ctx, const HammingH& ham, int i, int j);

// Row transform T with T * H_b(r) in the block form [H'|O ; O|H''] (r = 2)
// or [H'|O|H''' ; O|H''|H'''] (r = 3).
Matrix hb_normal_transform(const ExtContext& ctx, int r);

// A constructed parity-check matrix with its provenance.
struct Construction {
    ConstructionSpec spec;
    ExtContext ctx;
    HammingH ham;
    Matrix h;
    std::optional<BlockStructure> block_structure;
    long long n = 0;

    LinearCode make_code() const { return code_from_parity_check(h, block_structure); }
    std::vector<std::string> provenance_comments() const;
};

Construction build_construction(const ConstructionSpec& spec);

// q = p^s for prime p; throws InputError otherwise.
std::pair<int, int> prime_power_decompose(int q);

} // namespace crcodes
