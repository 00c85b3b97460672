#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crcodes/codes.hpp"
#include "crcodes/constructions.hpp"

namespace crcodes {

// Monomial transformation e_i -> scales[i] * e_{perm[i]} (0-based).
struct MonomialMap {
    std::vector<int> perm;
    std::vector<int> scales;

    static MonomialMap identity(int n);
    int size() const { return (int)perm.size(); }
    bool operator==(const MonomialMap& o) const { return perm == o.perm && scales == o.scales; }
};

// first a, then b
MonomialMap compose(const Field& f, const MonomialMap& a, const MonomialMap& b);
MonomialMap inverse(const Field& f, const MonomialMap& a);
std::vector<int> apply_monomial(const Field& f, const MonomialMap& m, const std::vector<int>& x);

// An automorphism together with its unique syndrome-space lift S:
// S * h_i = scales[i] * h_{perm[i]} for every column h_i of the reduced
// parity check. Syndromes of transformed vectors are S * syndrome.
struct StabilizerElement {
    MonomialMap map;
    Matrix lift;
};

// Lift of a monomial map if it preserves the code, nullopt otherwise.
std::optional<Matrix> automorphism_lift(const LinearCode& c, const MonomialMap& m);
inline bool is_automorphism(const LinearCode& c, const MonomialMap& m) {
    return automorphism_lift(c, m).has_value();
}

struct SearchBudget {
    long long max_nodes = 50'000'000;
    long long max_elements = 2'000'000;
};

struct OrbitInfo {
    std::vector<int> orbit_of; // per syndrome
    int count = 0;
    std::vector<int> orbit_weight;
    std::vector<long long> orbit_size;
};

// Orbits of the syndrome space under the group generated by the lifts.
OrbitInfo orbits_on_cosets(const LinearCode& c, const std::vector<Matrix>& lifts, const CosetTable& t);

struct AutGroupResult {
    bool complete = false;
    unsigned long long order = 0;
    std::vector<StabilizerElement> generators; // reduced generating set
    int rho = 0;
    OrbitInfo orbits;
    bool ct = false; // orbit count == rho + 1 (only meaningful when complete)
    long long nodes_visited = 0;
};

// Exact |MAut(C)| by backtracking over images of a column basis in the
// syndrome space. Requires pairwise projectively distinct columns. When the
// node budget runs out the result is marked incomplete (never truncated
// silently). `column_order` permutes the greedy basis choice; the result is
// independent of it.
AutGroupResult maut_search(const LinearCode& c, const SearchBudget& budget = {},
                           const std::vector<int>& column_order = {});

// Standard generators of GL(m, q) over the given field.
std::vector<Matrix> gl_generators(const FieldPtr& f, int m);
unsigned long long gl_order(int q, int m);

// Structured generator schemas from the known group shapes.
enum class Schema {
    gl_single,  // Hamming-like: every GL(m,q) element permutes the columns
    b2,         // diag(G1,G2) and the block swap, on the [H'|O ; O|H''] form
    b3,         // diag(G,G) and block swaps, on the [H'|O|D ; O|H''|D] form
    torus_full, // r = n: diag(M_alpha, M_alpha), diag(I, M_xi), antidiagonal swap
    torus_diag  // r = n-1: diag(M_alpha, M_alpha), antidiagonal swap
};

// Monomial maps induced by the schema's lifts; every returned map is a
// verified automorphism of the constructed code.
std::vector<MonomialMap> gl_lift_generators(const Construction& con, Schema schema);

// Structured generators available for this construction, or empty.
std::vector<MonomialMap> structured_generators(const Construction& con);

enum class Verdict { yes, no, unknown };
std::string verdict_name(Verdict v);

struct CtResult {
    Verdict verdict = Verdict::unknown;
    std::string mode;    // "structured", "full", "none"
    int rho = 0;
    int orbit_count = 0; // under the group that decided the verdict
    std::optional<AutGroupResult> full;
    std::string note;
};

// Fast path first: if the structured generators already give rho+1 orbits
// the code is completely transitive. A negative verdict always comes from
// the full group; budget exhaustion yields "unknown".
CtResult is_completely_transitive(const Construction& con, const SearchBudget& budget = {});
CtResult is_completely_transitive(const LinearCode& code, const std::vector<MonomialMap>& structured,
                                  const SearchBudget& budget = {});

struct BoundCheck {
    bool satisfied = false;  // false means CT is impossible
    bool divisible = false;  // n(q-1) divides the order
    long long c = 0;         // order / (n(q-1)) when divisible
    long long required = 0;  // max{r, n(q-1)+2-r}
};

// Necessary condition for complete transitivity of a Construction-I code:
// |MAut| = c * n(q-1) with c >= max{r, n(q-1)+2-r}.
BoundCheck ct_necessary_bound(long long n, int q, int r, unsigned long long maut_order);

struct EquivalenceResult {
    Verdict found = Verdict::unknown;
    std::optional<MonomialMap> witness; // maps code1 onto code2
    long long nodes_visited = 0;
};

// Monomial equivalence search with the same backtracking engine.
EquivalenceResult code_equivalence(const LinearCode& c1, const LinearCode& c2,
                                   const SearchBudget& budget = {});

struct RemarkCheck {
    bool params_match = false;
    EquivalenceResult equivalence;
    int n = 0;
};

// q = 2 only: is the supplementary code of the r-block Construction-I code
// monomially equivalent to the Construction-II code with n-r-1 blocks?
RemarkCheck binary_remark_check(int m, int r, const SearchBudget& budget = {});

// Group order of a monomial generating set by explicit closure.
unsigned long long monomial_closure_order(const Field& f, const std::vector<MonomialMap>& gens,
                                          unsigned long long limit = 10'000'000);
std::vector<MonomialMap> reduce_generators(const Field& f, const std::vector<MonomialMap>& elements);

// Witness text format: one `perm=... scales=...` line per generator.
std::string write_witnesses(const std::vector<MonomialMap>& maps);
std::vector<MonomialMap> read_witnesses(const std::string& text);

} // namespace crcodes
