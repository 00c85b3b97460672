#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crcodes/linalg.hpp"

namespace crcodes {

// Partition of the coordinates into r consecutive n-sets (Construction I/II
// blocks T_j).
struct BlockStructure {
    int n = 0;
    int r = 0;
};

// A linear code given by a parity-check matrix. The original matrix is kept
// for its column semantics; syndromes are taken against a full-row-rank
// reduction of it.
class LinearCode {
  public:
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const Matrix& parity_check() const { return h_; }        // full row rank
    const Matrix& original_parity_check() const { return h_orig_; }
    int length() const { return n_; }
    int redundancy() const { return h_.rows(); }
    int dimension() const { return n_ - h_.rows(); }
    const std::optional<BlockStructure>& blocks() const { return blocks_; }

  private:
    LinearCode(FieldPtr f, Matrix h_orig, Matrix h, std::optional<BlockStructure> blocks)
        : field_(std::move(f)), h_orig_(std::move(h_orig)), h_(std::move(h)), n_(h_.cols()),
          blocks_(blocks) {}
    FieldPtr field_;
    Matrix h_orig_;
    Matrix h_;
    int n_;
    std::optional<BlockStructure> blocks_;

    friend LinearCode code_from_parity_check(const Matrix&, std::optional<BlockStructure>);
};

LinearCode code_from_parity_check(const Matrix& h, std::optional<BlockStructure> blocks = std::nullopt);

// Smallest w <= limit such that some w columns of the parity check are
// linearly dependent (the minimum distance when <= limit). Exhaustive search
// over projective column classes; nullopt when every dependency needs more
// than `limit` columns.
std::optional<int> min_distance(const LinearCode& c, int limit);

// Integer encoding of syndrome vectors: entry i of the vector is digit i
// (base q) of the code. Addition is componentwise field addition.
class SyndromeSpace {
  public:
    SyndromeSpace(const Field& f, int dim);
    long long size() const { return size_; }
    int dim() const { return dim_; }
    long long add(long long a, long long b) const;
    long long from_vec(const std::vector<int>& v) const;
    std::vector<int> to_vec(long long s) const;

  private:
    int q_, p_, dim_;
    long long size_;
};

// Minimum coset weight per syndrome, computed by breadth-first search on the
// syndrome graph (edges add alpha * h_i).
struct CosetTable {
    std::vector<int8_t> weights;       // indexed by syndrome code
    std::vector<long long> level_sizes; // index = weight 0..rho
    int rho = 0;
};

CosetTable coset_table(const LinearCode& c);

struct LevelTriple {
    long long a = 0, b = 0, c = 0;
};

// Witness that two same-level syndromes have different neighbor counts.
struct RegularityRefutation {
    int level = 0;
    long long syndrome1 = 0, syndrome2 = 0;
    long long down1 = 0, up1 = 0, down2 = 0, up2 = 0;
};

struct IntersectionData {
    bool regular = false;
    std::vector<LevelTriple> levels;     // (a_l, b_l, c_l) for l = 0..rho
    std::vector<long long> ia_b;         // b_0 .. b_{rho-1}
    std::vector<long long> ia_c;         // c_1 .. c_rho
    std::optional<RegularityRefutation> refutation;
};

// Per-level neighbor counts c(s), b(s) over all syndromes; a code is
// completely regular exactly when those are constant on every level.
IntersectionData intersection_data(const LinearCode& c, const CosetTable& t);

std::pair<bool, IntersectionData> is_completely_regular(const LinearCode& c);

// The distance-2 witness set S = {alpha e_i^1 + e_j^2 : (i,alpha) != (j,1)}
// for a Construction-I code with three blocks, emitted and verified against
// the block-diagonalized presentation [H|O|H ; O|H|H] of the code.
struct Weight2Witnesses {
    LinearCode presentation; // the code the witness vectors live in
    std::vector<std::vector<int>> vectors;
    std::vector<long long> syndromes;
};

Weight2Witnesses weight2_witnesses(const LinearCode& b3);

} // namespace crcodes
