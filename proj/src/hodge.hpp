#pragma once

// Hodge numbers via the Griffiths residue isomorphism, multiplication maps and
// the differential of the period map.

#include "jacobian.hpp"

namespace wtorelli {

struct HodgeVector {
    int dimension = 0;
    std::vector<long long> primitive; // h^{n,0}, ..., h^{0,n}
    std::vector<long long> total;     // primitive, +1 in the middle for even n

    static HodgeVector from_primitive(int n, std::vector<long long> primitive);
    /// "0,10,10,0"
    static std::string join(const std::vector<long long>& v);
};

/// primitive[q] = dim R_{(q+1)d - s}. The weight sum defaults to that of the
/// ring; towers pass the sum of the extended weight system instead.
HodgeVector hodge_numbers(const JacobianRing& ring, int n);
HodgeVector hodge_numbers(const JacobianRing& ring, int n, long weight_sum);

struct MultMap {
    long a = 0, b = 0;
    bool symmetric = false; // a == b: source is Sym^2 R_a
    std::vector<std::pair<std::size_t, std::size_t>> source; // basis index pairs
    RationalMatrix matrix; // dim R_{a+b} x |source|
    std::size_t rank = 0;
    std::size_t target_dim() const { return matrix.rows(); }
    bool surjective() const { return rank == target_dim(); }
};

MultMap mult_map(const JacobianRing& ring, long a, long b);

struct PeriodBlock {
    int p = 0;
    long source_degree = 0; // (p+1)d - s
    long target_degree = 0; // (p+2)d - s
    std::size_t source_dim = 0, target_dim = 0;
    std::size_t row_offset = 0;
};

/// Matrix of R_d -> (+)_p Hom(R_{(p+1)d-s}, R_{(p+2)d-s}); column r is the
/// flattened multiplication-by-b_r map of every non-trivial block.
struct PeriodDifferential {
    int dimension = 0;
    long weight_sum = 0;
    std::vector<PeriodBlock> blocks;
    RationalMatrix matrix;
};

PeriodDifferential period_differential(const JacobianRing& ring, int n, long weight_sum);

struct TorelliEvidence {
    bool injective = false;
    std::size_t dim_rd = 0;
    std::size_t rank = 0;
    /// Some block has source R_0, so R_d embeds into Hom(R_0, R_d) outright.
    bool trivially_injective = false;
    std::vector<PeriodBlock> blocks;
    std::vector<Monomial> rd_basis;
    std::vector<RationalVector> kernel; // canonical echelon basis over rd_basis

    // Dual route: sum of products R_b x R_{sigma-b-d} -> R_{sigma-d} over the blocks.
    bool dual_surjective = false;
    long dual_target_degree = 0;
    std::size_t dual_rank = 0;
    std::size_t dual_target_dim = 0;
    std::vector<Monomial> cokernel;

    std::uint64_t prime = 0;
    std::optional<std::size_t> modular_rank;
};

TorelliEvidence torelli_check(const JacobianRing& ring, int n, std::uint64_t seed = 0);
TorelliEvidence torelli_check(const JacobianRing& ring, int n, long weight_sum, std::uint64_t seed);

/// Kernel of the period differential, in reduced echelon form over the
/// quotient basis of R_d.
std::vector<RationalVector> anti_torelli_kernel(const JacobianRing& ring, int n);
std::vector<RationalVector> anti_torelli_kernel(const JacobianRing& ring, int n, long weight_sum);

struct AmbientSurjectivity {
    bool surjective = false;
    long b = 0, a = 0;
    std::vector<Monomial> uncovered; // degree sigma-a monomials with no degree-b divisor
};

/// Whether S_b x S_{sigma-a-b} -> S_{sigma-a} is onto. Monomial products are
/// monomials, so this holds iff every monomial of degree sigma-a has a
/// divisor of degree b.
AmbientSurjectivity ambient_surjectivity_check(const WeightSystem& w, long b, long a);

} // namespace wtorelli
