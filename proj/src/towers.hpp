#pragma once

// Towers of double covers X^{j+1} -> P(..., t^j) branched along X^j, with
// t = d/2 and equation f_j = f_0 + y_1^2 + ... + y_j^2.

#include "classifier.hpp"

namespace wtorelli {

struct TowerMember {
    int base_id = 0;
    int level = 0; // may be negative for the downward extension
    WPolynomial base_equation{WeightSystem({1}, 1)}; // level-0 equation f_0
    WeightSystem weights{{1}, 1};                     // extended weight system
    int t = 0;
    int dimension = 0;
    long weight_sum = 0; // s_j = s_0 + j t
    long twist = 0;      // canonical class O(m_j), m_j = m_0 - j t

    bool even_dimensional() const { return dimension % 2 == 0; }
    /// f_j written out in the extended variables.
    WPolynomial equation() const;
};

/// Level-0 member for a base equation of even degree. Throws Error for odd d.
TowerMember tower_base(const WPolynomial& f0, int base_id = 0);

/// Level j+1. Throws Error for odd degree.
TowerMember extend(const TowerMember& member);

/// Level j-1 for j <= 0: needs a variable of weight t occurring in f_0 only
/// through a square term c*x_i^2.
TowerMember lower(const TowerMember& member);

/// How many times lower() applies to the level-0 member.
int max_lowering(const WPolynomial& f0);

/// primitive[q] = dim R_{(q+1)d - s_j} on the base ring.
HodgeVector tower_hodge(const TowerMember& member);

struct PeriodicityLevel {
    int level = 0;
    int dimension = 0;
    std::vector<long long> primitive;
    std::vector<long long> expected; // level (j mod 2) vector padded with j/2 zeros per side
    bool matches = false;
};

struct ExtendedRingCheck {
    int level = 1;
    bool quasi_smooth = false;
    bool hilbert_function_equal = false;
    bool hodge_equal = false;
    std::vector<long long> hilbert_function; // of the extended ring, degrees 0..sigma
    HodgeVector hodge;                       // by Griffiths-Steenbrink on the extended ring
    bool passed() const { return quasi_smooth && hilbert_function_equal && hodge_equal; }
};

/// Builds the extended ring of `level` in full and compares it with the base.
ExtendedRingCheck extended_ring_check(const WPolynomial& f0, int level = 1);

struct PeriodicityResult {
    bool passed = false;
    std::vector<PeriodicityLevel> levels; // 0 .. 2 k_max
    ExtendedRingCheck cross_check;
};

PeriodicityResult periodicity_check(const WPolynomial& f0, int k_max);

/// d even and d/2 equals the index s - d.
bool k3_type_check(const WeightSystem& w);

struct AlternationLevel {
    int level = 0;
    int dimension = 0;
    Label verdict = Label::Torelli;
    bool trivially_injective = false;
    std::vector<RationalVector> kernel;
    std::vector<Monomial> rd_basis;
};

struct AlternationResult {
    std::vector<AlternationLevel> levels;
    bool alternates = false; // odd dimensions AT, even dimensions T
};

/// torelli_check on levels 0..k_max.
AlternationResult alternation_check(const WPolynomial& f0, int k_max, std::uint64_t seed = 0);

struct TowerRow {
    int id = 0;
    WeightSystem weights{{1}, 1};
    HodgeVector odd;  // dimension 3
    HodgeVector even; // dimension 4
};

struct TowerTable {
    std::vector<TowerRow> rows;
    std::vector<int> skipped; // odd degree, no tower
};

/// Rows for every family of even degree, using the family's witness member.
TowerTable tower_table(const std::vector<FanoFamily>& families, std::uint64_t seed, unsigned workers = 0);

/// "Non-special" check for double covers: slice dimensions of the level-1
/// member f_0 + y^2 agree with those of a random member of the extended
/// weight system on degrees 0..sigma. Dimension equality only.
bool double_cover_slice_dims_match(const WPolynomial& f0, std::uint64_t seed);

} // namespace wtorelli
