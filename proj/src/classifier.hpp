#pragma once

// Family-level verdicts: witness members, Torelli / anti-Torelli / rigid
// labels, and the numeric criteria of Tu and Donagi-Tu.

#include "hodge.hpp"

namespace wtorelli {

enum class Label { Torelli, AntiTorelli, HodgeRigid, StronglyRigid };

std::string label_name(Label l);
/// Table notation: T, AT, R (both rigid labels print as R).
std::string label_code(Label l);

struct FanoFamily {
    int id = 0;
    WeightSystem weights{{1}, 1};
    std::string expected; // "T", "AT", "R" or empty
    long index() const { return weights.index(); }
};

/// The 35 families of index > 1 (ids 96-130) with their tabulated labels.
const std::vector<FanoFamily>& higher_index_families();
std::optional<FanoFamily> find_family(int id);

/// Reads `id,a0,a1,a2,a3,a4,d,expected_label` records; blank lines and lines
/// starting with '#' are skipped. Throws ParseError naming the line.
std::vector<FanoFamily> load_fixture(const std::string& path);
std::vector<FanoFamily> parse_fixture(const std::string& text, const std::string& origin = "<fixture>");

struct Member {
    WPolynomial equation{WeightSystem({1}, 1)};
    std::string strategy; // "fermat", "fermat+pairs", "pairs-search", "random"
    int attempts = 0;
};

/// Quasi-smooth witness for the weight system, deterministic in `seed`.
/// Throws Error when every strategy is exhausted.
Member generic_member(const WeightSystem& w, std::uint64_t seed);

struct TorelliVerdict {
    int family_id = 0;
    WeightSystem weights{{1}, 1};
    Label label = Label::Torelli;
    std::string expected;
    bool matches_expected = true;

    Member member;
    std::uint64_t seed = 0;
    int dimension = 3;
    long sigma = 0;
    long index = 0;

    std::vector<long long> hp_closed; // empty when the closed form is unavailable
    std::string hp_closed_error;
    std::size_t dim_rd = 0;       // H^1(T_X) ~ R_d
    std::size_t dim_r_d_iota = 0; // H^{2,1} ~ R_{d - index}
    /// Smallest k >= 1 with R_k != 0 by slices, or none when R_k = 0 for all k >= 1.
    std::optional<long> first_positive_degree;
    bool fast_d_below_index = false; // d < index forces R_{d - index} = 0
    bool fast_d_above_sigma = false; // d > sigma forces R_d = 0

    std::optional<TorelliEvidence> evidence;
    HodgeVector hodge;
};

TorelliVerdict classify(const FanoFamily& family, std::uint64_t seed);

struct Discrepancy {
    int family_id = 0;
    std::string expected;
    std::string computed;
};

struct ClassificationRun {
    std::vector<TorelliVerdict> verdicts; // sorted by id
    std::vector<Discrepancy> discrepancies;
};

/// Classifies every family on a bounded worker pool (workers = 0 picks the
/// hardware concurrency).
ClassificationRun classify_all(const std::vector<FanoFamily>& families, std::uint64_t seed, unsigned workers = 0);

/// Which rigid list the computation supports: the one naming no.104 or the one
/// naming no.105. Both ids must be present in the verdicts.
std::string resolve_104_105(const std::vector<TorelliVerdict>& verdicts);

struct TuBound {
    Rational G;
    Rational estimate; // -s + m(n+1)
};

TuBound tu_G_bound(const WeightSystem& w);

struct TuCertificate {
    bool holds = false;
    int p = 0;
    long k = 0;
    std::vector<std::pair<int, long>> all; // every admissible (p, k)
};

/// Exists p in [1, n] with gcd(m, p) | s and an integer
/// k >= max(0, (n+1)p/(n+1-p) - s/m) such that d p = s + k m.
TuCertificate tu_condition(const WeightSystem& w, long d);

/// a_0 = a_1 = 1, m | s, m | d and d >= max(3s, s + m(n+1)).
bool donagi_tu_condition(const WeightSystem& w, long d);

} // namespace wtorelli
