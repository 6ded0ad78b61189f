#pragma once

// Exact linear algebra: sparse echelon forms for degree slices, dense
// fraction-free (Bareiss) elimination for the small dense matrices built from
// multiplication maps, and a modular rank used as a cross-check.

#include "rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wtorelli {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    void append_row(std::span<const Rational> values);
    RationalMatrix transposed() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Fraction-free echelon form of a matrix whose rows were first scaled to
/// integers. Row order is permuted; pivots are chosen left to right.
struct BareissEchelon {
    std::vector<std::vector<Integer>> rows; // first `rank` rows are the echelon rows
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;
    std::size_t rank() const { return pivot_cols.size(); }
};

BareissEchelon bareiss(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

/// Basis of {x : m x = 0}, returned in reduced echelon form with each vector
/// scaled to coprime integers and a positive leading entry.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Reduced row echelon form of the span of `vectors`, integer-normalized as
/// for nullspace(). Zero vectors are dropped.
std::vector<RationalVector> canonical_span_basis(const std::vector<RationalVector>& vectors, std::size_t dim);

/// True when the two families span the same subspace of Q^dim.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t dim);

/// Solves m x = b for square non-singular m. Throws std::domain_error when
/// m is singular.
RationalVector solve(const RationalMatrix& m, const RationalVector& b);

/// Columns that are not pivots of the row echelon form of m, in column order.
std::vector<std::size_t> non_pivot_columns(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Sparse echelon over the rationals, keyed by column index. Columns with a
// smaller index are eliminated first, so pivots land on the earliest columns.

struct SparseRow {
    std::vector<std::uint32_t> cols; // strictly increasing
    std::vector<Rational> vals;      // non-zero
    bool empty() const { return cols.empty(); }
};

class SparseEchelon {
  public:
    explicit SparseEchelon(std::size_t ncols) : pivot_of_col_(ncols, -1) {}

    /// Reduces `row` against the current pivots and keeps it if non-zero.
    /// Returns true when the rank grew.
    bool insert(SparseRow row);

    /// Back-substitutes so that every stored row is zero on all other pivot
    /// columns (reduced row echelon form with unit pivots).
    void reduce_fully();

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return pivot_of_col_.size(); }
    bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }
    /// Pivot row for `col`; only meaningful when is_pivot(col).
    const SparseRow& pivot_row(std::size_t col) const { return rows_[static_cast<std::size_t>(pivot_of_col_[col])]; }

    /// Reduces an arbitrary row to one supported on non-pivot columns.
    SparseRow reduce(SparseRow row) const;

  private:
    std::vector<SparseRow> rows_;
    std::vector<long> pivot_of_col_;
};

/// a - c*b, merging two sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b);

// ---------------------------------------------------------------------------
// Modular arithmetic

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// A prime in [2^61, 2^62) drawn from a generator seeded with `seed`.
std::uint64_t random_prime_62(std::uint64_t seed);

/// Rank of m reduced modulo p, or nullopt when some denominator vanishes
/// modulo p (the caller should then fall back to exact arithmetic).
std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p);

/// Rank of the matrix whose rows are the given sparse rows, modulo p.
std::optional<std::size_t> rank_mod_p(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint64_t p);

} // namespace wtorelli
