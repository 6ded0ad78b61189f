#include "linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace wtorelli {

RationalVector RationalMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

void RationalMatrix::append_row(std::span<const Rational> values)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = values.size();
    if (values.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

namespace {

std::vector<Integer> clear_denominators(const RationalMatrix& m, std::size_t r)
{
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    std::vector<Integer> out(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        out[c] = m(r, c).get_num() * (l / m(r, c).get_den());
    return out;
}

void normalize_integer(RationalVector& v)
{
    Integer g = 0, l = 1;
    for (const auto& x : v) {
        if (x == 0)
            continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (auto& x : v)
        x *= l;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    if (g == 0)
        return;
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (*lead < 0)
        g = -g;
    for (auto& x : v) {
        x /= g;
        x.canonicalize();
    }
}

/// Rational reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<RationalVector>& rows, std::size_t dim)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r])
            x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < rows[i].size(); ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace

BareissEchelon bareiss(const RationalMatrix& m)
{
    BareissEchelon e;
    e.cols = m.cols();
    e.rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        e.rows.push_back(clear_denominators(m, r));

    auto& a = e.rows;
    const std::size_t nrows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0)
            ++p;
        if (p == nrows)
            continue;
        std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < e.cols; ++j) {
                Integer t = piv * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        // Rows above the pivot row are untouched, but entries of row r to the
        // left of c are already zero; its entries right of c carry the common
        // Bareiss scale and need no division.
        prev = piv;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

std::size_t rank(const RationalMatrix& m) { return bareiss(m).rank(); }

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    // Bareiss on the denominator-cleared rows; undo the row scaling and
    // track the permutation sign.
    Rational scale = 1;
    RationalMatrix work(m);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= Rational(l);
    }
    std::vector<std::vector<Integer>> a;
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(clear_denominators(m, r));
    const std::size_t n = a.size();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign);
    det /= scale;
    det.canonicalize();
    return det;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m)
{
    auto e = bareiss(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols)
        is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RationalVector x(n, 0);
        x[f] = 1;
        for (std::size_t k = e.rank(); k-- > 0;) {
            std::size_t pc = e.pivot_cols[k];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0 && e.rows[k][j] != 0)
                    acc += Rational(e.rows[k][j]) * x[j];
            x[pc] = -acc / Rational(e.rows[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return canonical_span_basis(basis, n);
}

std::vector<RationalVector> canonical_span_basis(const std::vector<RationalVector>& vectors, std::size_t dim)
{
    std::vector<RationalVector> rows = vectors;
    rref_in_place(rows, dim);
    for (auto& r : rows)
        normalize_integer(r);
    return rows;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t dim)
{
    return canonical_span_basis(a, dim) == canonical_span_basis(b, dim);
}

RationalVector solve(const RationalMatrix& m, const RationalVector& b)
{
    const std::size_t n = m.rows();
    if (m.cols() != n || b.size() != n)
        throw std::invalid_argument("solve expects a square system");
    std::vector<RationalVector> aug(n, RationalVector(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug[r][c] = m(r, c);
        aug[r][n] = b[r];
    }
    auto pivots = rref_in_place(aug, n);
    if (pivots.size() != n)
        throw std::domain_error("singular system");
    RationalVector x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[r] = aug[r][n];
    return x;
}

std::vector<std::size_t> non_pivot_columns(const RationalMatrix& m)
{
    auto e = bareiss(m);
    std::vector<bool> piv(m.cols(), false);
    for (auto c : e.pivot_cols)
        piv[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!piv[c])
            out.push_back(c);
    return out;
}

// ---------------------------------------------------------------------------
// Sparse echelon

SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b)
{
    SparseRow out;
    out.cols.reserve(a.cols.size() + b.cols.size());
    out.vals.reserve(a.cols.size() + b.cols.size());
    std::size_t i = 0, j = 0;
    while (i < a.cols.size() || j < b.cols.size()) {
        if (j == b.cols.size() || (i < a.cols.size() && a.cols[i] < b.cols[j])) {
            out.cols.push_back(a.cols[i]);
            out.vals.push_back(a.vals[i]);
            ++i;
        } else if (i == a.cols.size() || b.cols[j] < a.cols[i]) {
            out.cols.push_back(b.cols[j]);
            out.vals.push_back(-c * b.vals[j]);
            ++j;
        } else {
            Rational v = a.vals[i] - c * b.vals[j];
            if (v != 0) {
                out.cols.push_back(a.cols[i]);
                out.vals.push_back(std::move(v));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const
{
    std::size_t k = 0;
    while (k < row.cols.size()) {
        std::uint32_t c = row.cols[k];
        if (pivot_of_col_[c] < 0) {
            ++k;
            continue;
        }
        Rational f = row.vals[k];
        row = axpy(row, f, rows_[static_cast<std::size_t>(pivot_of_col_[c])]);
        // Pivot rows start at their pivot column, so entries before position
        // k are untouched and the entry at c is now gone.
    }
    return row;
}

bool SparseEchelon::insert(SparseRow row)
{
    // Only the leading entry has to be eliminated to find a new pivot.
    while (!row.empty()) {
        std::uint32_t c = row.cols.front();
        if (pivot_of_col_[c] < 0)
            break;
        Rational f = row.vals.front();
        row = axpy(row, f, rows_[static_cast<std::size_t>(pivot_of_col_[c])]);
    }
    if (row.empty())
        return false;
    Rational inv = 1 / row.vals.front();
    for (auto& v : row.vals)
        v *= inv;
    pivot_of_col_[row.cols.front()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

void SparseEchelon::reduce_fully()
{
    std::vector<std::uint32_t> pivots;
    for (std::size_t c = 0; c < pivot_of_col_.size(); ++c)
        if (pivot_of_col_[c] >= 0)
            pivots.push_back(static_cast<std::uint32_t>(c));
    // Right-to-left: rows with later pivots are already reduced when used.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        auto& row = rows_[static_cast<std::size_t>(pivot_of_col_[pivots[k]])];
        SparseRow tail;
        tail.cols.assign(row.cols.begin() + 1, row.cols.end());
        tail.vals.assign(row.vals.begin() + 1, row.vals.end());
        tail = reduce(std::move(tail));
        row.cols.resize(1);
        row.vals.resize(1);
        row.cols.insert(row.cols.end(), tail.cols.begin(), tail.cols.end());
        row.vals.insert(row.vals.end(), tail.vals.begin(), tail.vals.end());
    }
}

// ---------------------------------------------------------------------------
// Modular arithmetic

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

std::optional<u64> reduce_mod(const Rational& q, u64 p)
{
    u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0)
        return std::nullopt;
    return mulmod(num, invmod(den, p), p);
}

std::size_t dense_rank_mod(std::vector<std::vector<u64>>& a, std::size_t ncols, u64 p)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0)
            ++piv;
        if (piv == a.size())
            continue;
        std::swap(a[piv], a[r]);
        u64 inv = invmod(a[r][c], p);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0)
                continue;
            u64 f = mulmod(a[i][c], inv, p);
            for (std::size_t j = c; j < ncols; ++j) {
                if (a[r][j] == 0)
                    continue;
                u64 t = mulmod(f, a[r][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        ++r;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0)
            return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t random_prime_62(std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<u64> dist(1ull << 61, (1ull << 62) - 1);
    for (;;) {
        u64 c = dist(gen) | 1ull;
        if (is_prime_u64(c))
            return c;
    }
}

std::optional<std::size_t> rank_mod_p(const RationalMatrix& m, std::uint64_t p)
{
    std::vector<std::vector<u64>> a(m.rows(), std::vector<u64>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto v = reduce_mod(m(r, c), p);
            if (!v)
                return std::nullopt;
            a[r][c] = *v;
        }
    return dense_rank_mod(a, m.cols(), p);
}

std::optional<std::size_t> rank_mod_p(const std::vector<SparseRow>& rows, std::size_t ncols, std::uint64_t p)
{
    // Sparse elimination mod p with a pivot table; rows stay short for the
    // binomial-style ideals that occur in practice.
    using Row = std::vector<std::pair<std::uint32_t, u64>>;
    std::vector<long> pivot_of(ncols, -1);
    std::vector<Row> store;
    for (const auto& src : rows) {
        Row row;
        for (std::size_t k = 0; k < src.cols.size(); ++k) {
            auto v = reduce_mod(src.vals[k], p);
            if (!v)
                return std::nullopt;
            if (*v)
                row.emplace_back(src.cols[k], *v);
        }
        while (!row.empty() && pivot_of[row.front().first] >= 0) {
            const Row& pr = store[static_cast<std::size_t>(pivot_of[row.front().first])];
            u64 f = row.front().second; // pivot rows are monic
            Row out;
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pr.size()) {
                if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
                    out.push_back(row[i++]);
                } else {
                    u64 t = mulmod(f, pr[j].second, p);
                    if (i < row.size() && row[i].first == pr[j].first) {
                        u64 v = row[i].second >= t ? row[i].second - t : row[i].second + p - t;
                        if (v)
                            out.emplace_back(row[i].first, v);
                        ++i;
                    } else {
                        out.emplace_back(pr[j].first, t ? p - t : 0);
                    }
                    ++j;
                }
            }
            row = std::move(out);
        }
        if (row.empty())
            continue;
        u64 inv = invmod(row.front().second, p);
        for (auto& [c, v] : row)
            v = mulmod(v, inv, p);
        pivot_of[row.front().first] = static_cast<long>(store.size());
        store.push_back(std::move(row));
    }
    return store.size();
}

} // namespace wtorelli
