#include "helpers.hpp"

#include <doctest.h>

using namespace wtorelli;

namespace {

RationalMatrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, int lo, int hi, double zero_rate)
{
    std::uniform_int_distribution<int> v(lo, hi);
    std::uniform_int_distribution<int> den(1, 5);
    std::bernoulli_distribution zero(zero_rate);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = zero(gen) ? Rational(0) : Rational(v(gen), den(gen));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j).canonicalize();
    return m;
}

std::vector<oracle::Row> rows_of(const RationalMatrix& m)
{
    std::vector<oracle::Row> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

} // namespace

TEST_SUITE("linalg")
{
    TEST_CASE("rank and nullspace agree with Gauss-Jordan")
    {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + gen() % 8, c = 1 + gen() % 8;
            auto m = random_matrix(gen, r, c, -3, 3, 0.5);
            std::size_t ref = oracle::rank(rows_of(m), c);
            CHECK(rank(m) == ref);
            auto ns = nullspace(m);
            CHECK(ns.size() == c - ref);
            for (const auto& v : ns)
                for (std::size_t i = 0; i < r; ++i) {
                    Rational s = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        s += m(i, j) * v[j];
                    CHECK(s == 0);
                }
            CHECK(same_span(ns, oracle::nullspace(rows_of(m), c), c));
            CHECK(rank(m.transposed()) == ref);
        }
    }

    TEST_CASE("determinant and solve")
    {
        std::mt19937_64 gen(5);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t n = 1 + gen() % 6;
            auto m = random_matrix(gen, n, n, -5, 5, 0.2);
            // Cofactor expansion as the reference.
            std::function<Rational(const RationalMatrix&)> cof = [&](const RationalMatrix& a) -> Rational {
                if (a.rows() == 1)
                    return a(0, 0);
                Rational d = 0;
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    RationalMatrix minor(a.rows() - 1, a.cols() - 1);
                    for (std::size_t i = 1; i < a.rows(); ++i)
                        for (std::size_t k = 0, kk = 0; k < a.cols(); ++k)
                            if (k != j)
                                minor(i - 1, kk++) = a(i, k);
                    d += (j % 2 ? -1 : 1) * a(0, j) * cof(minor);
                }
                return d;
            };
            Rational det = cof(m);
            CHECK(determinant(m) == det);
            RationalVector b(n);
            for (auto& x : b)
                x = Rational(static_cast<long>(gen() % 7) - 3);
            if (det != 0) {
                auto x = solve(m, b);
                for (std::size_t i = 0; i < n; ++i) {
                    Rational s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += m(i, j) * x[j];
                    CHECK(s == b[i]);
                }
            } else {
                CHECK_THROWS_AS(solve(m, b), std::domain_error);
            }
        }
        RationalMatrix sing(2, 2);
        sing(0, 0) = 1;
        sing(0, 1) = 2;
        sing(1, 0) = 2;
        sing(1, 1) = 4;
        CHECK(determinant(sing) == 0);
        CHECK(non_pivot_columns(sing) == std::vector<std::size_t>{1});
    }

    TEST_CASE("canonical span basis is normalised")
    {
        std::vector<RationalVector> v{{Rational(2), Rational(4), Rational(0)}, {Rational(1, 2), Rational(1), Rational(0)}};
        auto b = canonical_span_basis(v, 3);
        REQUIRE(b.size() == 1);
        CHECK(b[0] == RationalVector{1, 2, 0});
        CHECK(same_span(v, {{Rational(-3), Rational(-6), Rational(0)}}, 3));
        CHECK_FALSE(same_span(v, {{Rational(1), Rational(0), Rational(0)}}, 3));
    }

    TEST_CASE("sparse echelon matches dense rank")
    {
        std::mt19937_64 gen(3);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + gen() % 10, c = 1 + gen() % 10;
            auto m = random_matrix(gen, r, c, -2, 2, 0.7);
            SparseEchelon e(c);
            std::vector<SparseRow> rows;
            for (std::size_t i = 0; i < r; ++i) {
                SparseRow row;
                for (std::size_t j = 0; j < c; ++j)
                    if (m(i, j) != 0) {
                        row.cols.push_back(static_cast<std::uint32_t>(j));
                        row.vals.push_back(m(i, j));
                    }
                rows.push_back(row);
                e.insert(row);
            }
            CHECK(e.rank() == oracle::rank(rows_of(m), c));
            e.reduce_fully();
            for (const auto& row : rows) {
                auto red = e.reduce(row);
                CHECK(red.empty());
            }
            auto p = random_prime_62(static_cast<std::uint64_t>(trial));
            CHECK(is_prime_u64(p));
            CHECK(p >= (std::uint64_t{1} << 61));
            auto mr = rank_mod_p(m, p);
            REQUIRE(mr.has_value());
            CHECK(*mr == e.rank());
            auto sr = rank_mod_p(rows, c, p);
            REQUIRE(sr.has_value());
            CHECK(*sr == e.rank());
        }
    }

    TEST_CASE("primality")
    {
        CHECK(is_prime_u64(2));
        CHECK(is_prime_u64(2305843009213693951ULL)); // 2^61 - 1
        CHECK_FALSE(is_prime_u64(1));
        CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
        CHECK(random_prime_62(1) == random_prime_62(1));
    }
}
