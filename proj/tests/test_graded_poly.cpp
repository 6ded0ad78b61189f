#include "helpers.hpp"

#include <doctest.h>

using namespace wtorelli;

TEST_SUITE("graded_poly")
{
    TEST_CASE("weight system invariants")
    {
        WeightSystem w({2, 3, 4, 5, 7}, 14);
        CHECK(w.sum() == 21);
        CHECK(w.sigma() == 28);
        CHECK(w.index() == 7);
        CHECK(w.lcm() == 420);
        CHECK(w.max_weight() == 7);
        CHECK(w.dimension() == 3);
        CHECK(w.well_formed());
        CHECK(w.to_string() == "X_14 in P(2,3,4,5,7)");
        CHECK(w.extended(7, 2).to_string() == "X_14 in P(2,3,4,5,7,7,7)");

        CHECK_FALSE(WeightSystem({1, 2, 2, 2, 2}, 6).well_formed());
        CHECK_FALSE(WeightSystem({2, 2, 3}, 6).well_formed() == true);
        CHECK_THROWS_AS(WeightSystem({}, 3), std::invalid_argument);
        CHECK_THROWS_AS(WeightSystem({1, 0}, 3), std::invalid_argument);
        CHECK_THROWS_AS(WeightSystem({1, 1}, 0), std::invalid_argument);
    }

    TEST_CASE("monomial enumeration agrees with a brute-force count")
    {
        for (auto ws : std::vector<std::vector<int>>{{1, 1, 1, 1, 1}, {2, 3, 4, 5, 7}, {1, 3, 5, 7, 8}, {3, 4, 5}}) {
            WeightSystem w(ws, 1);
            for (long k = 0; k <= 24; ++k) {
                auto ours = monomials_of_degree(w, k);
                auto ref = oracle::monomials(ws, k);
                REQUIRE(ours.size() == ref.size());
                CHECK(count_monomials(w.weights(), k) == ref.size());
                for (std::size_t i = 0; i + 1 < ours.size(); ++i)
                    CHECK(MonomialOrder::greater(ours[i], ours[i + 1], w));
                for (const auto& m : ours)
                    CHECK(wdeg(m, w) == k);
            }
        }
        CHECK(monomials_of_degree(WeightSystem({2, 3}, 1), 1).empty());
        CHECK(monomials_of_degree(WeightSystem({2, 3}, 1), -1).empty());
    }

    TEST_CASE("grevlex tie-break")
    {
        WeightSystem w({1, 1, 1}, 2);
        auto ms = monomials_of_degree(w, 2);
        std::vector<std::string> s;
        for (auto& m : ms)
            s.push_back(m.to_string());
        CHECK(s == std::vector<std::string>{"x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"});
    }

    TEST_CASE("parsing and printing")
    {
        WeightSystem w({2, 3, 4, 5, 7}, 14);
        auto f = parse_polynomial("x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2", w);
        CHECK(f.term_count() == 5);
        CHECK(f.to_string() == "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2");
        CHECK(f.homogeneous_degree() == 14);

        auto g = parse_polynomial("3/2*x0^7 - 2 x4^2 + x4^2", WeightSystem({2, 3, 4, 5, 7}, 14));
        CHECK(g.coefficient(Monomial({7, 0, 0, 0, 0})) == Rational(3, 2));
        CHECK(g.coefficient(Monomial({0, 0, 0, 0, 2})) == -1);
        CHECK(parse_polynomial(g.to_string(), w) == g);

        CHECK_THROWS_AS(parse_polynomial("x0^7 + x1^3", w), NotHomogeneousError);
        CHECK_THROWS_AS(parse_polynomial("x0^", w), ParseError);
        CHECK_THROWS_AS(parse_polynomial("x9^2", w), ParseError);
        CHECK_THROWS_AS(parse_polynomial("1/0*x0^7", w), ParseError);
        try {
            parse_polynomial("x0^7 + x1^3", w);
        } catch (const NotHomogeneousError& e) {
            CHECK(std::string(e.what()).find("x1^3") != std::string::npos);
        }
        CHECK(parse_weight_list("1, 2,2,3 ,3") == std::vector<int>{1, 2, 2, 3, 3});
        CHECK_THROWS(parse_weight_list("1,a"));
    }

    TEST_CASE("arithmetic and derivatives against the reference polynomial")
    {
        std::mt19937_64 gen(7);
        WeightSystem w({1, 2, 3}, 6);
        std::uniform_int_distribution<int> c(-4, 4);
        for (int trial = 0; trial < 20; ++trial) {
            WPolynomial a(w), b(w);
            for (const auto& m : monomials_of_degree(w, 6))
                a.add_term(m, c(gen));
            for (const auto& m : monomials_of_degree(w, 3))
                b.add_term(m, c(gen));
            auto pa = testutil::to_oracle(a), pb = testutil::to_oracle(b);
            CHECK(testutil::to_oracle(a * b) == oracle::multiply(pa, pb));
            CHECK(testutil::to_oracle(a - a).empty());
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(testutil::to_oracle(a.derivative(i)) == oracle::derivative(pa, i));
        }
    }

    TEST_CASE("unreduced coefficients compare equal after insertion")
    {
        WeightSystem w({1, 1}, 2);
        WPolynomial a(w), b(w);
        a.add_term(Monomial({2, 0}), Rational(3, 3));
        b.add_term(Monomial({2, 0}), Rational(1));
        CHECK(a == b);
        CHECK(a.to_string() == b.to_string());
    }
}
