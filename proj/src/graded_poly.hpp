#pragma once

// Weighted-graded polynomial arithmetic over the rationals.

#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtorelli {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class NotHomogeneousError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

class NotFoundError : public Error {
  public:
    using Error::Error;
};

/// Ambient weighted projective space P(a_0, ..., a_{n+1}) together with the
/// degree d of the hypersurface living in it.
class WeightSystem {
  public:
    WeightSystem(std::vector<int> weights, int degree);

    std::span<const int> weights() const { return weights_; }
    int weight(std::size_t i) const { return weights_.at(i); }
    std::size_t size() const { return weights_.size(); }
    int degree() const { return degree_; }

    /// Dimension n of the hypersurface (n+2 variables).
    int dimension() const { return static_cast<int>(weights_.size()) - 2; }
    long sum() const { return sum_; }
    /// Top degree of the Jacobian ring, (n+2)d - 2s.
    long sigma() const;
    /// Fano index s - d.
    long index() const { return sum_ - degree_; }
    long lcm() const { return lcm_; }
    int max_weight() const;
    bool well_formed() const;

    /// Same degree, `count` extra variables of weight `weight` appended.
    WeightSystem extended(int weight, int count = 1) const;

    std::string to_string() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

  private:
    std::vector<int> weights_;
    int degree_;
    long sum_ = 0;
    long lcm_ = 1;
};

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

    std::span<const int> exponents() const { return exps_; }
    int operator[](std::size_t i) const { return exps_[i]; }
    std::size_t size() const { return exps_.size(); }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Precondition: `other` divides *this.
    Monomial operator/(const Monomial& other) const;
    Monomial padded(std::size_t nvars) const;

    /// "1", "x0^5*x2", ...
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Plain lexicographic comparison of exponent vectors; only used for
    /// container keys. The canonical order is MonomialOrder.
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  private:
    std::vector<int> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

long wdeg(const Monomial& mono, const WeightSystem& w);

/// Canonical monomial order: weighted degree first, ties broken by reverse
/// lexicographic comparison (the monomial with the smaller exponent in the
/// last differing variable is larger). Returns true when a is strictly
/// larger than b.
struct MonomialOrder {
    const WeightSystem* w;
    bool operator()(const Monomial& a, const Monomial& b) const { return greater(a, b, *w); }
    static bool greater(const Monomial& a, const Monomial& b, const WeightSystem& w);
    /// Tie-break for monomials already known to share a weighted degree.
    static bool greater_same_degree(const Monomial& a, const Monomial& b);
};

/// All monomials of weighted degree k, largest first under MonomialOrder.
std::vector<Monomial> monomials_of_degree(const WeightSystem& w, long k);

/// Number of monomials of weighted degree k, by dynamic programming.
std::uint64_t count_monomials(std::span<const int> weights, long k);

/// Sparse weighted polynomial with exact rational coefficients. Terms are
/// kept in a map keyed by monomial; zero coefficients are never stored.
class WPolynomial {
  public:
    explicit WPolynomial(WeightSystem w) : w_(std::move(w)) {}
    WPolynomial(WeightSystem w, std::map<Monomial, Rational> terms);

    /// Throws NotHomogeneousError naming the first offending term.
    static WPolynomial homogeneous(WeightSystem w, std::map<Monomial, Rational> terms, long degree);

    const WeightSystem& weights() const { return w_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Degree when every term has the same weighted degree, otherwise empty.
    /// The zero polynomial reports no degree.
    std::optional<long> homogeneous_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    WPolynomial operator+(const WPolynomial& o) const;
    WPolynomial operator-(const WPolynomial& o) const;
    WPolynomial operator*(const WPolynomial& o) const;
    WPolynomial operator*(const Rational& c) const;
    WPolynomial times(const Monomial& m) const;

    WPolynomial derivative(std::size_t var) const;

    /// Terms in descending canonical order, e.g. "x0^7 + x0*x2^3 - 1/2*x4^2".
    std::string to_string() const;

    friend bool operator==(const WPolynomial& a, const WPolynomial& b)
    {
        return a.w_ == b.w_ && a.terms_ == b.terms_;
    }

  private:
    void check_arity(const Monomial& m) const;

    WeightSystem w_;
    std::map<Monomial, Rational> terms_;
};

/// The n+2 partials of f; entry i is homogeneous of degree d - a_i or zero.
std::vector<WPolynomial> partial_derivatives(const WPolynomial& f);

/// Parses a polynomial in x0..x9 with integer or rational coefficients, e.g.
/// "x0^7 + x0*x2^3 + 3/2*x1^3*x3". Throws ParseError on syntax errors and
/// NotHomogeneousError when a term is not of weighted degree `w.degree()`.
WPolynomial parse_polynomial(const std::string& text, const WeightSystem& w);

/// Parses "1,2,2,3,3".
std::vector<int> parse_weight_list(const std::string& text);

} // namespace wtorelli
