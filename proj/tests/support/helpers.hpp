#pragma once

#include "jacobian.hpp"
#include "oracles.hpp"

#include <random>
#include <string>

namespace testutil {

inline oracle::Poly to_oracle(const wtorelli::WPolynomial& f)
{
    oracle::Poly p;
    for (const auto& [m, c] : f.terms())
        p[oracle::Exps(m.exponents().begin(), m.exponents().end())] = c;
    return p;
}

inline std::vector<int> weights_of(const wtorelli::WeightSystem& w)
{
    return {w.weights().begin(), w.weights().end()};
}

inline wtorelli::WPolynomial poly(const std::vector<int>& weights, int d, const std::string& text)
{
    return wtorelli::parse_polynomial(text, wtorelli::WeightSystem(weights, d));
}

/// Polynomial over a quotient basis, as an oracle polynomial.
inline oracle::Poly lift(const std::vector<wtorelli::Monomial>& basis, const wtorelli::RationalVector& v)
{
    oracle::Poly p;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0)
            p[oracle::Exps(basis[i].exponents().begin(), basis[i].exponents().end())] = v[i];
    return p;
}

/// Coordinates over the quotient basis of R_k of a degree-k polynomial.
inline wtorelli::RationalVector coords(const wtorelli::JacobianRing& ring, const std::string& text, int k)
{
    const auto& w = ring.weights();
    auto parsed = wtorelli::parse_polynomial(text, wtorelli::WeightSystem(weights_of(w), k));
    return ring.normal_form(wtorelli::WPolynomial(w, parsed.terms()), k);
}

} // namespace testutil
