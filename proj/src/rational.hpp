#pragma once

#include <gmpxx.h>

#include <string>

namespace wtorelli {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" or "p/q", always reduced.
inline std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

} // namespace wtorelli
