#pragma once

#include "classifier.hpp"

#include <string>
#include <vector>

namespace props {

struct Outcome {
    bool ok = true;
    int checked = 0;
    std::string detail; // first failure, if any

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

/// Quasi-smooth members built as sums of pure powers and x_i^e * x_j terms,
/// drawn deterministically from `seed`.
std::vector<wtorelli::WPolynomial> fermat_pair_members(int count, std::uint64_t seed);

/// (a) dim R_k = dim R_{sigma-k}, dim R_sigma = 1, and the computed Hilbert
/// function equals the reference series.
Outcome palindromic(const std::vector<wtorelli::WPolynomial>& members);
/// (b) duality_pairing(a) non-singular for every 0 <= a <= sigma.
Outcome duality(const std::vector<wtorelli::WPolynomial>& members);
/// (c) sum a_i x_i df/dx_i = d f.
Outcome euler(int count, std::uint64_t seed);
/// (d) modular rank equals the exact rank on the period differentials and
/// slices of the golden computations.
Outcome modular_agreement(const std::vector<wtorelli::TorelliVerdict>& verdicts,
                          const std::vector<wtorelli::WPolynomial>& extra);
/// (e) the primal and dual verdicts agree on every non-rigid family.
Outcome primal_dual(const std::vector<wtorelli::TorelliVerdict>& verdicts);

/// The four witness equations of the anti-Torelli families.
std::vector<wtorelli::WPolynomial> witness_equations();

} // namespace props
