#pragma once

// The Jacobian ring R = S/J(f) realised one weighted degree at a time.

#include "graded_poly.hpp"
#include "linalg.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace wtorelli {

class InternalConsistencyError : public Error {
  public:
    using Error::Error;
};

class NotQuasiSmoothError : public Error {
  public:
    using Error::Error;
};

/// Linear algebra of a single degree k: S_k, J(f)_k and R_k.
class DegreeSlice {
  public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    long degree() const { return degree_; }
    const std::vector<Monomial>& ambient() const { return ambient_; }
    /// Quotient basis of R_k: the ambient monomials outside the leading terms
    /// of J(f)_k, in canonical order.
    const std::vector<Monomial>& quotient_basis() const { return quotient_; }
    std::size_t dim() const { return quotient_.size(); }
    std::size_t ideal_rank() const { return echelon_.rank(); }
    /// Spanning rows of J(f)_k in ambient coordinates (m * df/dx_i).
    const std::vector<SparseRow>& ideal_rows() const { return ideal_rows_; }

    /// Position of `m` in ambient(), or npos.
    std::size_t ambient_index(const Monomial& m) const;
    /// Position of ambient column `col` in quotient_basis(), or npos.
    std::size_t quotient_position(std::size_t col) const { return quotient_pos_[col]; }

    /// Class of an element given in ambient coordinates.
    RationalVector project(const SparseRow& ambient_vector) const;
    /// Class of a single ambient monomial (one column of the projection matrix).
    RationalVector project_monomial(const Monomial& m) const;
    RationalVector project_column(std::size_t col) const;

    /// Eliminates the generators of J(f)_k, or installs already reduced pivot
    /// rows (from the disk cache) when `reduced_rows` is given.
    static std::shared_ptr<const DegreeSlice> build(const WPolynomial& f, const std::vector<WPolynomial>& partials,
                                                    long k, const std::vector<SparseRow>* reduced_rows = nullptr);

  private:
    DegreeSlice(long k, std::size_t ncols) : degree_(k), echelon_(ncols) {}

    long degree_;
    std::vector<Monomial> ambient_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
    std::vector<Monomial> quotient_;
    std::vector<std::size_t> quotient_pos_;
    std::vector<SparseRow> ideal_rows_;
    SparseEchelon echelon_;
};

struct QuasiSmoothResult {
    bool quasi_smooth = false;
    long window_lo = 0; // first degree checked
    long window_hi = 0; // last degree checked
    /// Degree of the first nonzero slice in the window, with its quotient basis.
    std::optional<long> witness_degree;
    std::vector<Monomial> witness_monomials;
};

class JacobianRing {
  public:
    explicit JacobianRing(WPolynomial f);

    /// Memoized ring for f, shared process-wide.
    static std::shared_ptr<const JacobianRing> shared(const WPolynomial& f);

    const WPolynomial& equation() const { return f_; }
    const WeightSystem& weights() const { return f_.weights(); }
    const std::vector<WPolynomial>& partials() const { return partials_; }
    long sigma() const { return f_.weights().sigma(); }

    /// Slice of degree k, computed once. Negative k gives an empty slice.
    std::shared_ptr<const DegreeSlice> slice(long k) const;
    /// dim R_k. Above sigma this is 0 without elimination once the ring has
    /// passed quasi_smooth_check.
    std::size_t dim(long k) const;
    /// Set by quasi_smooth_check.
    std::optional<bool> quasi_smooth() const;

    /// Coordinates of p over the quotient basis of R_k; k is p's degree.
    RationalVector normal_form(const WPolynomial& p) const;
    RationalVector normal_form(const WPolynomial& p, long k) const;

    /// Stable key identifying the ring (weights, degree, equation).
    const std::string& key() const { return key_; }

  private:
    WPolynomial f_;
    std::vector<WPolynomial> partials_;
    std::string key_;
    mutable std::mutex mutex_;
    mutable std::map<long, std::shared_ptr<const DegreeSlice>> cache_;
    mutable std::atomic<int> qs_state_{-1};

    friend QuasiSmoothResult quasi_smooth_check(const JacobianRing& ring);
};

/// Closed-form Hilbert-Poincare series prod (1 - t^(d-a_i)) / (1 - t^(a_i)).
/// Throws Error when some d - a_i <= 0 or the quotient is not a polynomial.
std::vector<long long> hilbert_series_closed(const WeightSystem& w);

/// [dim R_0, ..., dim R_kmax] by linear algebra.
std::vector<long long> hilbert_function_computed(const JacobianRing& ring, long k_max);

/// dim R_k = 0 on the window (sigma, sigma + max a_i], which forces vanishing in
/// every higher degree since any larger monomial is x_i times one already in
/// the window or above it.
QuasiSmoothResult quasi_smooth_check(const JacobianRing& ring);
QuasiSmoothResult quasi_smooth_check(const WPolynomial& f);

/// Representative monomial of the one-dimensional R_sigma.
Monomial socle_generator(const JacobianRing& ring);

/// M[i][j] = socle coefficient of b_i * b'_j over the bases of R_a and R_{sigma-a}.
RationalMatrix duality_pairing(const JacobianRing& ring, long a);

/// w in R_{sigma-a} with <v, w> = 1 and <b_j, w> = 0 for the quotient basis
/// elements b_j of R_a other than the first one in the support of v.
RationalVector dual_element(const JacobianRing& ring, long a, const RationalVector& v);

/// Renders a coordinate vector over a quotient basis as a polynomial string.
std::string format_class(const std::vector<Monomial>& basis, const RationalVector& v);

} // namespace wtorelli
