#include "jacobian.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wtorelli {

namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<SparseRow> generator_rows(const std::vector<WPolynomial>& partials, const WeightSystem& w, long k,
                                      const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& index)
{
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < partials.size(); ++i) {
        const auto& g = partials[i];
        if (g.is_zero())
            continue;
        long cofactor = k - (w.degree() - w.weight(i));
        for (const auto& m : monomials_of_degree(w, cofactor)) {
            std::vector<std::pair<std::uint32_t, Rational>> entries;
            for (const auto& [t, c] : g.terms())
                entries.emplace_back(index.at(t * m), c);
            std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.first < b.first; });
            SparseRow row;
            for (auto& [col, c] : entries) {
                row.cols.push_back(col);
                row.vals.push_back(c);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::optional<std::filesystem::path> cache_path(const std::string& key, long k)
{
    const char* dir = std::getenv("WTORELLI_CACHE_DIR");
    if (!dir || !*dir)
        return std::nullopt;
    std::ostringstream name;
    name << std::hex << fnv1a(key) << std::dec << "_" << k << ".slice";
    return std::filesystem::path(dir) / name.str();
}

} // namespace

// ---------------------------------------------------------------------------
// DegreeSlice

std::shared_ptr<const DegreeSlice> DegreeSlice::build(const WPolynomial& f, const std::vector<WPolynomial>& partials,
                                                      long k, const std::vector<SparseRow>* reduced_rows)
{
    const auto& w = f.weights();
    auto ambient = monomials_of_degree(w, k);
    std::shared_ptr<DegreeSlice> s(new DegreeSlice(k, ambient.size()));
    s->ambient_ = std::move(ambient);
    for (std::size_t i = 0; i < s->ambient_.size(); ++i)
        s->index_.emplace(s->ambient_[i], static_cast<std::uint32_t>(i));
    s->ideal_rows_ = generator_rows(partials, w, k, s->index_);
    if (reduced_rows) {
        for (const auto& row : *reduced_rows)
            if (!s->echelon_.insert(row))
                throw InternalConsistencyError("cached slice rows are dependent");
    } else {
        for (const auto& row : s->ideal_rows_)
            s->echelon_.insert(row);
    }
    s->echelon_.reduce_fully();
    s->quotient_pos_.assign(s->ambient_.size(), npos);
    for (std::size_t c = 0; c < s->ambient_.size(); ++c) {
        if (s->echelon_.is_pivot(c))
            continue;
        s->quotient_pos_[c] = s->quotient_.size();
        s->quotient_.push_back(s->ambient_[c]);
    }
    return s;
}

std::size_t DegreeSlice::ambient_index(const Monomial& m) const
{
    auto it = index_.find(m);
    return it == index_.end() ? npos : it->second;
}

RationalVector DegreeSlice::project(const SparseRow& v) const
{
    RationalVector out(quotient_.size(), 0);
    for (std::size_t k = 0; k < v.cols.size(); ++k) {
        std::size_t c = v.cols[k];
        if (!echelon_.is_pivot(c)) {
            out[quotient_pos_[c]] += v.vals[k];
            continue;
        }
        // m_c + sum r_j m_j lies in J, so m_c is congruent to -sum r_j m_j.
        const SparseRow& r = echelon_.pivot_row(c);
        for (std::size_t j = 1; j < r.cols.size(); ++j)
            out[quotient_pos_[r.cols[j]]] -= v.vals[k] * r.vals[j];
    }
    return out;
}

RationalVector DegreeSlice::project_column(std::size_t col) const
{
    SparseRow v;
    v.cols.push_back(static_cast<std::uint32_t>(col));
    v.vals.emplace_back(1);
    return project(v);
}

RationalVector DegreeSlice::project_monomial(const Monomial& m) const
{
    std::size_t col = ambient_index(m);
    if (col == npos)
        throw std::invalid_argument("monomial " + m.to_string() + " is not of degree " + std::to_string(degree_));
    return project_column(col);
}

// ---------------------------------------------------------------------------
// JacobianRing

JacobianRing::JacobianRing(WPolynomial f) : f_(std::move(f))
{
    auto deg = f_.homogeneous_degree();
    if (!deg || *deg != f_.weights().degree())
        throw NotHomogeneousError("equation is not homogeneous of degree " + std::to_string(f_.weights().degree()));
    partials_ = partial_derivatives(f_);
    key_ = f_.weights().to_string() + " : " + f_.to_string();
}

std::shared_ptr<const JacobianRing> JacobianRing::shared(const WPolynomial& f)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const JacobianRing>> memo;
    std::string key = f.weights().to_string() + " : " + f.to_string();
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
    }
    auto ring = std::make_shared<const JacobianRing>(f);
    std::lock_guard lock(mu);
    return memo.emplace(key, ring).first->second;
}

namespace {

void save_slice(const std::filesystem::path& path, const DegreeSlice& s)
{
    // Stored as the reduced pivot rows; loading re-inserts them.
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path.string() + ".tmp");
    if (!out)
        return;
    out << "wtorelli-slice 1 " << s.degree() << " " << s.ambient().size() << "\n";
    for (std::size_t c = 0; c < s.ambient().size(); ++c) {
        if (s.quotient_position(c) != DegreeSlice::npos)
            continue;
        SparseRow unit;
        unit.cols.push_back(static_cast<std::uint32_t>(c));
        unit.vals.emplace_back(1);
        auto cls = s.project(unit); // -r restricted to the quotient columns
        out << c;
        for (std::size_t q = 0; q < cls.size(); ++q)
            if (cls[q] != 0)
                out << " " << s.ambient_index(s.quotient_basis()[q]) << " " << to_string(Rational(-cls[q]));
        out << "\n";
    }
    out.close();
    std::filesystem::rename(path.string() + ".tmp", path, ec);
}

std::optional<std::vector<SparseRow>> load_slice(const std::filesystem::path& path, long k, std::size_t ncols)
{
    std::ifstream in(path);
    std::string magic;
    int version = 0;
    long deg = 0;
    std::size_t n = 0;
    if (!(in >> magic >> version >> deg >> n) || magic != "wtorelli-slice" || version != 1 || deg != k || n != ncols)
        return std::nullopt;
    std::vector<SparseRow> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        SparseRow row;
        std::uint32_t c;
        std::string v;
        if (!(ls >> c) || c >= ncols)
            return std::nullopt;
        row.cols.push_back(c);
        row.vals.emplace_back(1);
        while (ls >> c >> v) {
            if (c >= ncols)
                return std::nullopt;
            row.cols.push_back(c);
            row.vals.push_back(parse_rational(v));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::shared_ptr<const DegreeSlice> JacobianRing::slice(long k) const
{
    if (k < 0)
        k = -1;
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(k); it != cache_.end())
            return it->second;
    }
    std::shared_ptr<const DegreeSlice> s;
    auto path = k >= 0 ? cache_path(key_, k) : std::nullopt;
    if (path && std::filesystem::exists(*path)) {
        auto rows = load_slice(*path, k, static_cast<std::size_t>(count_monomials(weights().weights(), k)));
        if (rows)
            s = DegreeSlice::build(f_, partials_, k, &*rows);
    }
    if (!s) {
        s = DegreeSlice::build(f_, partials_, k);
        if (path)
            save_slice(*path, *s);
    }
    std::lock_guard lock(mutex_);
    return cache_.emplace(k, std::move(s)).first->second;
}

std::size_t JacobianRing::dim(long k) const
{
    if (k < 0 || (k > sigma() && qs_state_.load() == 1))
        return 0;
    return slice(k)->dim();
}

std::optional<bool> JacobianRing::quasi_smooth() const
{
    int s = qs_state_.load();
    if (s < 0)
        return std::nullopt;
    return s == 1;
}

RationalVector JacobianRing::normal_form(const WPolynomial& p) const
{
    auto deg = p.homogeneous_degree();
    if (!deg)
        throw NotHomogeneousError(p.is_zero() ? "zero polynomial has no degree; pass it explicitly"
                                              : "polynomial is not homogeneous");
    return normal_form(p, *deg);
}

RationalVector JacobianRing::normal_form(const WPolynomial& p, long k) const
{
    if (!(p.weights().weights().size() == weights().size() &&
          std::equal(p.weights().weights().begin(), p.weights().weights().end(), weights().weights().begin())))
        throw std::invalid_argument("polynomial lives in a different weighted space");
    auto s = slice(k);
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (const auto& [m, c] : p.terms()) {
        if (wdeg(m, weights()) != k)
            throw NotHomogeneousError("term " + m.to_string() + " is not of degree " + std::to_string(k));
        entries.emplace_back(static_cast<std::uint32_t>(s->ambient_index(m)), c);
    }
    std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.first < b.first; });
    SparseRow row;
    for (auto& [col, c] : entries) {
        row.cols.push_back(col);
        row.vals.push_back(c);
    }
    return s->project(row);
}

// ---------------------------------------------------------------------------

std::vector<long long> hilbert_series_closed(const WeightSystem& w)
{
    std::vector<long long> num{1};
    for (std::size_t i = 0; i < w.size(); ++i) {
        long e = w.degree() - w.weight(i);
        if (e <= 0)
            throw Error("degenerate factor: d - a_" + std::to_string(i) + " = " + std::to_string(e) +
                        " is not positive");
        std::vector<long long> next(num.size() + static_cast<std::size_t>(e), 0);
        for (std::size_t j = 0; j < num.size(); ++j) {
            next[j] += num[j];
            next[j + static_cast<std::size_t>(e)] -= num[j];
        }
        num = std::move(next);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        // Divide by 1 - t^a: q_j = r_j + q_{j-a}.
        std::size_t a = static_cast<std::size_t>(w.weight(i));
        if (a > num.size())
            throw Error("Hilbert-Poincare quotient is not a polynomial");
        std::vector<long long> q(num.size() - a, 0);
        std::vector<long long> r = num;
        for (std::size_t j = 0; j < q.size(); ++j) {
            q[j] = r[j];
            r[j + a] += r[j];
            r[j] = 0;
        }
        for (std::size_t j = q.size(); j < r.size(); ++j)
            if (r[j] != 0)
                throw Error("Hilbert-Poincare quotient is not a polynomial (remainder after dividing by 1 - t^" +
                            std::to_string(a) + ")");
        num = std::move(q);
    }
    while (num.size() > 1 && num.back() == 0)
        num.pop_back();
    return num;
}

std::vector<long long> hilbert_function_computed(const JacobianRing& ring, long k_max)
{
    std::vector<long long> out;
    for (long k = 0; k <= k_max; ++k)
        out.push_back(static_cast<long long>(ring.dim(k)));
    return out;
}

QuasiSmoothResult quasi_smooth_check(const JacobianRing& ring)
{
    QuasiSmoothResult r;
    long sigma = ring.sigma();
    r.window_lo = std::max(sigma + 1, 0L);
    r.window_hi = std::max(sigma + ring.weights().max_weight(), 0L);
    if (ring.qs_state_.load() == 1) {
        r.quasi_smooth = true;
        return r;
    }
    for (long k = r.window_lo; k <= r.window_hi; ++k) {
        auto s = ring.slice(k);
        if (s->dim() != 0) {
            r.witness_degree = k;
            r.witness_monomials = s->quotient_basis();
            ring.qs_state_.store(0);
            return r;
        }
    }
    r.quasi_smooth = true;
    ring.qs_state_.store(1);
    return r;
}

QuasiSmoothResult quasi_smooth_check(const WPolynomial& f) { return quasi_smooth_check(*JacobianRing::shared(f)); }

Monomial socle_generator(const JacobianRing& ring)
{
    long sigma = ring.sigma();
    std::size_t dim = sigma < 0 ? 0 : ring.dim(sigma);
    if (dim != 1)
        throw NotQuasiSmoothError("dim R_sigma = " + std::to_string(dim) + " (sigma = " + std::to_string(sigma) +
                                  "); the hypersurface is not quasi-smooth");
    return ring.slice(sigma)->quotient_basis().front();
}

RationalMatrix duality_pairing(const JacobianRing& ring, long a)
{
    long sigma = ring.sigma();
    if (a < 0 || a > sigma)
        throw std::invalid_argument("pairing degree out of range [0, sigma]");
    socle_generator(ring);
    auto left = ring.slice(a);
    auto right = ring.slice(sigma - a);
    auto top = ring.slice(sigma);
    if (left->dim() != right->dim())
        throw InternalConsistencyError("dim R_" + std::to_string(a) + " != dim R_" + std::to_string(sigma - a));
    RationalMatrix m(left->dim(), right->dim());
    for (std::size_t i = 0; i < left->dim(); ++i)
        for (std::size_t j = 0; j < right->dim(); ++j)
            m(i, j) = top->project_monomial(left->quotient_basis()[i] * right->quotient_basis()[j])[0];
    if (determinant(m) == 0)
        throw InternalConsistencyError("duality pairing in degree " + std::to_string(a) + " is degenerate");
    return m;
}

RationalVector dual_element(const JacobianRing& ring, long a, const RationalVector& v)
{
    auto m = duality_pairing(ring, a);
    if (v.size() != m.rows())
        throw std::invalid_argument("vector length does not match dim R_" + std::to_string(a));
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end())
        throw std::invalid_argument("dual of the zero vector");
    std::size_t k = static_cast<std::size_t>(lead - v.begin());
    RationalVector rhs(v.size(), 0);
    rhs[k] = 1 / v[k];
    return solve(m, rhs);
}

std::string format_class(const std::vector<Monomial>& basis, const RationalVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        Rational c = v[i];
        bool neg = c < 0;
        if (neg)
            c = -c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool unit = basis[i] == Monomial::one(basis[i].size());
        if (unit)
            out += to_string(c);
        else if (c == 1)
            out += basis[i].to_string();
        else
            out += to_string(c) + "*" + basis[i].to_string();
    }
    return out.empty() ? "0" : out;
}

} // namespace wtorelli
