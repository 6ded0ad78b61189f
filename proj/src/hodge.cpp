#include "hodge.hpp"

#include <functional>

namespace wtorelli {

HodgeVector HodgeVector::from_primitive(int n, std::vector<long long> primitive)
{
    HodgeVector h;
    h.dimension = n;
    h.primitive = std::move(primitive);
    h.total = h.primitive;
    if (n % 2 == 0)
        h.total[static_cast<std::size_t>(n / 2)] += 1;
    return h;
}

std::string HodgeVector::join(const std::vector<long long>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

HodgeVector hodge_numbers(const JacobianRing& ring, int n) { return hodge_numbers(ring, n, ring.weights().sum()); }

HodgeVector hodge_numbers(const JacobianRing& ring, int n, long weight_sum)
{
    if (n < 0)
        throw std::invalid_argument("negative dimension");
    const long d = ring.weights().degree();
    std::vector<long long> prim;
    for (int q = 0; q <= n; ++q)
        prim.push_back(static_cast<long long>(ring.dim((q + 1) * d - weight_sum)));
    return HodgeVector::from_primitive(n, std::move(prim));
}

MultMap mult_map(const JacobianRing& ring, long a, long b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("negative degree");
    MultMap mm;
    mm.a = a;
    mm.b = b;
    mm.symmetric = a == b;
    auto sa = ring.slice(a), sb = ring.slice(b), st = ring.slice(a + b);
    for (std::size_t i = 0; i < sa->dim(); ++i)
        for (std::size_t j = mm.symmetric ? i : 0; j < sb->dim(); ++j)
            mm.source.emplace_back(i, j);
    mm.matrix = RationalMatrix(st->dim(), mm.source.size());
    for (std::size_t c = 0; c < mm.source.size(); ++c) {
        auto [i, j] = mm.source[c];
        auto v = st->project_monomial(sa->quotient_basis()[i] * sb->quotient_basis()[j]);
        for (std::size_t r = 0; r < v.size(); ++r)
            mm.matrix(r, c) = v[r];
    }
    mm.rank = rank(mm.matrix);
    return mm;
}

PeriodDifferential period_differential(const JacobianRing& ring, int n, long weight_sum)
{
    PeriodDifferential pd;
    pd.dimension = n;
    pd.weight_sum = weight_sum;
    const long d = ring.weights().degree();
    auto rd = ring.slice(d);
    std::size_t rows = 0;
    for (int p = 0; p <= n; ++p) {
        PeriodBlock blk;
        blk.p = p;
        blk.source_degree = (p + 1) * d - weight_sum;
        blk.target_degree = blk.source_degree + d;
        blk.source_dim = ring.dim(blk.source_degree);
        blk.target_dim = ring.dim(blk.target_degree);
        if (blk.source_dim == 0 || blk.target_dim == 0)
            continue;
        blk.row_offset = rows;
        rows += blk.source_dim * blk.target_dim;
        pd.blocks.push_back(blk);
    }
    pd.matrix = RationalMatrix(rows, rd->dim());
    for (const auto& blk : pd.blocks) {
        auto src = ring.slice(blk.source_degree);
        auto tgt = ring.slice(blk.target_degree);
        for (std::size_t r = 0; r < rd->dim(); ++r)
            for (std::size_t i = 0; i < blk.source_dim; ++i) {
                auto v = tgt->project_monomial(rd->quotient_basis()[r] * src->quotient_basis()[i]);
                for (std::size_t t = 0; t < blk.target_dim; ++t)
                    pd.matrix(blk.row_offset + i * blk.target_dim + t, r) = v[t];
            }
    }
    return pd;
}

TorelliEvidence torelli_check(const JacobianRing& ring, int n, std::uint64_t seed)
{
    return torelli_check(ring, n, ring.weights().sum(), seed);
}

TorelliEvidence torelli_check(const JacobianRing& ring, int n, long weight_sum, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("torelli_check needs n >= 1");
    TorelliEvidence ev;
    const long d = ring.weights().degree();
    auto pd = period_differential(ring, n, weight_sum);
    auto rd = ring.slice(d);
    ev.dim_rd = rd->dim();
    ev.rd_basis = rd->quotient_basis();
    ev.blocks = pd.blocks;
    for (const auto& b : pd.blocks)
        if (b.source_degree == 0)
            ev.trivially_injective = true;
    ev.rank = rank(pd.matrix);
    ev.injective = ev.rank == ev.dim_rd;
    if (!ev.injective)
        ev.kernel = nullspace(pd.matrix);

    ev.prime = random_prime_62(seed ^ 0x9e3779b97f4a7c15ull);
    ev.modular_rank = rank_mod_p(pd.matrix, ev.prime);

    // R_d -> Hom(R_b, R_{b+d}) is injective iff the products R_b x R_{sigma-b-d}
    // span R_{sigma-d}, by non-degeneracy of the pairing into R_sigma.
    const long sigma = ring.sigma();
    ev.dual_target_degree = sigma - d;
    auto top = ring.slice(ev.dual_target_degree);
    ev.dual_target_dim = top->dim();
    RationalMatrix image(0, top->dim());
    for (const auto& blk : pd.blocks) {
        long c = sigma - blk.source_degree - d;
        auto sb = ring.slice(blk.source_degree), sc = ring.slice(c);
        for (const auto& x : sb->quotient_basis())
            for (const auto& y : sc->quotient_basis()) {
                auto v = top->project_monomial(x * y);
                image.append_row(v);
            }
    }
    if (image.rows() == 0) {
        ev.dual_rank = 0;
        for (const auto& m : top->quotient_basis())
            ev.cokernel.push_back(m);
    } else {
        ev.dual_rank = rank(image);
        for (auto c : non_pivot_columns(image))
            ev.cokernel.push_back(top->quotient_basis()[c]);
    }
    ev.dual_surjective = ev.dual_rank == ev.dual_target_dim;
    return ev;
}

std::vector<RationalVector> anti_torelli_kernel(const JacobianRing& ring, int n)
{
    return anti_torelli_kernel(ring, n, ring.weights().sum());
}

std::vector<RationalVector> anti_torelli_kernel(const JacobianRing& ring, int n, long weight_sum)
{
    return nullspace(period_differential(ring, n, weight_sum).matrix);
}

AmbientSurjectivity ambient_surjectivity_check(const WeightSystem& w, long b, long a)
{
    AmbientSurjectivity r;
    r.a = a;
    r.b = b;
    const long top = w.sigma() - a;
    if (b < 0 || top - b < 0) {
        // Empty source: onto only when the target is zero as well.
        r.uncovered = monomials_of_degree(w, top);
        r.surjective = r.uncovered.empty();
        return r;
    }
    // A monomial has a divisor of degree b iff some exponent vector below it
    // reaches exactly b.
    std::function<bool(const Monomial&, std::size_t, long)> has_divisor = [&](const Monomial& m, std::size_t i,
                                                                             long rest) -> bool {
        if (rest == 0)
            return true;
        if (i == m.size())
            return false;
        for (int e = std::min<long>(m[i], rest / w.weight(i)); e >= 0; --e)
            if (has_divisor(m, i + 1, rest - static_cast<long>(e) * w.weight(i)))
                return true;
        return false;
    };
    for (const auto& m : monomials_of_degree(w, top))
        if (!has_divisor(m, 0, b))
            r.uncovered.push_back(m);
    r.surjective = r.uncovered.empty();
    return r;
}

} // namespace wtorelli
