#include "towers.hpp"

#include <atomic>
#include <random>
#include <thread>

namespace wtorelli {

namespace {

WeightSystem base_weights_of(const TowerMember& m) { return m.base_equation.weights(); }

/// Index of a variable of weight t whose only appearance in f is c*x_i^2.
std::optional<std::size_t> square_variable(const WPolynomial& f, int t)
{
    const auto& w = f.weights();
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w.weight(i) != t)
            continue;
        bool only_square = true, has_square = false;
        for (const auto& [m, c] : f.terms()) {
            if (m[i] == 0)
                continue;
            if (m == Monomial::variable(w.size(), i, 2))
                has_square = true;
            else
                only_square = false;
        }
        if (has_square && only_square)
            return i;
    }
    return std::nullopt;
}

WPolynomial drop_variable(const WPolynomial& f, std::size_t i)
{
    const auto& w = f.weights();
    std::vector<int> ws(w.weights().begin(), w.weights().end());
    ws.erase(ws.begin() + static_cast<long>(i));
    WeightSystem nw(ws, w.degree());
    WPolynomial g(nw);
    for (const auto& [m, c] : f.terms()) {
        if (m[i] != 0)
            continue;
        std::vector<int> e(m.exponents().begin(), m.exponents().end());
        e.erase(e.begin() + static_cast<long>(i));
        g.add_term(Monomial(std::move(e)), c);
    }
    return g;
}

WPolynomial add_squares(const WPolynomial& f, int count, int t)
{
    if (count <= 0)
        return f;
    const auto& w = f.weights();
    WeightSystem nw = w.extended(t, count);
    WPolynomial g(nw);
    for (const auto& [m, c] : f.terms())
        g.add_term(m.padded(nw.size()), c);
    for (int j = 0; j < count; ++j)
        g.add_term(Monomial::variable(nw.size(), w.size() + static_cast<std::size_t>(j), 2), 1);
    return g;
}

std::vector<long long> padded(const std::vector<long long>& v, int k)
{
    std::vector<long long> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), static_cast<std::size_t>(k), 0);
    return out;
}

} // namespace

WPolynomial TowerMember::equation() const
{
    if (level >= 0)
        return add_squares(base_equation, level, t);
    WPolynomial g = base_equation;
    for (int j = 0; j < -level; ++j)
        g = drop_variable(g, *square_variable(g, t));
    return g;
}

TowerMember tower_base(const WPolynomial& f0, int base_id)
{
    const auto& w = f0.weights();
    if (w.degree() % 2 != 0)
        throw Error("no tower for odd degree " + std::to_string(w.degree()));
    TowerMember m;
    m.base_id = base_id;
    m.level = 0;
    m.base_equation = f0;
    m.weights = w;
    m.t = w.degree() / 2;
    m.dimension = w.dimension();
    m.weight_sum = w.sum();
    m.twist = w.degree() - w.sum();
    return m;
}

TowerMember extend(const TowerMember& member)
{
    if (member.t == 0 || base_weights_of(member).degree() % 2 != 0)
        throw Error("no tower for odd degree");
    TowerMember m = member;
    m.level += 1;
    m.dimension += 1;
    m.weight_sum += m.t;
    m.twist -= m.t;
    if (member.level >= 0)
        m.weights = member.weights.extended(m.t);
    else
        m.weights = m.equation().weights();
    return m;
}

int max_lowering(const WPolynomial& f0)
{
    if (f0.weights().degree() % 2 != 0)
        return 0;
    int t = f0.weights().degree() / 2;
    int count = 0;
    WPolynomial g = f0;
    while (g.weights().size() > 1) {
        auto i = square_variable(g, t);
        if (!i)
            break;
        g = drop_variable(g, *i);
        ++count;
    }
    return count;
}

TowerMember lower(const TowerMember& member)
{
    if (member.level > 0) {
        TowerMember m = member;
        m.level -= 1;
        m.dimension -= 1;
        m.weight_sum -= m.t;
        m.twist += m.t;
        std::vector<int> ws(m.weights.weights().begin(), m.weights.weights().end() - 1);
        m.weights = WeightSystem(ws, m.weights.degree());
        return m;
    }
    if (-member.level >= max_lowering(member.base_equation))
        throw Error("no variable of weight " + std::to_string(member.t) + " enters only as a square");
    TowerMember m = member;
    m.level -= 1;
    m.dimension -= 1;
    m.weight_sum -= m.t;
    m.twist += m.t;
    m.weights = m.equation().weights();
    return m;
}

HodgeVector tower_hodge(const TowerMember& member)
{
    auto ring = JacobianRing::shared(member.base_equation);
    return hodge_numbers(*ring, member.dimension, member.weight_sum);
}

ExtendedRingCheck extended_ring_check(const WPolynomial& f0, int level)
{
    ExtendedRingCheck c;
    c.level = level;
    auto base = JacobianRing::shared(f0);
    TowerMember m = tower_base(f0);
    while (m.level < level)
        m = extend(m);
    while (m.level > level)
        m = lower(m);
    JacobianRing ext(m.equation());
    c.quasi_smooth = quasi_smooth_check(ext).quasi_smooth;
    long top = std::max(base->sigma(), ext.sigma());
    c.hilbert_function = hilbert_function_computed(ext, top);
    c.hilbert_function_equal = c.hilbert_function == hilbert_function_computed(*base, top);
    c.hodge = hodge_numbers(ext, m.dimension);
    auto shifted = tower_hodge(m);
    c.hodge_equal = c.hodge.primitive == shifted.primitive && c.hodge.total == shifted.total;
    return c;
}

PeriodicityResult periodicity_check(const WPolynomial& f0, int k_max)
{
    PeriodicityResult r;
    TowerMember m = tower_base(f0);
    std::vector<std::vector<long long>> seeds;
    bool ok = true;
    for (int j = 0; j <= 2 * k_max; ++j) {
        PeriodicityLevel lv;
        lv.level = j;
        lv.dimension = m.dimension;
        lv.primitive = tower_hodge(m).primitive;
        if (j < 2)
            seeds.push_back(lv.primitive);
        lv.expected = padded(seeds[static_cast<std::size_t>(j % 2)], j / 2);
        lv.matches = lv.primitive == lv.expected;
        ok = ok && lv.matches;
        r.levels.push_back(std::move(lv));
        m = extend(m);
    }
    r.cross_check = extended_ring_check(f0, 1);
    r.passed = ok && r.cross_check.passed();
    return r;
}

bool k3_type_check(const WeightSystem& w) { return w.degree() % 2 == 0 && w.degree() / 2 == w.index(); }

AlternationResult alternation_check(const WPolynomial& f0, int k_max, std::uint64_t seed)
{
    AlternationResult r;
    auto ring = JacobianRing::shared(f0);
    TowerMember m = tower_base(f0);
    bool ok = true;
    for (int j = 0; j <= k_max; ++j) {
        AlternationLevel lv;
        lv.level = j;
        lv.dimension = m.dimension;
        auto ev = torelli_check(*ring, m.dimension, m.weight_sum, seed);
        lv.verdict = ev.injective ? Label::Torelli : Label::AntiTorelli;
        lv.trivially_injective = ev.trivially_injective;
        lv.kernel = ev.kernel;
        lv.rd_basis = ev.rd_basis;
        Label want = m.dimension % 2 ? Label::AntiTorelli : Label::Torelli;
        ok = ok && lv.verdict == want;
        r.levels.push_back(std::move(lv));
        m = extend(m);
    }
    r.alternates = ok;
    return r;
}

TowerTable tower_table(const std::vector<FanoFamily>& families, std::uint64_t seed, unsigned workers)
{
    TowerTable table;
    std::vector<const FanoFamily*> todo;
    for (const auto& f : families) {
        if (f.weights.degree() % 2 != 0)
            table.skipped.push_back(f.id);
        else
            todo.push_back(&f);
    }
    table.rows.resize(todo.size());
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr err;
    auto work = [&] {
        for (std::size_t i; (i = next++) < todo.size();) {
            try {
                const auto& fam = *todo[i];
                auto member = generic_member(fam.weights, seed);
                TowerMember m = tower_base(member.equation, fam.id);
                TowerRow row;
                row.id = fam.id;
                row.weights = fam.weights;
                row.odd = tower_hodge(m);
                row.even = tower_hodge(extend(m));
                table.rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers && t < todo.size(); ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
    std::sort(table.rows.begin(), table.rows.end(), [](auto& a, auto& b) { return a.id < b.id; });
    return table;
}

bool double_cover_slice_dims_match(const WPolynomial& f0, std::uint64_t seed)
{
    const int t = f0.weights().degree() / 2;
    auto special = add_squares(f0, 1, t);
    const auto& w = special.weights();
    const std::size_t y = w.size() - 1;
    // f_0 + y^2 + y*h with h a random form of weight t in the old variables;
    // completing the square turns it back into the special member.
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    WPolynomial generic = special;
    for (const auto& m : monomials_of_degree(f0.weights(), t))
        if (int c = coef(gen); c != 0)
            generic.add_term(m.padded(w.size()) * Monomial::variable(w.size(), y), c);
    JacobianRing a(special), b(generic);
    for (long k = 0; k <= w.sigma() + w.max_weight(); ++k)
        if (a.dim(k) != b.dim(k))
            return false;
    return true;
}

} // namespace wtorelli
