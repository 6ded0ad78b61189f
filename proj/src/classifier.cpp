#include "classifier.hpp"

#include <atomic>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace wtorelli {

std::string label_name(Label l)
{
    switch (l) {
    case Label::Torelli:
        return "Torelli";
    case Label::AntiTorelli:
        return "AntiTorelli";
    case Label::HodgeRigid:
        return "HodgeRigid";
    case Label::StronglyRigid:
        return "StronglyRigid";
    }
    return "?";
}

std::string label_code(Label l)
{
    switch (l) {
    case Label::Torelli:
        return "T";
    case Label::AntiTorelli:
        return "AT";
    default:
        return "R";
    }
}

const std::vector<FanoFamily>& higher_index_families()
{
    struct Row {
        int id;
        std::vector<int> w;
        int d;
        const char* label;
    };
    static const std::vector<FanoFamily> table = [] {
        const Row rows[] = {
            {96, {1, 1, 1, 1, 1}, 3, "T"},    {97, {1, 1, 1, 1, 2}, 4, "T"},    {98, {1, 1, 1, 2, 3}, 6, "T"},
            {99, {1, 1, 2, 3, 5}, 10, "T"},   {100, {1, 2, 3, 5, 9}, 18, "T"},  {101, {1, 2, 3, 7, 11}, 22, "T"},
            {102, {1, 2, 5, 7, 13}, 26, "T"}, {103, {2, 3, 5, 11, 19}, 38, "T"}, {104, {1, 1, 1, 1, 1}, 2, "R"},
            {105, {1, 1, 1, 1, 2}, 3, "T"},   {106, {1, 1, 1, 2, 2}, 4, "T"},   {107, {1, 1, 2, 2, 3}, 6, "T"},
            {108, {1, 2, 3, 4, 5}, 12, "T"},  {109, {1, 2, 3, 5, 7}, 15, "T"},  {110, {1, 3, 5, 7, 8}, 21, "T"},
            {111, {1, 1, 1, 2, 3}, 4, "T"},   {112, {1, 1, 2, 3, 3}, 6, "T"},   {113, {1, 1, 2, 2, 3}, 4, "R"},
            {114, {1, 1, 2, 3, 4}, 6, "T"},   {115, {1, 2, 2, 3, 3}, 6, "AT"},  {116, {1, 2, 3, 4, 5}, 10, "T"},
            {117, {1, 3, 4, 5, 7}, 15, "T"},  {118, {1, 1, 2, 3, 5}, 6, "T"},   {119, {1, 2, 2, 3, 5}, 6, "R"},
            {120, {1, 2, 3, 3, 4}, 6, "R"},   {121, {1, 2, 3, 4, 5}, 8, "AT"},  {122, {2, 3, 4, 5, 7}, 14, "AT"},
            {123, {1, 2, 3, 3, 5}, 6, "R"},   {124, {1, 2, 3, 5, 7}, 10, "T"},  {125, {1, 3, 4, 5, 7}, 12, "T"},
            {126, {1, 2, 3, 4, 5}, 6, "R"},   {127, {2, 3, 4, 5, 7}, 12, "AT"}, {128, {1, 4, 5, 6, 7}, 12, "T"},
            {129, {2, 3, 4, 5, 7}, 10, "R"},  {130, {3, 4, 5, 6, 7}, 12, "R"},
        };
        std::vector<FanoFamily> out;
        for (const auto& r : rows)
            out.push_back({r.id, WeightSystem(r.w, r.d), r.label});
        return out;
    }();
    return table;
}

std::optional<FanoFamily> find_family(int id)
{
    for (const auto& f : higher_index_families())
        if (f.id == id)
            return f;
    return std::nullopt;
}

std::vector<FanoFamily> parse_fixture(const std::string& text, const std::string& origin)
{
    std::vector<FanoFamily> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            auto b = field.find_first_not_of(" \t\r");
            auto e = field.find_last_not_of(" \t\r");
            fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
        }
        auto fail = [&](const std::string& why) {
            throw ParseError(origin + ":" + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() != 7 && fields.size() != 8)
            fail("expected id,a0,a1,a2,a3,a4,d,expected_label");
        std::vector<int> nums;
        for (std::size_t i = 0; i < 7; ++i) {
            try {
                std::size_t used = 0;
                int v = std::stoi(fields[i], &used);
                if (used != fields[i].size())
                    fail("bad integer '" + fields[i] + "'");
                nums.push_back(v);
            } catch (const std::logic_error&) {
                fail("bad integer '" + fields[i] + "'");
            }
        }
        std::string label = fields.size() == 8 ? fields[7] : "";
        if (!label.empty() && label != "T" && label != "AT" && label != "R")
            fail("expected label must be T, AT or R");
        try {
            out.push_back({nums[0], WeightSystem({nums[1], nums[2], nums[3], nums[4], nums[5]}, nums[6]), label});
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    return out;
}

std::vector<FanoFamily> load_fixture(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), path);
}

// ---------------------------------------------------------------------------
// Witness members

namespace {

struct PairChoice {
    std::size_t var;
    std::vector<Monomial> options; // x_var^e * x_j, preferred first
};

bool is_quasi_smooth(const WPolynomial& f) { return quasi_smooth_check(*JacobianRing::shared(f)).quasi_smooth; }

WPolynomial assemble(const WeightSystem& w, const std::vector<Monomial>& terms)
{
    std::map<Monomial, Rational> t;
    for (const auto& m : terms)
        t[m] = 1;
    return WPolynomial::homogeneous(w, std::move(t), w.degree());
}

} // namespace

Member generic_member(const WeightSystem& w, std::uint64_t seed)
{
    const std::size_t n = w.size();
    const int d = w.degree();
    std::vector<Monomial> base;
    std::vector<PairChoice> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        if (d % w.weight(i) == 0) {
            base.push_back(Monomial::variable(n, i, d / w.weight(i)));
            continue;
        }
        PairChoice pc{i, {}};
        std::vector<std::size_t> js;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && d - w.weight(j) > 0 && (d - w.weight(j)) % w.weight(i) == 0)
                js.push_back(j);
        std::stable_sort(js.begin(), js.end(), [&](std::size_t a, std::size_t b) { return w.weight(a) > w.weight(b); });
        for (auto j : js) {
            auto m = Monomial::variable(n, i, (d - w.weight(j)) / w.weight(i)) * Monomial::variable(n, j);
            pc.options.push_back(m);
        }
        pairs.push_back(std::move(pc));
    }

    int attempts = 0;
    auto dedup = [](std::vector<Monomial> v) {
        std::set<Monomial> seen;
        std::vector<Monomial> out;
        for (auto& m : v)
            if (seen.insert(m).second)
                out.push_back(m);
        return out;
    };

    bool pairs_possible = std::all_of(pairs.begin(), pairs.end(), [](auto& p) { return !p.options.empty(); });
    if (pairs_possible) {
        // Greedy: largest partner weight first, preferring partners not yet
        // used by another pair.
        std::vector<Monomial> terms = base;
        std::set<std::size_t> used;
        for (const auto& pc : pairs) {
            const Monomial* pick = &pc.options.front();
            for (const auto& m : pc.options) {
                std::size_t j = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != pc.var && m[k] > 0)
                        j = k;
                if (!used.count(j)) {
                    pick = &m;
                    break;
                }
            }
            for (std::size_t k = 0; k < n; ++k)
                if (k != pc.var && (*pick)[k] > 0)
                    used.insert(k);
            terms.push_back(*pick);
        }
        ++attempts;
        auto f = assemble(w, dedup(terms));
        if (is_quasi_smooth(f))
            return {f, pairs.empty() ? "fermat" : "fermat+pairs", attempts};

        // Odometer over all partner combinations, bounded.
        std::vector<std::size_t> digit(pairs.size(), 0);
        for (int step = 0; step < 256; ++step) {
            std::size_t k = 0;
            while (k < digit.size() && ++digit[k] == pairs[k].options.size())
                digit[k++] = 0;
            if (k == digit.size())
                break;
            terms = base;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                terms.push_back(pairs[i].options[digit[i]]);
            ++attempts;
            auto g = assemble(w, dedup(terms));
            if (is_quasi_smooth(g))
                return {g, "pairs-search", attempts};
        }
    }

    // Random sparse members with small integer coefficients on top of the
    // pure powers and every candidate pair.
    auto all = monomials_of_degree(w, d);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> coef(1, 7);
    std::bernoulli_distribution keep(0.5);
    for (int r = 0; r < 64; ++r) {
        std::map<Monomial, Rational> t;
        for (const auto& m : base)
            t[m] = coef(gen);
        for (const auto& pc : pairs)
            for (const auto& m : pc.options)
                t[m] = coef(gen);
        for (const auto& m : all)
            if (!t.count(m) && keep(gen))
                t[m] = coef(gen) * (keep(gen) ? 1 : -1);
        ++attempts;
        auto f = WPolynomial::homogeneous(w, std::move(t), d);
        if (is_quasi_smooth(f))
            return {f, "random", attempts};
    }
    throw Error("no quasi-smooth member found for " + w.to_string() + " after " + std::to_string(attempts) +
                " attempts");
}

// ---------------------------------------------------------------------------
// Classification

TorelliVerdict classify(const FanoFamily& family, std::uint64_t seed)
{
    TorelliVerdict v;
    v.family_id = family.id;
    v.weights = family.weights;
    v.expected = family.expected;
    v.seed = seed;
    const auto& w = family.weights;
    v.dimension = w.dimension();
    v.sigma = w.sigma();
    v.index = w.index();
    const long d = w.degree();

    try {
        v.hp_closed = hilbert_series_closed(w);
    } catch (const Error& e) {
        v.hp_closed_error = e.what();
    }

    v.member = generic_member(w, seed);
    auto ring = JacobianRing::shared(v.member.equation);
    v.dim_rd = ring->dim(d);
    v.dim_r_d_iota = ring->dim(d - v.index);
    v.fast_d_below_index = d < v.index;
    v.fast_d_above_sigma = d > v.sigma;
    v.hodge = hodge_numbers(*ring, v.dimension);

    for (long k = 1; k <= v.sigma; ++k)
        if (ring->dim(k) != 0) {
            v.first_positive_degree = k;
            break;
        }

    auto pd_blocks = period_differential(*ring, v.dimension, w.sum()).blocks;
    bool rigid = v.dimension == 3 ? (v.dim_rd == 0 && v.dim_r_d_iota == 0) : (v.dim_rd == 0 && pd_blocks.empty());
    if (rigid) {
        v.label = v.first_positive_degree ? Label::HodgeRigid : Label::StronglyRigid;
    } else {
        v.evidence = torelli_check(*ring, v.dimension, seed);
        v.label = v.evidence->injective ? Label::Torelli : Label::AntiTorelli;
    }
    v.matches_expected = v.expected.empty() || v.expected == label_code(v.label);
    return v;
}

ClassificationRun classify_all(const std::vector<FanoFamily>& families, std::uint64_t seed, unsigned workers)
{
    ClassificationRun run;
    run.verdicts.resize(families.size());
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(families.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto work = [&] {
        for (std::size_t i; (i = next++) < families.size();) {
            try {
                run.verdicts[i] = classify(families[i], seed);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!first_error)
                    first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);

    std::stable_sort(run.verdicts.begin(), run.verdicts.end(),
                     [](const auto& a, const auto& b) { return a.family_id < b.family_id; });
    for (const auto& v : run.verdicts)
        if (!v.matches_expected)
            run.discrepancies.push_back({v.family_id, v.expected, label_code(v.label)});
    return run;
}

std::string resolve_104_105(const std::vector<TorelliVerdict>& verdicts)
{
    const TorelliVerdict *v104 = nullptr, *v105 = nullptr;
    for (const auto& v : verdicts) {
        if (v.family_id == 104)
            v104 = &v;
        if (v.family_id == 105)
            v105 = &v;
    }
    if (!v104 || !v105)
        return "families 104 and 105 were not both classified";
    bool rigid104 = v104->label == Label::HodgeRigid || v104->label == Label::StronglyRigid;
    bool rigid105 = v105->label == Label::HodgeRigid || v105->label == Label::StronglyRigid;
    std::ostringstream os;
    os << "no.104: dim R_d = " << v104->dim_rd << ", dim R_{d-i} = " << v104->dim_r_d_iota << " -> "
       << label_name(v104->label) << "; no.105: dim R_d = " << v105->dim_rd << ", dim R_{d-i} = " << v105->dim_r_d_iota
       << " -> " << label_name(v105->label) << ". ";
    if (rigid104 && !rigid105)
        os << "The rigid list containing no.104 is confirmed; no.105 is not rigid.";
    else if (rigid105 && !rigid104)
        os << "The rigid list containing no.105 is confirmed; no.104 is not rigid.";
    else
        os << "Neither list is confirmed as stated.";
    return os.str();
}

// ---------------------------------------------------------------------------
// Numeric criteria

TuBound tu_G_bound(const WeightSystem& w)
{
    const std::size_t N = w.size(); // n + 2
    const long n = static_cast<long>(N) - 2;
    if (n < 0)
        throw std::invalid_argument("tu_G_bound needs at least two weights");
    auto binom = [](long a, long b) {
        Integer r = 1;
        for (long i = 1; i <= b; ++i)
            r = r * (a - b + i) / i;
        return r;
    };
    Rational total = 0;
    for (std::size_t k = 2; k <= N; ++k) {
        Integer inner = 0;
        // Subsets of size k by bitmask; N is small.
        for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountl(mask)) != k)
                continue;
            long l = 1;
            for (std::size_t j = 0; j < N; ++j)
                if (mask >> j & 1)
                    l = std::lcm(l, static_cast<long>(w.weight(j)));
            inner += l;
        }
        total += Rational(inner, binom(n, static_cast<long>(k) - 2));
    }
    TuBound b;
    b.G = Rational(-w.sum()) + total / (n + 1);
    b.G.canonicalize();
    b.estimate = Rational(-w.sum() + w.lcm() * (n + 1));
    return b;
}

TuCertificate tu_condition(const WeightSystem& w, long d)
{
    TuCertificate c;
    const long n = w.dimension();
    const long s = w.sum(), m = w.lcm();
    for (long p = 1; p <= n; ++p) {
        if (s % std::gcd(m, p) != 0)
            continue;
        if ((d * p - s) % m != 0)
            continue;
        long k = (d * p - s) / m;
        Rational bound = Rational((n + 1) * p, n + 1 - p) - Rational(s, m);
        if (k < 0 || Rational(k) < bound)
            continue;
        c.all.emplace_back(static_cast<int>(p), k);
    }
    if (!c.all.empty()) {
        c.holds = true;
        c.p = c.all.front().first;
        c.k = c.all.front().second;
    }
    return c;
}

bool donagi_tu_condition(const WeightSystem& w, long d)
{
    if (w.size() < 2 || w.weight(0) != 1 || w.weight(1) != 1)
        return false;
    const long s = w.sum(), m = w.lcm(), n = w.dimension();
    return s % m == 0 && d % m == 0 && d >= std::max(3 * s, s + m * (n + 1));
}

} // namespace wtorelli
