#include "graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wtorelli {

Rational parse_rational(const std::string& text)
{
    auto valid = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size())
            return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational '" + text + "'");
    Integer n(num), dd(den);
    if (dd == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational q(n, dd);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// WeightSystem

WeightSystem::WeightSystem(std::vector<int> weights, int degree)
    : weights_(std::move(weights)), degree_(degree)
{
    if (weights_.empty())
        throw std::invalid_argument("weight list is empty");
    if (degree_ < 1)
        throw std::invalid_argument("degree must be positive");
    for (int a : weights_) {
        if (a < 1)
            throw std::invalid_argument("weights must be positive");
        sum_ += a;
        lcm_ = std::lcm(lcm_, static_cast<long>(a));
    }
}

long WeightSystem::sigma() const
{
    return static_cast<long>(weights_.size()) * degree_ - 2 * sum_;
}

int WeightSystem::max_weight() const { return *std::max_element(weights_.begin(), weights_.end()); }

bool WeightSystem::well_formed() const
{
    if (weights_.size() < 2)
        return true;
    for (std::size_t skip = 0; skip < weights_.size(); ++skip) {
        int g = 0;
        for (std::size_t i = 0; i < weights_.size(); ++i)
            if (i != skip)
                g = std::gcd(g, weights_[i]);
        if (g != 1)
            return false;
    }
    return true;
}

WeightSystem WeightSystem::extended(int weight, int count) const
{
    auto w = weights_;
    w.insert(w.end(), static_cast<std::size_t>(count), weight);
    return {std::move(w), degree_};
}

std::string WeightSystem::to_string() const
{
    std::ostringstream os;
    os << "X_" << degree_ << " in P(";
    for (std::size_t i = 0; i < weights_.size(); ++i)
        os << (i ? "," : "") << weights_[i];
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents))
{
    for (int e : exps_)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power)
{
    std::vector<int> e(nvars, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (other.size() != size())
        throw std::invalid_argument("monomial arity mismatch");
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] -= other.exps_[i];
    return r;
}

Monomial Monomial::padded(std::size_t nvars) const
{
    auto e = exps_;
    e.resize(nvars, 0);
    return Monomial(std::move(e));
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += "x" + std::to_string(i);
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

long wdeg(const Monomial& mono, const WeightSystem& w)
{
    if (mono.size() != w.size())
        throw std::invalid_argument("monomial has " + std::to_string(mono.size()) +
                                    " exponents but the weight system has " +
                                    std::to_string(w.size()) + " variables");
    long d = 0;
    for (std::size_t i = 0; i < mono.size(); ++i)
        d += static_cast<long>(mono[i]) * w.weight(i);
    return d;
}

bool MonomialOrder::greater_same_degree(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i];
    }
    return false;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b, const WeightSystem& w)
{
    long da = wdeg(a, w), db = wdeg(b, w);
    if (da != db)
        return da > db;
    return greater_same_degree(a, b);
}

namespace {

void enumerate(std::span<const int> weights, std::size_t i, long remaining, std::vector<int>& cur,
               std::vector<Monomial>& out)
{
    if (i + 1 == weights.size()) {
        if (remaining % weights[i] == 0) {
            cur[i] = static_cast<int>(remaining / weights[i]);
            out.emplace_back(cur);
        }
        return;
    }
    for (long e = 0; e * weights[i] <= remaining; ++e) {
        cur[i] = static_cast<int>(e);
        enumerate(weights, i + 1, remaining - e * weights[i], cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const WeightSystem& w, long k)
{
    std::vector<Monomial> out;
    if (k < 0)
        return out;
    std::vector<int> cur(w.size(), 0);
    enumerate(w.weights(), 0, k, cur, out);
    std::sort(out.begin(), out.end(), MonomialOrder::greater_same_degree);
    return out;
}

std::uint64_t count_monomials(std::span<const int> weights, long k)
{
    if (k < 0)
        return 0;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    for (int a : weights)
        for (long j = a; j <= k; ++j)
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - a)];
    return c[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// WPolynomial

WPolynomial::WPolynomial(WeightSystem w, std::map<Monomial, Rational> terms) : w_(std::move(w))
{
    for (auto& [m, c] : terms)
        add_term(m, c);
}

WPolynomial WPolynomial::homogeneous(WeightSystem w, std::map<Monomial, Rational> terms, long degree)
{
    WPolynomial p(std::move(w), std::move(terms));
    for (const auto& [m, c] : p.terms_) {
        if (wdeg(m, p.w_) != degree) {
            Rational shown(c);
            throw NotHomogeneousError("term " + wtorelli::to_string(shown) + "*" + m.to_string() +
                                      " has weighted degree " + std::to_string(wdeg(m, p.w_)) +
                                      ", expected " + std::to_string(degree));
        }
    }
    return p;
}

void WPolynomial::check_arity(const Monomial& m) const
{
    if (m.size() != w_.size())
        throw std::invalid_argument("monomial arity does not match the weight system");
}

Rational WPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> WPolynomial::homogeneous_degree() const
{
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        long k = wdeg(m, w_);
        if (deg && *deg != k)
            return std::nullopt;
        deg = k;
    }
    return deg;
}

void WPolynomial::add_term(const Monomial& m, const Rational& c)
{
    check_arity(m);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

WPolynomial WPolynomial::operator+(const WPolynomial& o) const
{
    if (!(o.w_ == w_))
        throw std::invalid_argument("polynomials live in different weighted spaces");
    WPolynomial r(*this);
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

WPolynomial WPolynomial::operator-(const WPolynomial& o) const { return *this + o * Rational(-1); }

WPolynomial WPolynomial::operator*(const WPolynomial& o) const
{
    if (!(o.w_ == w_))
        throw std::invalid_argument("polynomials live in different weighted spaces");
    WPolynomial r(w_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

WPolynomial WPolynomial::operator*(const Rational& c) const
{
    WPolynomial r(w_);
    if (c == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, v * c);
    return r;
}

WPolynomial WPolynomial::times(const Monomial& m) const
{
    check_arity(m);
    WPolynomial r(w_);
    for (const auto& [t, c] : terms_)
        r.terms_.emplace(t * m, c);
    return r;
}

WPolynomial WPolynomial::derivative(std::size_t var) const
{
    if (var >= w_.size())
        throw std::out_of_range("variable index out of range");
    WPolynomial r(w_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0)
            continue;
        std::vector<int> ex(m.exponents().begin(), m.exponents().end());
        ex[var] -= 1;
        r.add_term(Monomial(std::move(ex)), c * e);
    }
    return r;
}

std::string WPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Monomial, Rational>*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [this](auto* a, auto* b) { return MonomialOrder::greater(a->first, b->first, w_); });
    std::string out;
    bool first = true;
    for (auto* t : order) {
        Rational c = t->second;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool is_one = t->first == Monomial::one(w_.size());
        if (is_one)
            out += wtorelli::to_string(c);
        else if (c == 1)
            out += t->first.to_string();
        else
            out += wtorelli::to_string(c) + "*" + t->first.to_string();
    }
    return out;
}

std::vector<WPolynomial> partial_derivatives(const WPolynomial& f)
{
    std::vector<WPolynomial> out;
    out.reserve(f.weights().size());
    for (std::size_t i = 0; i < f.weights().size(); ++i)
        out.push_back(f.derivative(i));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& text, const WeightSystem& w) : s_(text), w_(w) {}

    WPolynomial parse()
    {
        std::map<Monomial, Rational> terms;
        std::vector<std::string> shown;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            std::size_t start = pos_;
            auto [m, c] = term();
            std::string raw = s_.substr(start, pos_ - start);
            while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
                raw.pop_back();
            long k = wdeg(m, w_);
            if (k != w_.degree())
                throw NotHomogeneousError("term '" + raw + "' has weighted degree " + std::to_string(k) +
                                          ", expected " + std::to_string(w_.degree()));
            auto [it, inserted] = terms.try_emplace(m, c * sign);
            if (!inserted)
                it->second += c * sign;
            first = false;
        }
        return WPolynomial(w_, std::move(terms));
    }

  private:
    std::pair<Monomial, Rational> term()
    {
        Rational coef(1);
        std::vector<int> ex(w_.size(), 0);
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = number();
            have_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                variable(ex);
            } else if (peek() == 'x') {
                variable(ex);
            }
        } else {
            variable(ex);
            have_factor = true;
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek())))
                coef *= number();
            else
                variable(ex);
            skip_ws();
        }
        if (!have_factor)
            fail("expected a term");
        return {Monomial(std::move(ex)), coef};
    }

    Rational number()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (peek() == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (dstart == pos_)
                fail("expected denominator");
        }
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    void variable(std::vector<int>& ex)
    {
        if (peek() != 'x')
            fail("expected a variable x0..x" + std::to_string(w_.size() - 1));
        ++pos_;
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected variable index after 'x'");
        std::size_t idx = std::stoul(s_.substr(start, pos_ - start));
        if (idx >= ex.size())
            fail("variable x" + std::to_string(idx) + " out of range for " + std::to_string(ex.size()) +
                 " weights");
        int power = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t pstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (pstart == pos_)
                fail("expected exponent after '^'");
            power = std::stoi(s_.substr(pstart, pos_ - pstart));
        }
        ex[idx] += power;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    const std::string& s_;
    const WeightSystem& w_;
    std::size_t pos_ = 0;
};

} // namespace

WPolynomial parse_polynomial(const std::string& text, const WeightSystem& w)
{
    return PolyParser(text, w).parse();
}

std::vector<int> parse_weight_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ParseError("empty entry in weight list '" + text + "'");
        item = item.substr(b, e - b + 1);
        if (!std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("weight '" + item + "' is not a positive integer");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw ParseError("empty weight list");
    return out;
}

} // namespace wtorelli
