// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "helpers.hpp"
#include "properties.hpp"
#include "towers.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace wtorelli;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            detail += (detail.empty() ? "" : "; ") + what;
            pass = false;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_s; // 0 = none
    std::function<Result()> run;
};

std::string join(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

struct Process {
    int status = -1;
    std::string out;
};

Process run_cli(const std::string& args)
{
    Process p;
    std::string cmd = std::string(WTORELLI_CLI) + " " + args;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return p;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        p.out.append(buf, n);
    int st = ::pclose(pipe);
    p.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return p;
}

// ---------------------------------------------------------------------------

Result hilbert_golden()
{
    struct Case {
        std::string name;
        std::vector<int> w;
        int d;
        std::string equation; // empty: witness member
        std::vector<long long> expected;
    };
    const std::vector<Case> cases{
        {"115", {1, 2, 2, 3, 3}, 6, "x0^6 + x1^3 + x2^3 + x3^2 + x4^2", {1, 1, 3, 3, 4, 3, 3, 1, 1}},
        {"121", {1, 2, 3, 4, 5}, 8, "x0^8 + x1^4 + x2*x4 + x3^2", {1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1}},
        {"122",
         {2, 3, 4, 5, 7},
         14,
         "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2",
         {1, 0, 1, 1, 2, 2, 3, 3, 5, 4, 6, 5, 7, 6, 7, 6, 7, 5, 6, 4, 5, 3, 3, 2, 2, 1, 1, 0, 1}},
        {"127",
         {2, 3, 4, 5, 7},
         12,
         "x0^6 + x1^4 + x2^3 + x3*x4",
         {1, 0, 1, 1, 2, 1, 3, 2, 3, 2, 3, 2, 3, 1, 2, 1, 1, 0, 1}},
        {"114", {1, 1, 2, 3, 4}, 6, "x0^6 + x1^6 + x2^3 + x3^2 + x2*x4", {1, 2, 3, 4, 5, 4, 3, 2, 1}},
        {"quartic double solid", {1, 1, 1, 1, 2}, 4, "", {1, 4, 10, 16, 19, 16, 10, 4, 1}},
        {"104", {1, 1, 1, 1, 1}, 2, "", {1}},
        {"126", {1, 2, 3, 4, 5}, 6, "", {1}},
        {"129", {2, 3, 4, 5, 7}, 10, "", {1}},
    };
    Result r;
    for (const auto& c : cases) {
        WeightSystem w(c.w, c.d);
        std::vector<long long> closed;
        try {
            closed = hilbert_series_closed(w);
        } catch (const Error& e) {
            r.require(false, c.name + " closed form: " + e.what());
            continue;
        }
        auto f = c.equation.empty() ? generic_member(w, 0).equation : parse_polynomial(c.equation, w);
        JacobianRing ring(f);
        auto computed = hilbert_function_computed(ring, std::max<long>(w.sigma(), 0));
        r.require(closed == c.expected, c.name + " closed " + join(closed) + " != " + join(c.expected));
        r.require(computed == c.expected, c.name + " computed " + join(computed) + " != " + join(c.expected));
    }
    return r;
}

Result classification()
{
    Result r;
    auto p = run_cli("classify --all --json");
    r.require(p.status == 0, "exit status " + std::to_string(p.status));
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(p.out);
    } catch (const std::exception& e) {
        r.require(false, std::string("bad JSON: ") + e.what());
        return r;
    }
    std::set<int> at, rigid, torelli;
    for (const auto& v : doc["outputs"]["verdicts"]) {
        std::string code = v["code"];
        int id = v["family_id"];
        (code == "AT" ? at : code == "R" ? rigid : torelli).insert(id);
    }
    r.require(at == std::set<int>{115, 121, 122, 127}, "anti-Torelli set differs");
    r.require(rigid == std::set<int>{104, 113, 119, 120, 123, 126, 129, 130}, "rigid set differs");
    r.require(torelli.size() == 23, "Torelli count " + std::to_string(torelli.size()));
    r.require(doc["outputs"]["discrepancies"].empty(), "discrepancies reported");
    auto res = doc["outputs"]["resolution_104_105"];
    r.require(res.is_string() && res.get<std::string>().find("no.104 is confirmed") != std::string::npos,
              "104/105 resolution missing");
    if (r.pass)
        r.detail = "35 families; " + res.get<std::string>();
    return r;
}

Result kernel_golden()
{
    struct Case {
        std::vector<int> w;
        int d;
        std::string f;
        std::vector<std::string> expected;
    };
    const std::vector<Case> cases{
        {{1, 2, 2, 3, 3}, 6, "x0^6 + x1^3 + x2^3 + x3^2 + x4^2", {"x0^4*x1", "x0^4*x2"}},
        {{1, 2, 3, 4, 5}, 8, "x0^8 + x1^4 + x2*x4 + x3^2", {"x0^6*x1"}},
        {{2, 3, 4, 5, 7}, 14, "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2", {"x0*x1*x2*x3"}},
        {{2, 3, 4, 5, 7}, 12, "x0^6 + x1^4 + x2^3 + x3*x4", {"x0^3*x1^2", "x0*x1^2*x2"}},
    };
    Result r;
    for (const auto& c : cases) {
        auto f = testutil::poly(c.w, c.d, c.f);
        auto ring = JacobianRing::shared(f);
        auto kernel = anti_torelli_kernel(*ring, 3);
        std::vector<RationalVector> want;
        for (const auto& m : c.expected)
            want.push_back(testutil::coords(*ring, m, c.d));
        bool same = same_span(kernel, want, ring->dim(c.d));
        std::string got;
        for (const auto& v : kernel)
            got += (got.empty() ? "" : ", ") + format_class(ring->slice(c.d)->quotient_basis(), v);
        r.require(same, f.to_string() + ": kernel <" + got + ">");
    }
    return r;
}

Result duality_constant()
{
    Result r;
    auto f = testutil::poly({2, 3, 4, 5, 7}, 14, "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2");
    auto ring = JacobianRing::shared(f);
    auto socle = socle_generator(*ring);
    r.require(socle.to_string() == "x0^5*x1*x3^3", "socle representative " + socle.to_string());
    auto m = duality_pairing(*ring, 14);
    r.require(determinant(m) != 0, "pairing in degree 14 is singular");
    auto v = testutil::coords(*ring, "x0^5*x2", 14);
    auto w = dual_element(*ring, 14, v);
    auto e = testutil::coords(*ring, "x0*x1*x2*x3", 14);
    RationalVector want(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        want[i] = e[i] / 32;
    std::string got = format_class(ring->slice(14)->quotient_basis(), w);
    r.require(w == want, "dual of x0^5*x2 is " + got + ", expected 1/32*x0*x1*x2*x3");
    if (r.pass)
        r.detail = "dual of x0^5*x2 = " + got;
    return r;
}

Result tower_table_rows()
{
    const std::vector<std::tuple<int, std::string, std::string>> expected{
        {97, "0,10,10,0", "0,1,20,1,0"},  {98, "0,21,21,0", "0,3,37,3,0"},   {99, "0,38,38,0", "0,7,63,7,0"},
        {100, "0,49,49,0", "0,10,79,10,0"}, {101, "0,65,65,0", "0,14,103,14,0"}, {102, "0,66,66,0", "0,14,105,14,0"},
        {103, "0,45,45,0", "0,10,71,10,0"}, {104, "0,0,0,0", "0,0,2,0,0"},      {106, "0,3,3,0", "0,0,8,0,0"},
        {107, "0,8,8,0", "0,1,17,1,0"},     {108, "0,19,19,0", "0,3,33,3,0"},    {111, "0,1,1,0", "0,0,4,0,0"},
        {112, "0,4,4,0", "0,0,9,0,0"},      {113, "0,0,0,0", "0,0,2,0,0"},       {114, "0,2,2,0", "0,0,6,0,0"},
        {115, "0,1,1,0", "0,0,5,0,0"},      {116, "0,6,6,0", "0,1,13,1,0"},      {118, "0,1,1,0", "0,0,3,0,0"},
        {119, "0,0,0,0", "0,0,4,0,0"},      {120, "0,0,0,0", "0,0,2,0,0"},       {121, "0,1,1,0", "0,0,4,0,0"},
        {122, "0,3,3,0", "0,1,8,1,0"},      {123, "0,0,0,0", "0,0,1,0,0"},       {124, "0,2,2,0", "0,0,5,0,0"},
        {125, "0,3,3,0", "0,0,7,0,0"},      {126, "0,0,0,0", "0,0,2,0,0"},       {127, "0,1,1,0", "0,0,3,0,0"},
        {128, "0,1,1,0", "0,0,3,0,0"},      {129, "0,0,0,0", "0,0,3,0,0"},       {130, "0,0,0,0", "0,0,1,0,0"},
    };
    Result r;
    auto p = run_cli("tower --table2 --json");
    r.require(p.status == 0, "exit status " + std::to_string(p.status));
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(p.out);
    } catch (const std::exception& e) {
        r.require(false, std::string("bad JSON: ") + e.what());
        return r;
    }
    const auto& rows = doc["outputs"]["rows"];
    r.require(rows.size() == expected.size(), "row count " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < std::min(rows.size(), expected.size()); ++i) {
        auto [id, odd, even] = expected[i];
        const auto& row = rows[i];
        std::string tag = "row " + std::to_string(id);
        r.require(row["id"] == id, tag + " id " + row["id"].dump());
        r.require(row["odd"] == odd, tag + " odd " + row["odd"].get<std::string>() + " != " + odd);
        r.require(row["even"] == even, tag + " even " + row["even"].get<std::string>() + " != " + even);
    }
    if (r.pass)
        r.detail = "30 rows identical";
    return r;
}

Result periodicity()
{
    Result r;
    for (int id : {97, 115, 116, 122}) {
        auto f0 = generic_member(find_family(id)->weights, 0).equation;
        auto p = periodicity_check(f0, 3);
        std::string tag = "tower " + std::to_string(id);
        r.require(p.levels.size() == 7 && p.levels.back().dimension == 9, tag + ": levels");
        for (const auto& lv : p.levels)
            r.require(lv.matches, tag + " level " + std::to_string(lv.level) + " " + join(lv.primitive));
        r.require(p.cross_check.passed(), tag + ": extended ring check failed");
        r.require(p.passed, tag + ": periodicity");
    }
    if (r.pass)
        r.detail = "levels 0..6 (dims 3..9) on 97, 115, 116, 122; extended ring agrees at level 1";
    return r;
}

Result alternation()
{
    Result r;
    auto f0 = testutil::poly({2, 3, 4, 5, 7}, 14, "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2");
    auto a = alternation_check(f0, 4, 0);
    std::string seq;
    for (const auto& lv : a.levels)
        seq += (seq.empty() ? "" : " ") + std::to_string(lv.dimension) + ":" + label_code(lv.verdict);
    r.require(seq == "3:AT 4:T 5:AT 6:T 7:AT", seq);
    r.require(a.alternates, "not alternating");
    if (r.pass)
        r.detail = seq;
    return r;
}

Result property_suites()
{
    Result r;
    auto members = props::fermat_pair_members(50, 2024);
    r.require(members.size() == 50, "only " + std::to_string(members.size()) + " members");
    auto a = props::palindromic(members);
    r.require(a.ok, "(a) " + a.detail);
    auto b = props::duality({members.begin(), members.begin() + std::min<std::size_t>(10, members.size())});
    r.require(b.ok && b.checked == 10, "(b) " + b.detail);
    auto c = props::euler(100, 99);
    r.require(c.ok, "(c) " + c.detail);
    auto run = classify_all(higher_index_families(), 0);
    auto d = props::modular_agreement(run.verdicts, props::witness_equations());
    r.require(d.ok, "(d) " + d.detail);
    auto e = props::primal_dual(run.verdicts);
    r.require(e.ok && e.checked == 27, "(e) " + e.detail + " checked " + std::to_string(e.checked));
    if (r.pass) {
        std::ostringstream os;
        os << "(a) " << a.checked << " (b) " << b.checked << " (c) " << c.checked << " (d) " << d.checked << " (e) "
           << e.checked;
        r.detail = os.str();
    }
    return r;
}

Result numeric_criteria()
{
    Result r;
    auto fixture = load_fixture(WTORELLI_SOURCE_DIR "/data/famous95.csv");
    std::set<int> ids, accepted;
    for (const auto& f : fixture) {
        ids.insert(f.id);
        if (tu_condition(f.weights, f.weights.degree()).holds)
            accepted.insert(f.id);
    }
    r.require(ids.count(1) && ids.count(2) && ids.count(5), "fixture lacks 1, 2 or 5");
    std::string acc;
    for (int id : accepted)
        acc += (acc.empty() ? "" : ",") + std::to_string(id);
    r.require(accepted == std::set<int>{1, 2}, "accepted {" + acc + "}");
    auto g = tu_G_bound(WeightSystem({1, 1, 1, 1, 1}, 5));
    r.require(g.G == -1, "G(P^4) = " + to_string(g.G));
    for (const auto& fam : higher_index_families()) {
        auto b = tu_G_bound(fam.weights);
        r.require(b.G <= b.estimate, "no." + std::to_string(fam.id) + " G above -s+m(n+1)");
    }
    if (r.pass)
        r.detail = "accepted {" + acc + "} of " + std::to_string(fixture.size()) + "; G(P^4) = -1";
    return r;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "hilbert series golden set", 1, hilbert_golden},
        {2, "index>1 classification via classify --all", 120, classification},
        {3, "anti-Torelli kernel golden set", 10, kernel_golden},
        {4, "duality on the no.122 member", 10, duality_constant},
        {5, "tower Hodge rows via tower --table2", 60, tower_table_rows},
        {6, "tower periodicity, k_max = 3", 60, periodicity},
        {7, "no.122 tower alternation, dims 3-7", 30, alternation},
        {8, "property suites (a)-(e)", 0, property_suites},
        {9, "numeric Torelli criteria", 0, numeric_criteria},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && s >= c.limit_s)
            r.require(false, "over the time limit");
        char timing[64];
        if (c.limit_s > 0)
            std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, c.limit_s);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", s);
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.name << " (" << timing
                  << ")" << (r.detail.empty() ? "" : " -- " + r.detail) << std::endl;
        failed += r.pass ? 0 : 1;
    }
    std::cout << (failed ? std::to_string(failed) + " of 9 criteria failed" : "all 9 criteria passed") << std::endl;
    return failed ? 1 : 0;
}
