#include <wtorelli/wtorelli.h>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_weights(const std::string& text)
{
    std::vector<int> w;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || c == ' ') {
            if (cur.empty())
                continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(cur, &used);
                if (used != cur.size())
                    throw std::invalid_argument(cur);
                w.push_back(v);
            } catch (const std::exception&) {
                throw UsageError("bad weight '" + cur + "' in '" + text + "'");
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (w.empty())
        throw UsageError("empty weight list");
    return w;
}

long parse_long(const std::string& text, const char* what)
{
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
}

// Positional target: "ID" or "W D" (W comma separated). An ID followed by
// nothing selects the embedded family.
struct Target {
    int id = 0;
    std::vector<int> weights;
    long degree = 0;
    bool explicit_weights() const { return !weights.empty(); }
};

Target parse_target(const std::vector<std::string>& pos, bool allow_id)
{
    Target t;
    if (pos.size() == 1 && allow_id && pos[0].find(',') == std::string::npos) {
        t.id = static_cast<int>(parse_long(pos[0], "family id"));
        return t;
    }
    if (pos.size() == 2) {
        t.weights = parse_weights(pos[0]);
        t.degree = parse_long(pos[1], "degree");
        return t;
    }
    throw UsageError(allow_id ? "expected a family id or WEIGHTS DEGREE" : "expected WEIGHTS DEGREE");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Infinitesimal Torelli for quasi-smooth weighted hypersurfaces"};
    app.set_version_flag("--version", std::string(wt_version()));
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool as_json = false, as_csv = false;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "seed for witness members and the modular prime");
        auto* j = sub->add_flag("--json", as_json, "emit the JSON report");
        auto* c = sub->add_flag("--csv", as_csv, "emit CSV");
        j->excludes(c);
    };

    std::vector<std::string> pos;
    std::optional<std::string> equation;
    int dimension = -1;
    int levels = 2;
    bool all = false, table2 = false;
    std::optional<std::string> fixture;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert-Poincare series and weight invariants");
    hilbert->add_option("target", pos, "WEIGHTS DEGREE, e.g. 1,2,2,3,3 6")->expected(2);
    common(hilbert);

    auto* qs = app.add_subcommand("quasismooth", "quasi-smoothness of a member");
    qs->add_option("target", pos, "WEIGHTS DEGREE")->expected(2);
    qs->add_option("--equation", equation, "member equation, e.g. 'x0^6 + x1^3 + x2^3'");
    common(qs);

    auto* hodge = app.add_subcommand("hodge", "primitive and total Hodge numbers");
    hodge->add_option("target", pos, "WEIGHTS DEGREE")->expected(2);
    hodge->add_option("--equation", equation, "member equation");
    hodge->add_option("--dim", dimension, "dimension (default #weights - 2; other values shift along the tower)");
    common(hodge);

    auto* classify = app.add_subcommand("classify", "Torelli / anti-Torelli / rigid verdict");
    classify->add_option("target", pos, "family id (96-130) or WEIGHTS DEGREE")->expected(0, 2);
    classify->add_flag("--all", all, "classify families 96-130 and compare with the tabulated labels");
    classify->add_option("--fixture", fixture, "with --all: classify the families of a CSV fixture instead");
    common(classify);

    auto* kernel = app.add_subcommand("kernel", "kernel of the period differential");
    kernel->add_option("target", pos, "family id or WEIGHTS DEGREE")->expected(1, 2);
    kernel->add_option("--equation", equation, "member equation");
    common(kernel);

    auto* tower = app.add_subcommand("tower", "double-cover tower Hodge numbers");
    tower->add_option("target", pos, "family id or WEIGHTS DEGREE")->expected(0, 2);
    tower->add_option("--levels", levels, "number of upward levels (default 2)");
    tower->add_flag("--table2", table2, "odd and even tower members of all even-degree families 96-130");
    common(tower);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    wt_report* report = nullptr;
    wt_status st = WT_OK;
    try {
        wt_input in{};
        in.seed = seed;
        if (equation)
            in.equation = equation->c_str();
        Target t;
        auto fill = [&](const Target& tt) {
            t = tt;
            if (t.explicit_weights()) {
                in.weights = t.weights.data();
                in.nweights = t.weights.size();
                in.degree = t.degree;
            }
        };

        if (hilbert->parsed()) {
            fill(parse_target(pos, false));
            st = wt_cmd_hilbert(in.weights, in.nweights, in.degree, &report);
        } else if (qs->parsed()) {
            fill(parse_target(pos, false));
            st = wt_cmd_quasismooth(&in, &report);
        } else if (hodge->parsed()) {
            fill(parse_target(pos, false));
            st = wt_cmd_hodge(&in, dimension, &report);
        } else if (classify->parsed()) {
            if (all) {
                if (!pos.empty())
                    throw UsageError("--all takes no target");
                st = wt_cmd_classify_all(fixture ? fixture->c_str() : nullptr, seed, &report);
            } else {
                if (fixture)
                    throw UsageError("--fixture needs --all");
                fill(parse_target(pos, true));
                st = wt_cmd_classify(t.id, &in, &report);
            }
        } else if (kernel->parsed()) {
            fill(parse_target(pos, true));
            if (equation && !t.explicit_weights())
                throw UsageError("--equation needs WEIGHTS DEGREE");
            st = wt_cmd_kernel(t.id, &in, &report);
        } else if (tower->parsed()) {
            if (table2) {
                if (!pos.empty())
                    throw UsageError("--table2 takes no target");
                st = wt_cmd_tower_table(seed, &report);
            } else {
                fill(parse_target(pos, true));
                st = wt_cmd_tower(t.id, &in, levels, &report);
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "wtorelli: " << e.what() << "\n";
        return kExitUsage;
    }

    if (st != WT_OK) {
        std::cerr << "wtorelli: " << wt_status_string(st) << ": " << wt_last_error() << "\n";
        return st == WT_ERR_INVALID_ARGUMENT || st == WT_ERR_PARSE || st == WT_ERR_NOT_HOMOGENEOUS ||
                       st == WT_ERR_NOT_FOUND
                   ? kExitUsage
                   : kExitError;
    }
    wt_report_set_argv(report, argc - 1, const_cast<const char* const*>(argv + 1));
    const char* out = wt_report_render(report, as_json ? WT_FORMAT_JSON : as_csv ? WT_FORMAT_CSV : WT_FORMAT_TEXT);
    std::fputs(out, stdout);
    int rc = wt_report_passed(report) ? kExitOk : kExitFailed;
    wt_report_destroy(report);
    return rc;
}
