#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace wtorelli {

using json = nlohmann::ordered_json;

const char* artifact_version() { return "1.0.0"; }

namespace {

json monomials_json(const std::vector<Monomial>& ms)
{
    json a = json::array();
    for (const auto& m : ms)
        a.push_back(m.to_string());
    return a;
}

json vector_json(const std::vector<long long>& v)
{
    json a = json::array();
    for (auto x : v)
        a.push_back(x);
    return a;
}

json rationals_json(const RationalVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

json weights_json(const WeightSystem& w)
{
    json a = json::array();
    for (int x : w.weights())
        a.push_back(x);
    return a;
}

std::string weights_csv(const WeightSystem& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? " " : "") + std::to_string(w.weight(i));
    return s;
}

std::string series_text(const std::vector<long long>& c)
{
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0)
            continue;
        long long a = c[k] < 0 ? -c[k] : c[k];
        std::string coef = (a == 1 && k > 0) ? "" : std::to_string(a);
        std::string term = k == 0 ? std::to_string(a) : coef + "t" + (k > 1 ? "^" + std::to_string(k) : "");
        if (out.empty())
            out = (c[k] < 0 ? "-" : "") + term;
        else
            out += (c[k] < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

Report start(const std::string& name, json args)
{
    Report r;
    r.doc["schema"] = kSchemaName;
    r.doc["schema_version"] = kSchemaVersion;
    r.doc["artifact_version"] = artifact_version();
    r.doc["command"] = {{"name", name}, {"args", std::move(args)}};
    return r;
}

void set_inputs(Report& r, const WeightSystem* w, const std::optional<std::string>& equation,
                std::optional<std::uint64_t> seed, std::optional<int> family_id = std::nullopt)
{
    json in = json::object();
    in["family_id"] = family_id ? json(*family_id) : json(nullptr);
    in["weights"] = w ? weights_json(*w) : json(nullptr);
    in["degree"] = w ? json(w->degree()) : json(nullptr);
    in["equation"] = equation ? json(*equation) : json(nullptr);
    in["seed"] = seed ? json(*seed) : json(nullptr);
    r.doc["inputs"] = std::move(in);
}

json member_json(const Member& m)
{
    return {{"equation", m.equation.to_string()}, {"strategy", m.strategy}, {"attempts", m.attempts}};
}

Member resolve_member(const WeightSystem& w, const MemberInput& in)
{
    if (in.equation)
        return {parse_polynomial(*in.equation, w), "given", 0};
    return generic_member(w, in.seed);
}

json hodge_json(const HodgeVector& h)
{
    return {{"dimension", h.dimension}, {"primitive", vector_json(h.primitive)}, {"total", vector_json(h.total)}};
}

json kernel_json(const std::vector<Monomial>& basis, const std::vector<RationalVector>& kernel)
{
    json a = json::array();
    for (const auto& v : kernel)
        a.push_back({{"element", format_class(basis, v)}, {"coordinates", rationals_json(v)}});
    return a;
}

json evidence_json(const TorelliEvidence& ev)
{
    json blocks = json::array();
    for (const auto& b : ev.blocks)
        blocks.push_back({{"p", b.p},
                          {"source_degree", b.source_degree},
                          {"target_degree", b.target_degree},
                          {"source_dim", b.source_dim},
                          {"target_dim", b.target_dim}});
    json j;
    j["injective"] = ev.injective;
    j["dim_Rd"] = ev.dim_rd;
    j["rank"] = ev.rank;
    j["trivially_injective"] = ev.trivially_injective;
    j["blocks"] = std::move(blocks);
    j["Rd_basis"] = monomials_json(ev.rd_basis);
    j["kernel"] = kernel_json(ev.rd_basis, ev.kernel);
    j["dual"] = {{"target_degree", ev.dual_target_degree},
                 {"target_dim", ev.dual_target_dim},
                 {"rank", ev.dual_rank},
                 {"surjective", ev.dual_surjective},
                 {"cokernel", monomials_json(ev.cokernel)}};
    j["modular_rank"] = ev.modular_rank ? json(*ev.modular_rank) : json(nullptr);
    j["prime"] = std::to_string(ev.prime);
    return j;
}

json verdict_json(const TorelliVerdict& v)
{
    json j;
    j["family_id"] = v.family_id;
    j["weights"] = weights_json(v.weights);
    j["degree"] = v.weights.degree();
    j["index"] = v.index;
    j["sigma"] = v.sigma;
    j["label"] = label_name(v.label);
    j["code"] = label_code(v.label);
    j["expected"] = v.expected.empty() ? json(nullptr) : json(v.expected);
    j["matches_expected"] = v.matches_expected;
    j["evidence_kind"] = "generic-member evidence";
    j["member"] = member_json(v.member);
    j["seed"] = v.seed;
    j["hp_closed"] = v.hp_closed.empty() ? json(nullptr) : vector_json(v.hp_closed);
    if (!v.hp_closed_error.empty())
        j["hp_closed_error"] = v.hp_closed_error;
    j["dim_Rd"] = v.dim_rd;
    j["dim_R_d_minus_index"] = v.dim_r_d_iota;
    j["first_positive_degree"] = v.first_positive_degree ? json(*v.first_positive_degree) : json(nullptr);
    j["fast_paths"] = {{"d_below_index", v.fast_d_below_index}, {"d_above_sigma", v.fast_d_above_sigma}};
    j["hodge"] = hodge_json(v.hodge);
    j["torelli"] = v.evidence ? evidence_json(*v.evidence) : json(nullptr);
    return j;
}

std::string family_title(int id, const WeightSystem& w)
{
    return (id ? "no." + std::to_string(id) + " " : "") + w.to_string();
}

} // namespace

void stamp_timing(Report& r, double ms)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    r.doc["timing_ms"] = std::stod(os.str());
}

// ---------------------------------------------------------------------------

Report cmd_hilbert(const WeightSystem& w)
{
    Report r = start("hilbert", {{"weights", weights_json(w)}, {"degree", w.degree()}});
    set_inputs(r, &w, std::nullopt, std::nullopt);
    json out;
    out["s"] = w.sum();
    out["sigma"] = w.sigma();
    out["index"] = w.index();
    out["lcm"] = w.lcm();
    out["well_formed"] = w.well_formed();
    std::ostringstream text;
    text << w.to_string() << "\n";
    text << "s = " << w.sum() << ", sigma = " << w.sigma() << ", index = " << w.index() << ", m = " << w.lcm()
         << (w.well_formed() ? "" : " (not well-formed)") << "\n";
    std::string csv_series;
    try {
        auto hp = hilbert_series_closed(w);
        out["hp_closed"] = vector_json(hp);
        out["hp_error"] = nullptr;
        text << "HP = " << series_text(hp) << "\n";
        text << "series: " << HodgeVector::join(hp) << "\n";
        csv_series = HodgeVector::join(hp);
    } catch (const Error& e) {
        out["hp_closed"] = nullptr;
        out["hp_error"] = e.what();
        text << "HP: " << e.what() << "\n";
    }
    if (w.size() >= 2) {
        auto g = tu_G_bound(w);
        auto tu = tu_condition(w, w.degree());
        out["G"] = to_string(g.G);
        out["G_estimate"] = to_string(g.estimate);
        json certs = json::array();
        for (auto [p, k] : tu.all)
            certs.push_back({{"p", p}, {"k", k}});
        out["tu_condition"] = {{"holds", tu.holds}, {"certificates", std::move(certs)}};
        out["donagi_tu"] = donagi_tu_condition(w, w.degree());
        text << "G = " << to_string(g.G) << " (estimate " << to_string(g.estimate) << ")\n";
        text << "Tu numeric condition: " << (tu.holds ? "holds" : "fails");
        if (tu.holds)
            text << " (p = " << tu.p << ", k = " << tu.k << ")";
        text << "\n";
    }
    r.doc["outputs"] = std::move(out);
    r.text = text.str();
    r.csv = "weights,degree,s,sigma,index,lcm,series\n\"" + weights_csv(w) + "\"," + std::to_string(w.degree()) + "," +
            std::to_string(w.sum()) + "," + std::to_string(w.sigma()) + "," + std::to_string(w.index()) + "," +
            std::to_string(w.lcm()) + ",\"" + csv_series + "\"\n";
    return r;
}

Report cmd_quasismooth(const WeightSystem& w, const MemberInput& in)
{
    Report r = start("quasismooth", {{"weights", weights_json(w)}, {"degree", w.degree()}});
    set_inputs(r, &w, in.equation, in.seed);
    auto member = resolve_member(w, in);
    auto res = quasi_smooth_check(member.equation);
    json out;
    out["member"] = member_json(member);
    out["quasi_smooth"] = res.quasi_smooth;
    out["window"] = {res.window_lo, res.window_hi};
    out["witness_degree"] = res.witness_degree ? json(*res.witness_degree) : json(nullptr);
    constexpr std::size_t kShown = 16;
    std::vector<Monomial> shown(res.witness_monomials.begin(),
                                res.witness_monomials.begin() +
                                    static_cast<long>(std::min(kShown, res.witness_monomials.size())));
    out["witness_count"] = res.witness_monomials.size();
    out["witness"] = monomials_json(shown);
    r.doc["outputs"] = std::move(out);
    std::ostringstream text;
    text << w.to_string() << "\nf = " << member.equation.to_string() << "\n";
    text << (res.quasi_smooth ? "quasi-smooth" : "not quasi-smooth") << ": R_k checked for k in [" << res.window_lo
         << ", " << res.window_hi << "]\n";
    std::string wit;
    if (res.witness_degree) {
        for (std::size_t i = 0; i < shown.size(); ++i)
            wit += (i ? " " : "") + shown[i].to_string();
        if (shown.size() < res.witness_monomials.size())
            wit += " ...";
        text << "dim R_" << *res.witness_degree << " = " << res.witness_monomials.size() << " > 0: " << wit << "\n";
    }
    r.text = text.str();
    r.csv = "equation,quasi_smooth,window_lo,window_hi,witness_degree,witness\n\"" + member.equation.to_string() +
            "\"," + (res.quasi_smooth ? "true" : "false") + "," + std::to_string(res.window_lo) + "," +
            std::to_string(res.window_hi) + "," + (res.witness_degree ? std::to_string(*res.witness_degree) : "") +
            ",\"" + wit + "\"\n";
    return r;
}

Report cmd_hodge(const WeightSystem& w, std::optional<int> dimension, const MemberInput& in)
{
    int n = dimension.value_or(w.dimension());
    Report r = start("hodge", {{"weights", weights_json(w)}, {"degree", w.degree()}, {"dimension", n}});
    set_inputs(r, &w, in.equation, in.seed);
    auto member = resolve_member(w, in);
    auto ring = JacobianRing::shared(member.equation);
    auto qs = quasi_smooth_check(*ring);
    if (!qs.quasi_smooth)
        throw NotQuasiSmoothError("f = " + member.equation.to_string() + " is not quasi-smooth");
    // Dimensions other than n = #weights - 2 are read as tower levels over
    // the same ring, with s_j = s + j d/2.
    long weight_sum = w.sum();
    int shift = n - w.dimension();
    if (shift != 0) {
        if (w.degree() % 2 != 0)
            throw std::invalid_argument("dimension differs from #weights - 2 but the degree is odd");
        weight_sum += static_cast<long>(shift) * (w.degree() / 2);
    }
    auto h = hodge_numbers(*ring, n, weight_sum);
    json out;
    out["member"] = member_json(member);
    out["hodge"] = hodge_json(h);
    r.doc["outputs"] = std::move(out);
    r.text = w.to_string() + "\nf = " + member.equation.to_string() + "\nprimitive: " +
             HodgeVector::join(h.primitive) + "\ntotal: " + HodgeVector::join(h.total) + "\n";
    r.csv = "dimension,primitive,total\n" + std::to_string(n) + ",\"" + HodgeVector::join(h.primitive) + "\",\"" +
            HodgeVector::join(h.total) + "\"\n";
    return r;
}

Report cmd_classify(const FanoFamily& family, std::uint64_t seed)
{
    Report r = start("classify", {{"family_id", family.id ? json(family.id) : json(nullptr)},
                                  {"weights", weights_json(family.weights)},
                                  {"degree", family.weights.degree()}});
    set_inputs(r, &family.weights, std::nullopt, seed, family.id ? std::optional<int>(family.id) : std::nullopt);
    auto v = classify(family, seed);
    r.doc["outputs"] = {{"verdict", verdict_json(v)}};
    std::ostringstream text;
    text << family_title(family.id, family.weights) << "\n";
    text << "witness: " << v.member.equation.to_string() << " (" << v.member.strategy << ")\n";
    text << "verdict: " << label_name(v.label);
    if (!v.expected.empty())
        text << " (tabulated " << v.expected << (v.matches_expected ? ", agrees" : ", DISAGREES") << ")";
    text << "\n";
    text << "dim R_d = " << v.dim_rd << ", dim R_{d-index} = " << v.dim_r_d_iota << "\n";
    if (!v.hp_closed.empty())
        text << "HP = " << series_text(v.hp_closed) << "\n";
    if (v.evidence && !v.evidence->kernel.empty()) {
        text << "kernel:\n";
        for (const auto& k : v.evidence->kernel)
            text << "  " << format_class(v.evidence->rd_basis, k) << "\n";
    }
    text << "(generic-member evidence, seed " << seed << ")\n";
    r.text = text.str();
    r.csv = "id,weights,degree,index,label,code,expected,matches\n" + std::to_string(family.id) + ",\"" +
            weights_csv(family.weights) + "\"," + std::to_string(family.weights.degree()) + "," +
            std::to_string(v.index) + "," + label_name(v.label) + "," + label_code(v.label) + "," + v.expected + "," +
            (v.matches_expected ? "true" : "false") + "\n";
    return r;
}

Report cmd_classify_all(const std::vector<FanoFamily>& families, std::uint64_t seed)
{
    Report r = start("classify", {{"all", true}, {"families", families.size()}});
    set_inputs(r, nullptr, std::nullopt, seed);
    auto run = classify_all(families, seed);
    json rows = json::array();
    std::map<std::string, int> counts;
    std::ostringstream text, csv;
    text << std::left << std::setw(6) << "No." << std::setw(28) << "X_d in P(a0..a4)" << std::setw(6) << "Ind"
         << std::setw(15) << "computed" << std::setw(10) << "expected"
         << "match\n";
    csv << "id,weights,degree,index,label,code,expected,matches\n";
    for (const auto& v : run.verdicts) {
        rows.push_back(verdict_json(v));
        counts[label_name(v.label)]++;
        text << std::setw(6) << v.family_id << std::setw(28) << v.weights.to_string() << std::setw(6) << v.index
             << std::setw(15) << label_name(v.label) << std::setw(10) << (v.expected.empty() ? "-" : v.expected)
             << (v.matches_expected ? "yes" : "NO") << "\n";
        csv << v.family_id << ",\"" << weights_csv(v.weights) << "\"," << v.weights.degree() << "," << v.index << ","
            << label_name(v.label) << "," << label_code(v.label) << "," << v.expected << ","
            << (v.matches_expected ? "true" : "false") << "\n";
    }
    json disc = json::array();
    for (const auto& d : run.discrepancies)
        disc.push_back({{"family_id", d.family_id}, {"expected", d.expected}, {"computed", d.computed}});
    json out;
    out["verdicts"] = std::move(rows);
    out["counts"] = counts;
    out["discrepancies"] = std::move(disc);
    bool has_pair = false;
    for (const auto& v : run.verdicts)
        has_pair = has_pair || v.family_id == 104;
    out["resolution_104_105"] = has_pair ? json(resolve_104_105(run.verdicts)) : json(nullptr);
    r.doc["outputs"] = std::move(out);
    text << "\n";
    for (const auto& [k, n] : counts)
        text << k << ": " << n << "\n";
    text << "discrepancies: " << run.discrepancies.size() << "\n";
    for (const auto& d : run.discrepancies)
        text << "  no." << d.family_id << " tabulated " << d.expected << ", computed " << d.computed << "\n";
    if (has_pair)
        text << resolve_104_105(run.verdicts) << "\n";
    r.text = text.str();
    r.csv = csv.str();
    r.passed = run.discrepancies.empty();
    return r;
}

Report cmd_kernel(const FanoFamily& family, const MemberInput& in)
{
    const auto& w = family.weights;
    Report r = start("kernel", {{"family_id", family.id ? json(family.id) : json(nullptr)},
                                {"weights", weights_json(w)},
                                {"degree", w.degree()}});
    set_inputs(r, &w, in.equation, in.seed, family.id ? std::optional<int>(family.id) : std::nullopt);
    auto member = resolve_member(w, in);
    auto ring = JacobianRing::shared(member.equation);
    if (!quasi_smooth_check(*ring).quasi_smooth)
        throw NotQuasiSmoothError("f = " + member.equation.to_string() + " is not quasi-smooth");
    auto ev = torelli_check(*ring, w.dimension(), in.seed);
    json out;
    out["member"] = member_json(member);
    out["dimension"] = w.dimension();
    out["injective"] = ev.injective;
    out["Rd_basis"] = monomials_json(ev.rd_basis);
    out["kernel"] = kernel_json(ev.rd_basis, ev.kernel);
    r.doc["outputs"] = std::move(out);
    std::ostringstream text, csv;
    text << family_title(family.id, w) << "\nf = " << member.equation.to_string() << "\n";
    text << "R_" << w.degree() << " basis:";
    for (const auto& m : ev.rd_basis)
        text << " " << m.to_string();
    text << "\n";
    csv << "index,element\n";
    if (ev.kernel.empty())
        text << "kernel: 0 (infinitesimal Torelli holds)\n";
    else
        text << "kernel (dim " << ev.kernel.size() << "):\n";
    for (std::size_t i = 0; i < ev.kernel.size(); ++i) {
        text << "  " << format_class(ev.rd_basis, ev.kernel[i]) << "\n";
        csv << i << ",\"" << format_class(ev.rd_basis, ev.kernel[i]) << "\"\n";
    }
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

Report cmd_tower(const FanoFamily& family, int levels, std::uint64_t seed)
{
    const auto& w = family.weights;
    if (levels < 1)
        throw std::invalid_argument("--levels must be at least 1");
    Report r = start("tower", {{"family_id", family.id ? json(family.id) : json(nullptr)},
                               {"weights", weights_json(w)},
                               {"degree", w.degree()},
                               {"levels", levels}});
    set_inputs(r, &w, std::nullopt, seed, family.id ? std::optional<int>(family.id) : std::nullopt);
    if (w.degree() % 2 != 0)
        throw Error(family_title(family.id, w) + " has odd degree; it lies in no tower");
    auto member = generic_member(w, seed);
    const auto& f0 = member.equation;
    std::ostringstream text, csv;
    text << family_title(family.id, w) << "\nf_0 = " << f0.to_string() << "\nt = " << w.degree() / 2
         << ", K3 type: " << (k3_type_check(w) ? "yes" : "no") << "\n";
    csv << "level,dimension,weights,primitive,total\n";

    json lv = json::array();
    auto emit = [&](const TowerMember& m) {
        auto h = tower_hodge(m);
        lv.push_back({{"level", m.level},
                      {"dimension", m.dimension},
                      {"weights", weights_json(m.weights)},
                      {"primitive", vector_json(h.primitive)},
                      {"total", vector_json(h.total)}});
        text << "level " << std::setw(2) << m.level << "  dim " << std::setw(2) << m.dimension << "  "
             << std::setw(30) << std::left << m.weights.to_string() << std::right << "  "
             << HodgeVector::join(h.total) << "\n";
        csv << m.level << "," << m.dimension << ",\"" << weights_csv(m.weights) << "\",\""
            << HodgeVector::join(h.primitive) << "\",\"" << HodgeVector::join(h.total) << "\"\n";
    };
    TowerMember base = tower_base(f0, family.id);
    int down = max_lowering(f0);
    std::vector<TowerMember> below;
    {
        TowerMember m = base;
        for (int i = 0; i < down && m.dimension > 0; ++i) {
            m = lower(m);
            below.push_back(m);
        }
    }
    for (auto it = below.rbegin(); it != below.rend(); ++it)
        emit(*it);
    TowerMember m = base;
    for (int j = 0; j < levels; ++j) {
        emit(m);
        m = extend(m);
    }

    int k_max = std::max(1, levels / 2);
    auto per = periodicity_check(f0, k_max);
    json periodicity;
    periodicity["k_max"] = k_max;
    periodicity["passed"] = per.passed;
    json plv = json::array();
    for (const auto& p : per.levels)
        plv.push_back({{"level", p.level},
                       {"primitive", vector_json(p.primitive)},
                       {"expected", vector_json(p.expected)},
                       {"matches", p.matches}});
    periodicity["levels"] = std::move(plv);
    periodicity["extended_ring_check"] = {{"level", per.cross_check.level},
                                          {"quasi_smooth", per.cross_check.quasi_smooth},
                                          {"hilbert_function_equal", per.cross_check.hilbert_function_equal},
                                          {"hodge_equal", per.cross_check.hodge_equal}};
    text << "periodicity (k_max " << k_max << "): " << (per.passed ? "holds" : "FAILS")
         << "; extended ring at level 1 " << (per.cross_check.passed() ? "agrees" : "DISAGREES") << "\n";

    json out;
    out["member"] = member_json(member);
    out["t"] = w.degree() / 2;
    out["k3_type"] = k3_type_check(w);
    out["levels"] = std::move(lv);
    out["periodicity"] = std::move(periodicity);
    out["double_cover_slice_dims_match"] = double_cover_slice_dims_match(f0, seed);

    auto level0 = torelli_check(*JacobianRing::shared(f0), w.dimension(), seed);
    if (!level0.injective) {
        auto alt = alternation_check(f0, std::max(levels - 1, 1), seed);
        json al = json::array();
        text << "alternation:";
        for (const auto& a : alt.levels) {
            al.push_back({{"level", a.level},
                          {"dimension", a.dimension},
                          {"verdict", label_name(a.verdict)},
                          {"trivially_injective", a.trivially_injective},
                          {"kernel", kernel_json(a.rd_basis, a.kernel)}});
            text << " " << a.dimension << ":" << label_code(a.verdict);
        }
        text << (alt.alternates ? " (alternates)" : " (does not alternate)") << "\n";
        out["alternation"] = {{"alternates", alt.alternates}, {"levels", std::move(al)}};
    } else {
        out["alternation"] = nullptr;
    }
    r.doc["outputs"] = std::move(out);
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

Report cmd_tower_table(std::uint64_t seed)
{
    Report r = start("tower", {{"table2", true}});
    set_inputs(r, nullptr, std::nullopt, seed);
    auto table = tower_table(higher_index_families(), seed);
    json rows = json::array();
    std::ostringstream text, csv;
    text << std::left << std::setw(6) << "No" << std::setw(28) << "X_d in P(a0..a4)" << std::setw(16) << "Odd"
         << "Even\n";
    csv << "id,weights,degree,odd,even\n";
    for (const auto& row : table.rows) {
        auto odd = HodgeVector::join(row.odd.total);
        auto even = HodgeVector::join(row.even.total);
        rows.push_back({{"id", row.id},
                        {"weights", weights_json(row.weights)},
                        {"degree", row.weights.degree()},
                        {"odd", odd},
                        {"even", even}});
        text << std::setw(6) << row.id << std::setw(28) << row.weights.to_string() << std::setw(16) << odd << even
             << "\n";
        csv << row.id << ",\"" << weights_csv(row.weights) << "\"," << row.weights.degree() << ",\"" << odd << "\",\""
            << even << "\"\n";
    }
    json skipped = json::array();
    for (int id : table.skipped)
        skipped.push_back(id);
    r.doc["outputs"] = {{"rows", std::move(rows)}, {"row_count", table.rows.size()}, {"skipped_odd_degree", skipped}};
    text << "\n" << table.rows.size() << " towers; odd degree (no tower):";
    for (int id : table.skipped)
        text << " " << id;
    text << "\n";
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

} // namespace wtorelli
