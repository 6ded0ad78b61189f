#include <wtorelli/wtorelli.h>

#include "report.hpp"

#include <chrono>
#include <memory>

struct wt_ring {
    std::shared_ptr<const wtorelli::JacobianRing> ring;
};

struct wt_report {
    wtorelli::Report report;
    std::string rendered[3];
};

namespace {

thread_local std::string g_last_error;

wt_status fail(wt_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

template <class F>
wt_status guarded(F&& f)
{
    using namespace wtorelli;
    try {
        g_last_error.clear();
        f();
        return WT_OK;
    } catch (const ParseError& e) {
        return fail(WT_ERR_PARSE, e.what());
    } catch (const NotHomogeneousError& e) {
        return fail(WT_ERR_NOT_HOMOGENEOUS, e.what());
    } catch (const NotQuasiSmoothError& e) {
        return fail(WT_ERR_NOT_QUASI_SMOOTH, e.what());
    } catch (const NotFoundError& e) {
        return fail(WT_ERR_NOT_FOUND, e.what());
    } catch (const IoError& e) {
        return fail(WT_ERR_IO, e.what());
    } catch (const InternalConsistencyError& e) {
        return fail(WT_ERR_INTERNAL, e.what());
    } catch (const Error& e) {
        return fail(WT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(WT_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(WT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WT_ERR_INTERNAL, "unknown exception");
    }
}

wtorelli::WeightSystem weights_of(const int* weights, size_t n, long degree)
{
    if (!weights || n == 0)
        throw std::invalid_argument("no weights given");
    if (degree > INT32_MAX)
        throw std::invalid_argument("degree out of range");
    return wtorelli::WeightSystem(std::vector<int>(weights, weights + n), static_cast<int>(degree));
}

wtorelli::MemberInput member_of(const wt_input* in)
{
    wtorelli::MemberInput m;
    if (in->equation)
        m.equation = std::string(in->equation);
    m.seed = in->seed;
    return m;
}

// Embedded family when only an id is given; otherwise the explicit weights,
// carrying the tabulated label along if they agree with the table.
wtorelli::FanoFamily family_of(int id, const wt_input* in)
{
    using namespace wtorelli;
    if (!in || !in->weights) {
        auto f = find_family(id);
        if (!f)
            throw NotFoundError("no family " + std::to_string(id) + " among 96-130");
        return *f;
    }
    FanoFamily f;
    f.id = id > 0 ? id : 0;
    f.weights = weights_of(in->weights, in->nweights, in->degree);
    if (auto known = find_family(id); known && known->weights.degree() == f.weights.degree() &&
                                      std::equal(known->weights.weights().begin(), known->weights.weights().end(),
                                                 f.weights.weights().begin(), f.weights.weights().end()))
        f.expected = known->expected;
    return f;
}

template <class F>
wt_status run_report(wt_report** out, F&& build)
{
    if (!out)
        return fail(WT_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] {
        auto t0 = std::chrono::steady_clock::now();
        auto r = std::make_unique<wt_report>();
        r->report = build();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        wtorelli::stamp_timing(r->report, ms);
        *out = r.release();
    });
}

} // namespace

extern "C" {

const char* wt_version(void) { return wtorelli::artifact_version(); }

const char* wt_status_string(wt_status s)
{
    switch (s) {
    case WT_OK: return "ok";
    case WT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WT_ERR_PARSE: return "parse error";
    case WT_ERR_NOT_HOMOGENEOUS: return "not homogeneous";
    case WT_ERR_NOT_QUASI_SMOOTH: return "not quasi-smooth";
    case WT_ERR_NOT_FOUND: return "not found";
    case WT_ERR_IO: return "i/o error";
    case WT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* wt_last_error(void) { return g_last_error.c_str(); }

wt_status wt_ring_create(const int* weights, size_t nweights, long degree, const char* equation, wt_ring** out)
{
    if (!out || !equation)
        return fail(WT_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto w = weights_of(weights, nweights, degree);
        auto f = wtorelli::parse_polynomial(equation, w);
        auto r = std::make_unique<wt_ring>();
        r->ring = wtorelli::JacobianRing::shared(f);
        *out = r.release();
    });
}

void wt_ring_destroy(wt_ring* ring) { delete ring; }

wt_status wt_ring_dim(const wt_ring* ring, long k, uint64_t* out)
{
    if (!ring || !out)
        return fail(WT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ring->ring->dim(k); });
}

wt_status wt_ring_sigma(const wt_ring* ring, long* out)
{
    if (!ring || !out)
        return fail(WT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = ring->ring->sigma(); });
}

wt_status wt_ring_is_quasi_smooth(const wt_ring* ring, int* out)
{
    if (!ring || !out)
        return fail(WT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = wtorelli::quasi_smooth_check(*ring->ring).quasi_smooth ? 1 : 0; });
}

wt_status wt_cmd_hilbert(const int* weights, size_t nweights, long degree, wt_report** out)
{
    return run_report(out, [&] { return wtorelli::cmd_hilbert(weights_of(weights, nweights, degree)); });
}

wt_status wt_cmd_quasismooth(const wt_input* in, wt_report** out)
{
    if (!in)
        return fail(WT_ERR_INVALID_ARGUMENT, "null input");
    return run_report(out, [&] {
        return wtorelli::cmd_quasismooth(weights_of(in->weights, in->nweights, in->degree), member_of(in));
    });
}

wt_status wt_cmd_hodge(const wt_input* in, int dimension, wt_report** out)
{
    if (!in)
        return fail(WT_ERR_INVALID_ARGUMENT, "null input");
    return run_report(out, [&] {
        std::optional<int> n;
        if (dimension >= 0)
            n = dimension;
        return wtorelli::cmd_hodge(weights_of(in->weights, in->nweights, in->degree), n, member_of(in));
    });
}

wt_status wt_cmd_classify(int family_id, const wt_input* in, wt_report** out)
{
    return run_report(out, [&] { return wtorelli::cmd_classify(family_of(family_id, in), in ? in->seed : 0); });
}

wt_status wt_cmd_classify_all(const char* fixture_path, uint64_t seed, wt_report** out)
{
    return run_report(out, [&] {
        if (fixture_path)
            return wtorelli::cmd_classify_all(wtorelli::load_fixture(fixture_path), seed);
        return wtorelli::cmd_classify_all(wtorelli::higher_index_families(), seed);
    });
}

wt_status wt_cmd_kernel(int family_id, const wt_input* in, wt_report** out)
{
    return run_report(out, [&] {
        wtorelli::MemberInput m;
        if (in)
            m = member_of(in);
        return wtorelli::cmd_kernel(family_of(family_id, in), m);
    });
}

wt_status wt_cmd_tower(int family_id, const wt_input* in, int levels, wt_report** out)
{
    return run_report(out,
                      [&] { return wtorelli::cmd_tower(family_of(family_id, in), levels, in ? in->seed : 0); });
}

wt_status wt_cmd_tower_table(uint64_t seed, wt_report** out)
{
    return run_report(out, [&] { return wtorelli::cmd_tower_table(seed); });
}

const char* wt_report_render(wt_report* report, wt_format format)
{
    if (!report)
        return nullptr;
    auto& slot = report->rendered[static_cast<int>(format) % 3];
    switch (format) {
    case WT_FORMAT_JSON: slot = report->report.json(); break;
    case WT_FORMAT_CSV: slot = report->report.csv; break;
    default: slot = report->report.text; break;
    }
    return slot.c_str();
}

int wt_report_passed(const wt_report* report) { return report && report->report.passed ? 1 : 0; }

wt_status wt_report_set_argv(wt_report* report, int argc, const char* const* argv)
{
    if (!report || argc < 0 || (argc > 0 && !argv))
        return fail(WT_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto a = nlohmann::ordered_json::array();
        for (int i = 0; i < argc; ++i)
            a.push_back(argv[i] ? argv[i] : "");
        report->report.doc["command"]["argv"] = std::move(a);
    });
}

void wt_report_destroy(wt_report* report) { delete report; }

} // extern "C"
