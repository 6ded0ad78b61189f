#pragma once

// Command reports: one JSON document per command plus text and CSV views.

#include "towers.hpp"

#include <json.hpp>

namespace wtorelli {

inline constexpr const char* kSchemaName = "wtorelli-report";
inline constexpr int kSchemaVersion = 1;
const char* artifact_version();

struct Report {
    nlohmann::ordered_json doc;
    std::string text;
    std::string csv;
    /// False when the command found a disagreement it is meant to surface
    /// (classify --all against the tabulated labels).
    bool passed = true;

    std::string json() const { return doc.dump(2) + "\n"; }
};

/// The polynomial the command works on: parsed from `equation` when given,
/// otherwise a witness member drawn with `seed`.
struct MemberInput {
    std::optional<std::string> equation;
    std::uint64_t seed = 0;
};

Report cmd_hilbert(const WeightSystem& w);
Report cmd_quasismooth(const WeightSystem& w, const MemberInput& in);
Report cmd_hodge(const WeightSystem& w, std::optional<int> dimension, const MemberInput& in);
Report cmd_classify(const FanoFamily& family, std::uint64_t seed);
Report cmd_classify_all(const std::vector<FanoFamily>& families, std::uint64_t seed);
Report cmd_kernel(const FanoFamily& family, const MemberInput& in);
Report cmd_tower(const FanoFamily& family, int levels, std::uint64_t seed);
Report cmd_tower_table(std::uint64_t seed);

/// Adds the timing field; kept apart so everything else is reproducible.
void stamp_timing(Report& r, double milliseconds);

} // namespace wtorelli
