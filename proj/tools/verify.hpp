#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dhero::cli {

struct VerifyParams {
    std::optional<int> s;
    std::optional<int> samples;
    std::optional<int> count;
    std::optional<int> maxn;
    std::uint64_t seed = 1;
    std::string r = "c3";
};

struct VerificationReport {
    std::string id;
    nlohmann::ordered_json params;
    bool pass = true;
    std::uint64_t checked = 0;
    nlohmann::ordered_json counterexample;  ///< null when pass
    double wall_ms = 0;

    /// Wall time is left out unless asked for, so equal seeds give equal bytes.
    nlohmann::ordered_json to_json(bool with_timing = false) const;
};

/// Accepted ids, without the optional "lemma" prefix.
const std::vector<std::string>& verify_ids();

/// Runs one check. Throws RangeError for an unknown id.
VerificationReport verify_lemma(const std::string& id, const VerifyParams& params);

}  // namespace dhero::cli
