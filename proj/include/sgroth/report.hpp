#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <sgroth/symfunc.hpp>

namespace sgroth
{

using Json = nlohmann::ordered_json;

// One checked relation. `witness` is present exactly when the relation fails
// and carries the differing data plus a "rerun" command line for this case.
struct Case {
    Json inputs;
    std::string relation;
    bool holds = true;
    std::optional<Json> witness;
};

// Gated `cases` decide whether the suite passes. `findings` are recorded
// observations (such as where a conjectured form fails) that never gate.
struct Report {
    std::string suite;
    Json parameters = Json::object();
    std::vector<Case> cases;
    std::vector<Case> findings;
    // Set when every case of the suite is compared at one profile; per-case
    // profiles appear in the inputs under "trunc" otherwise.
    std::optional<TruncationProfile> modulus;
    // Suite-level results derived from the cases.
    Json summary = Json::object();

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
};

Json to_json(const TruncationProfile &t);
Json to_json(const Partition &p);
Json to_json(const SymFunc &f);
Json to_json(const Case &c);
Json to_json(const Report &r);

// Text layout: a status line, one line per failing gated case, and a
// summary of findings.
std::string to_text(const Report &r);

// Coefficients where `lhs` and `rhs` differ, as a JSON list; at most `limit`
// entries.
Json coefficient_diff(const SymFunc &lhs, const SymFunc &rhs, std::size_t limit = 8);

} // namespace sgroth
