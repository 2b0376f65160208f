#include <sgroth/report.hpp>

#include <algorithm>
#include <sstream>

namespace sgroth
{

bool Report::passed() const noexcept
{
    return failures() == 0;
}

std::size_t Report::failures() const noexcept
{
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const Case &c) { return !c.holds; }));
}

Json to_json(const TruncationProfile &t)
{
    Json j = Json::object();
    j["vars"] = t.num_vars;
    j["max_deg"] = t.max_degree;
    return j;
}

Json to_json(const Partition &p)
{
    Json j = Json::array();
    for (int part : p.parts()) {
        j.push_back(part);
    }
    return j;
}

Json to_json(const SymFunc &f)
{
    Json coeffs = Json::array();
    for (const auto &[lam, c] : f.coeffs()) {
        Json entry = Json::object();
        entry["partition"] = to_json(lam);
        entry["coeff"] = c.str();
        coeffs.push_back(std::move(entry));
    }
    return coeffs;
}

Json to_json(const Case &c)
{
    Json j = Json::object();
    j["inputs"] = c.inputs;
    j["relation"] = c.relation;
    j["holds"] = c.holds;
    if (c.witness) {
        j["witness"] = *c.witness;
    }
    return j;
}

Json to_json(const Report &r)
{
    Json j = Json::object();
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["parameters"] = r.parameters;
    j["modulus"] = r.modulus ? to_json(*r.modulus) : Json(nullptr);
    j["case_count"] = r.cases.size();
    j["failures"] = r.failures();
    j["summary"] = r.summary;
    Json cases = Json::array();
    for (const auto &c : r.cases) {
        cases.push_back(to_json(c));
    }
    j["cases"] = std::move(cases);
    Json findings = Json::array();
    for (const auto &c : r.findings) {
        findings.push_back(to_json(c));
    }
    j["findings"] = std::move(findings);
    return j;
}

std::string to_text(const Report &r)
{
    std::ostringstream out;
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases.size() << " cases, " << r.failures()
        << " failed";
    if (r.modulus) {
        out << ", modulo degrees > " << r.modulus->max_degree << " in " << r.modulus->num_vars << " variables";
    }
    out << ")\n";
    for (const auto &[key, value] : r.summary.items()) {
        out << "  " << key << ": " << value.dump() << "\n";
    }
    for (const auto &c : r.cases) {
        if (!c.holds) {
            out << "  FAIL " << c.relation << " " << c.inputs.dump() << "\n";
            if (c.witness) {
                out << "    witness " << c.witness->dump() << "\n";
            }
        }
    }
    if (!r.findings.empty()) {
        const auto held = std::count_if(r.findings.begin(), r.findings.end(), [](const Case &c) { return c.holds; });
        out << "  findings: " << held << " of " << r.findings.size() << " hold\n";
        for (const auto &c : r.findings) {
            if (!c.holds) {
                out << "    does not hold: " << c.relation << " " << c.inputs.dump() << "\n";
            }
        }
    }
    return out.str();
}

Json coefficient_diff(const SymFunc &lhs, const SymFunc &rhs, std::size_t limit)
{
    Json diff = Json::array();
    auto emit = [&](const Partition &lam) {
        if (diff.size() >= limit) {
            return;
        }
        Json entry = Json::object();
        entry["partition"] = to_json(lam);
        entry["lhs"] = lhs.coefficient(lam).str();
        entry["rhs"] = rhs.coefficient(lam).str();
        diff.push_back(std::move(entry));
    };
    auto a = lhs.coeffs().begin();
    auto b = rhs.coeffs().begin();
    while (a != lhs.coeffs().end() || b != rhs.coeffs().end()) {
        if (b == rhs.coeffs().end() || (a != lhs.coeffs().end() && a->first < b->first)) {
            emit((a++)->first);
        } else if (a == lhs.coeffs().end() || b->first < a->first) {
            emit((b++)->first);
        } else {
            if (a->second != b->second) {
                emit(a->first);
            }
            ++a;
            ++b;
        }
    }
    return diff;
}

} // namespace sgroth
