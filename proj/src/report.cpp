#include <mn/report.hpp>

#include <sstream>

#include <mn/error.hpp>

namespace mn
{

std::string_view to_string(Status s) noexcept
{
    switch (s) {
        case Status::holds:
            return "holds";
        case Status::fails:
            return "fails";
        case Status::not_applicable:
            return "not_applicable";
        case Status::hypothesis_fails:
            return "hypothesis_fails";
    }
    return "fails";
}

Status status_from_string(std::string_view s)
{
    for (auto st : {Status::holds, Status::fails, Status::not_applicable, Status::hypothesis_fails}) {
        if (to_string(st) == s) {
            return st;
        }
    }
    fail(ErrorKind::parse_error, "unknown report status '" + std::string(s) + "'");
}

nlohmann::json PropertyReport::to_json(bool include_timing) const
{
    nlohmann::json j{{"property", property}, {"verdict", verdict()}, {"status", std::string(to_string(status))}};
    if (!witness.is_null()) {
        j["witness"] = witness;
    }
    if (!certificate.is_null()) {
        j["certificate"] = certificate;
    }
    if (!bounds.is_null()) {
        j["bounds"] = bounds;
    }
    j["stats"] = stats;
    if (!notes.empty()) {
        j["notes"] = notes;
    }
    j["elapsed"] = include_timing ? nlohmann::json(elapsed_ms) : nlohmann::json(nullptr);
    return j;
}

PropertyReport PropertyReport::from_json(const nlohmann::json &j)
{
    try {
        PropertyReport r;
        r.property = j.at("property").get<std::string>();
        r.status = status_from_string(j.at("status").get<std::string>());
        if (j.at("verdict").get<bool>() != r.verdict()) {
            fail(ErrorKind::parse_error, "report verdict disagrees with status");
        }
        r.witness = j.value("witness", nlohmann::json());
        r.certificate = j.value("certificate", nlohmann::json());
        r.bounds = j.value("bounds", nlohmann::json());
        r.stats = j.value("stats", nlohmann::json::object());
        r.notes = j.value("notes", std::vector<std::string>{});
        const auto &e = j.at("elapsed");
        r.elapsed_ms = e.is_number() ? e.get<double>() : 0.0;
        return r;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse_error, std::string("report: ") + e.what());
    }
}

std::string PropertyReport::to_text() const
{
    std::ostringstream os;
    os << property << ": " << to_string(status);
    if (!witness.is_null()) {
        os << "\n  witness: " << witness.dump();
    }
    if (!certificate.is_null()) {
        const auto c = certificate.dump();
        os << "\n  certificate: " << (c.size() > 400 ? c.substr(0, 400) + "..." : c);
    }
    if (!bounds.is_null()) {
        os << "\n  bounds: " << bounds.dump() << " (verdict covers this fragment only)";
    }
    for (const auto &n : notes) {
        os << "\n  note: " << n;
    }
    return os.str();
}

} // namespace mn
