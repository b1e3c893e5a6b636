#ifndef MN_REPORT_HPP
#define MN_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mn
{

enum class Status { holds, fails, not_applicable, hypothesis_fails };

std::string_view to_string(Status s) noexcept;
Status status_from_string(std::string_view s);

// Outcome of one decision procedure. A witness accompanies a negative
// verdict, a certificate a positive one; both are plain JSON so that they can
// be re-verified from the serialized form alone.
struct PropertyReport {
    std::string property;
    Status status = Status::holds;
    nlohmann::json witness;     // null when absent
    nlohmann::json certificate; // null when absent
    nlohmann::json bounds;      // null unless the verdict covers a bounded fragment only
    nlohmann::json stats = nlohmann::json::object();
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool verdict() const noexcept
    {
        return status == Status::holds;
    }

    // {property, verdict, status, witness?, certificate?, bounds?, stats, notes?, elapsed}
    // elapsed is null unless include_timing, so untimed output is byte-stable.
    nlohmann::json to_json(bool include_timing = false) const;
    static PropertyReport from_json(const nlohmann::json &j);
    std::string to_text() const;

    friend bool operator==(const PropertyReport &, const PropertyReport &) = default;
};

class Stopwatch
{
public:
    Stopwatch() : m_start(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - m_start).count();
    }

private:
    std::chrono::steady_clock::time_point m_start;
};

} // namespace mn

#endif
