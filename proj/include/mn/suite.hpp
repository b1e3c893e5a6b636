#ifndef MN_SUITE_HPP
#define MN_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <mn/fixture.hpp>
#include <mn/report.hpp>

namespace mn
{

struct SuiteOptions {
    std::optional<WindowSpec> window; // overrides the fixture's series window
    std::optional<std::size_t> max_support;
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    bool timing = false;
};

struct CheckResult {
    PropertyReport report;
    bool ok = true;
    std::string reverification;
};

enum class SuiteStatus { pass, fail, not_applicable };

std::string_view to_string(SuiteStatus s) noexcept;

struct SuiteReport {
    std::string fixture;
    std::string suite;
    SuiteStatus status = SuiteStatus::pass;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    double elapsed_ms = 0.0;

    bool failed() const noexcept
    {
        return status == SuiteStatus::fail;
    }
    nlohmann::json to_json(bool include_timing = false) const;
    static SuiteReport from_json(const nlohmann::json &j);
    std::string to_text() const;
};

// ring-axioms, ideals, properties, prop3.2, lemma4.3, thm4.5, thm5.4, examples.
const std::vector<std::string> &suite_names();
// Accepts the names above and descriptive aliases; SuiteUnknown otherwise.
std::string canonical_suite(std::string_view name);

SuiteReport run_suite(const Fixture &fixture, std::string_view suite, const SuiteOptions &options = {});

} // namespace mn

#endif
