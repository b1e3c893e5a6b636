#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mn/error.hpp>
#include <mn/fixture.hpp>
#include <mn/suite.hpp>

#ifndef MN_FIXTURE_DIR
#define MN_FIXTURE_DIR "fixtures"
#endif

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_invalid = 2;

mn::WindowSpec parse_window(const std::string &text)
{
    static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw CLI::ValidationError("--window", "expected a..b, got '" + text + "'");
    }
    mn::WindowSpec w{std::stoi(m[1]), std::stoi(m[2])};
    if (w.lo > w.hi) {
        throw CLI::ValidationError("--window", "lower bound exceeds upper bound");
    }
    return w;
}

void emit(const std::vector<mn::SuiteReport> &reports, const std::string &format, bool timing)
{
    if (format == "json") {
        auto out = nlohmann::json::array();
        for (const auto &r : reports) {
            out.push_back(r.to_json(timing));
        }
        std::cout << (reports.size() == 1 ? out.at(0) : nlohmann::json{{"reports", out}}).dump(2) << "\n";
        return;
    }
    for (const auto &r : reports) {
        std::cout << r.to_text();
    }
}

int exit_code(const std::vector<mn::SuiteReport> &reports)
{
    for (const auto &r : reports) {
        if (r.failed()) {
            return exit_fail;
        }
    }
    return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Mal'cev-Neumann series rings over finite coefficient rings"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timing = false;
    mn::SuiteOptions options;
    std::string fixture_path;

    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag("--timing", timing, "Include elapsed times");
    };

    auto *validate = app.add_subcommand("validate", "Load and validate a fixture");
    validate->add_option("fixture", fixture_path)->required();

    auto *ideals = app.add_subcommand("ideals", "Ideal lattice and named ideals");
    ideals->add_option("fixture", fixture_path)->required();
    add_format(ideals);

    std::string property;
    auto *props = app.add_subcommand("props", "Ring property checkers");
    props->add_option("fixture", fixture_path)->required();
    props->add_option("--property", property, "Report only this property");
    add_format(props);

    std::string suite;
    std::string window;
    std::size_t max_support = 0;
    auto *verify = app.add_subcommand("verify", "Run one suite on a fixture");
    verify->add_option("fixture", fixture_path)->required();
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--window", window, "Series window a..b");
    verify->add_option("--max-support", max_support, "Largest random support")->check(CLI::PositiveNumber);
    verify->add_option("--seed", options.seed, "Random seed");
    verify->add_option("--samples", options.samples, "Random series per harness");
    add_format(verify);

    std::vector<std::string> report_paths;
    std::string fixture_dir = MN_FIXTURE_DIR;
    auto *report = app.add_subcommand("report", "Run every suite on every fixture");
    report->add_option("fixtures", report_paths, "Fixture files (default: all shipped fixtures)");
    report->add_option("--fixture-dir", fixture_dir, "Directory of shipped fixtures");
    report->add_option("--seed", options.seed, "Random seed");
    add_format(report);

    try {
        app.parse(argc, argv);
        if (!window.empty()) {
            options.window = parse_window(window);
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_invalid;
    }
    options.timing = timing;
    if (max_support > 0) {
        options.max_support = max_support;
    }

    try {
        if (*validate) {
            const auto fx = mn::load_fixture(fixture_path);
            std::cout << fx.label << ": valid (" << fx.ring->label() << ", " << fx.ring->size() << " elements)\n";
            return exit_pass;
        }
        if (*ideals) {
            const auto r = mn::run_suite(mn::load_fixture(fixture_path), "ideals", options);
            emit({r}, format, timing);
            return exit_code({r});
        }
        if (*props) {
            auto r = mn::run_suite(mn::load_fixture(fixture_path), "properties", options);
            if (!property.empty()) {
                std::erase_if(r.checks, [&](const auto &c) { return c.report.property != property; });
                if (r.checks.empty()) {
                    std::cerr << "no property named '" << property << "'\n";
                    return exit_invalid;
                }
                const bool bad = std::any_of(r.checks.begin(), r.checks.end(), [](const auto &c) { return !c.ok; });
                r.status = bad ? mn::SuiteStatus::fail : mn::SuiteStatus::pass;
            }
            emit({r}, format, timing);
            return exit_code({r});
        }
        if (*verify) {
            const auto r = mn::run_suite(mn::load_fixture(fixture_path), suite, options);
            emit({r}, format, timing);
            return exit_code({r});
        }
        std::vector<std::filesystem::path> paths(report_paths.begin(), report_paths.end());
        if (paths.empty()) {
            paths = mn::shipped_fixtures(fixture_dir);
        }
        std::vector<mn::Fixture> fixtures;
        for (const auto &p : paths) {
            fixtures.push_back(mn::load_fixture(p));
        }
        std::sort(fixtures.begin(), fixtures.end(), [](const auto &a, const auto &b) { return a.label < b.label; });
        std::vector<mn::SuiteReport> reports;
        for (const auto &fx : fixtures) {
            for (const auto &s : mn::suite_names()) {
                reports.push_back(mn::run_suite(fx, s, options));
            }
        }
        if (format == "json") {
            auto out = nlohmann::json::array();
            for (const auto &r : reports) {
                out.push_back(r.to_json(timing));
            }
            std::cout << nlohmann::json{{"reports", out}}.dump(2) << "\n";
        } else {
            emit(reports, format, timing);
        }
        return exit_code(reports);
    } catch (const mn::Error &e) {
        std::cerr << e.what() << "\n";
        return e.kind() == mn::ErrorKind::parse_error || e.kind() == mn::ErrorKind::validation_error ||
                       e.kind() == mn::ErrorKind::suite_unknown
                   ? exit_invalid
                   : exit_fail;
    }
}
