#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace
{

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args)
{
    const std::string cmd = std::string(MN_BINARY) + " " + args + " 2>/dev/null";
    Run r;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), p)) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string &name)
{
    return std::string(MN_FIXTURE_DIR) + "/" + name + ".json";
}

} // namespace

TEST_CASE("validate")
{
    CHECK(run("validate " + fixture("z4_example_5_5")).code == 0);
    CHECK(run("validate " + fixture("invalid/corrupted_tau")).code == 2);
    CHECK(run("validate /nonexistent.json").code == 2);
}

TEST_CASE("verify exit codes follow suite status")
{
    CHECK(run("verify " + fixture("z4_example_5_5") + " --suite thm5.4").code == 0);
    const auto na = run("verify " + fixture("z4_example_5_5") + " --suite prop3.2");
    CHECK(na.code == 0);
    CHECK(na.out.find("not_applicable") != std::string::npos);
    CHECK(run("verify " + fixture("z4_example_5_5") + " --suite nonsense").code == 2);
    CHECK(run("verify " + fixture("klein_fusible") + " --suite prop3.2 --window 0..1 --max-support 2 --seed 3").code ==
          0);
    CHECK(run("verify " + fixture("klein_fusible") + " --suite prop3.2 --window 2..1").code == 2);

    const auto dir = std::filesystem::temp_directory_path() / "mn_cli_test";
    std::filesystem::create_directories(dir);
    std::ifstream in(fixture("z4_example_5_5"));
    auto doc = nlohmann::json::parse(in);
    doc["expect"] = nlohmann::json::array({{{"check", "property"}, {"name", "left_fusible"}, {"verdict", true}}});
    const auto path = dir / "wrong.json";
    std::ofstream(path) << doc.dump();
    CHECK(run("verify " + path.string() + " --suite examples").code == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("json output parses and is deterministic given the seed")
{
    const auto args = "verify " + fixture("gf4_frobenius") + " --suite prop3.2 --format json --seed 5";
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("elapsed").is_null());
    const auto c = run("verify " + fixture("gf4_frobenius") + " --suite prop3.2 --format json --seed 6");
    CHECK(c.out != a.out);
    const auto timed = nlohmann::json::parse(run(args + " --timing").out);
    CHECK(timed.at("elapsed").is_number());
}

TEST_CASE("ideals and props")
{
    const auto ideals = run("ideals " + fixture("z4_example_5_5") + " --format json");
    REQUIRE(ideals.code == 0);
    const auto j = nlohmann::json::parse(ideals.out);
    CHECK(j.at("checks").at(0).at("report").at("certificate").at("right").size() == 3);

    const auto props = run("props " + fixture("z4_example_5_5") + " --property left_fusible --format json");
    REQUIRE(props.code == 0);
    const auto p = nlohmann::json::parse(props.out);
    REQUIRE(p.at("checks").size() == 1);
    CHECK(p.at("checks").at(0).at("report").at("verdict") == false);
    CHECK(p.at("checks").at(0).at("report").at("witness").at("element") == 2);
    CHECK(run("props " + fixture("z4_example_5_5") + " --property nonsense").code == 2);
}

TEST_CASE("report over every shipped fixture")
{
    const auto r = run("report --format json --fixture-dir " + std::string(MN_FIXTURE_DIR));
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto &reports = j.at("reports");
    CHECK(reports.size() % 8 == 0);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK(reports[i - 1].at("fixture") <= reports[i].at("fixture"));
    }
    const auto text = run("report " + fixture("z4_example_5_5"));
    CHECK(text.code == 0);
    CHECK(text.out.find("z4_example_5_5 / thm5.4: pass") != std::string::npos);
}
