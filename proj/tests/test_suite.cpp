#include <doctest.h>

#include <mn/error.hpp>
#include <mn/suite.hpp>

#include "support.hpp"

using namespace mn;

namespace
{

const CheckResult *find_check(const SuiteReport &r, const std::string &property)
{
    for (const auto &c : r.checks) {
        if (c.report.property == property) {
            return &c;
        }
    }
    return nullptr;
}

} // namespace

TEST_CASE("shipped fixtures load")
{
    const auto paths = shipped_fixtures(MN_FIXTURE_DIR);
    CHECK(paths.size() >= 5);
    for (const char *name :
         {"z4_example_5_5", "t_z4_example_5_6", "klein_fusible", "gf4_frobenius", "z4_tau_power"}) {
        CHECK(support::fixture(name).label == name);
    }
    const auto z4 = support::fixture("z4_example_5_5");
    CHECK(z4.ring->size() == 4);
    CHECK(support::to_set(z4.ideals.at("U").members) == oracle::Set{0, 2});
    CHECK(z4.twist->trivial_sigma());
    CHECK(z4.twist->trivial_tau());
    CHECK(z4.twist->group() == OrderedGroup::z());
    const auto t = support::fixture("t_z4_example_5_6");
    CHECK(support::to_set(t.ideals.at("U").members) == oracle::Set{0, 1, 2, 3});
}

TEST_CASE("corrupted tau fixture is rejected with the associativity witness")
{
    try {
        load_fixture(std::string(MN_FIXTURE_DIR) + "/invalid/corrupted_tau.json");
        FAIL("expected ValidationError");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::validation_error);
        const std::string what = e.what();
        CHECK(what.find("associativity fails at f = ") != std::string::npos);
    }
}

TEST_CASE("loader errors")
{
    try {
        load_fixture("/nonexistent/fixture.json");
        FAIL("expected ParseError");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::parse_error);
    }
    const auto fx = support::fixture("z4_example_5_5");
    auto doc = fx.doc;
    doc["zip_ideal"] = "V";
    CHECK_THROWS_AS(fixture_from_json(doc, fx.path.parent_path()), Error);
    doc = fx.doc;
    doc["series"]["bad"] = {{0, 7}};
    try {
        fixture_from_json(doc, fx.path.parent_path());
        FAIL("expected ValidationError");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::validation_error);
    }
    doc = fx.doc;
    doc.erase("label");
    CHECK_THROWS_AS(fixture_from_json(doc, fx.path.parent_path()), Error);
}

TEST_CASE("suite names and aliases")
{
    CHECK(suite_names().size() == 8);
    CHECK(canonical_suite("zip-transfer") == "thm5.4");
    CHECK(canonical_suite("prop3.2") == "prop3.2");
    try {
        canonical_suite("thm9.9");
        FAIL("expected SuiteUnknown");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::suite_unknown);
    }
}

TEST_CASE("documented suite outcomes")
{
    const auto z4 = support::fixture("z4_example_5_5");
    const auto thm = run_suite(z4, "thm5.4");
    CHECK(thm.status == SuiteStatus::pass);
    REQUIRE(find_check(thm, "sigma_u_zip") != nullptr);
    const auto *ex = find_check(thm, "extraction");
    REQUIRE(ex != nullptr);
    CHECK(ex->report.verdict());
    CHECK(ex->report.stats.at("pairs") == 4096);

    const auto prop = run_suite(z4, "prop3.2");
    CHECK(prop.status == SuiteStatus::not_applicable);
    CHECK_FALSE(prop.failed());
    REQUIRE(prop.warnings.size() == 1);
    CHECK(prop.warnings[0].find("not left fusible") != std::string::npos);

    for (const char *name : {"klein_fusible", "gf4_frobenius"}) {
        const auto r = run_suite(support::fixture(name), "prop3.2");
        CHECK(r.status == SuiteStatus::pass);
        REQUIRE(find_check(r, "prop3.2") != nullptr);
        CHECK(find_check(r, "prop3.2")->report.certificate.at("lifts") == 100);
    }

    CHECK(run_suite(support::fixture("t_z4_example_5_6"), "thm5.4").status == SuiteStatus::not_applicable);
}

TEST_CASE("every shipped fixture passes every suite it claims")
{
    for (const auto &path : shipped_fixtures(MN_FIXTURE_DIR)) {
        const auto fx = load_fixture(path);
        for (const auto &suite : suite_names()) {
            CAPTURE(fx.label);
            CAPTURE(suite);
            const auto r = run_suite(fx, suite);
            CHECK_FALSE(r.failed());
            if (fx.claims.count(suite)) {
                CHECK(r.status == SuiteStatus::pass);
            }
        }
    }
}

TEST_CASE("claimed applicability turns a precondition failure into a failure")
{
    auto fx = support::fixture("z4_example_5_5");
    fx.claims.insert("prop3.2");
    const auto r = run_suite(fx, "prop3.2");
    CHECK(r.status == SuiteStatus::fail);
    REQUIRE(find_check(r, "precondition") != nullptr);
}

TEST_CASE("a wrong expectation fails the examples suite")
{
    const auto fx = support::fixture("z4_example_5_5");
    auto doc = fx.doc;
    doc["expect"] = nlohmann::json::array({{{"check", "quotient"}, {"ideal", "U"}, {"x", {3}}, {"equals", {0}}}});
    const auto bad = fixture_from_json(doc, fx.path.parent_path());
    const auto r = run_suite(bad, "examples");
    CHECK(r.status == SuiteStatus::fail);
    CHECK(r.to_text().find("[FAIL]") != std::string::npos);
    CHECK(r.to_text().find("\"quotient\":[0,2]") != std::string::npos);
}

TEST_CASE("suite reports round-trip and are deterministic")
{
    const auto fx = support::fixture("klein_fusible");
    for (const auto &suite : suite_names()) {
        const auto a = run_suite(fx, suite);
        const auto b = run_suite(fx, suite);
        CHECK(a.to_json().dump() == b.to_json().dump());
        const auto back = SuiteReport::from_json(nlohmann::json::parse(a.to_json().dump()));
        CHECK(back.to_json() == a.to_json());
    }
    SuiteOptions other;
    other.seed = 99;
    CHECK(run_suite(fx, "prop3.2", other).to_json() != run_suite(fx, "prop3.2").to_json());
}

TEST_CASE("window and support options reach the harnesses")
{
    const auto fx = support::fixture("klein_fusible");
    SuiteOptions opt;
    opt.window = WindowSpec{0, 1};
    opt.max_support = 2;
    opt.samples = 10;
    const auto r = run_suite(fx, "prop3.2", opt);
    CHECK(r.status == SuiteStatus::pass);
    const auto *c = find_check(r, "prop3.2");
    REQUIRE(c != nullptr);
    CHECK(c->report.bounds.at("window").size() == 2);
    CHECK(c->report.certificate.at("lifts") == 10);
}

TEST_CASE("mutating one table entry makes some suite fail with a witness")
{
    for (const auto &path : shipped_fixtures(MN_FIXTURE_DIR)) {
        const auto fx = load_fixture(path);
        CAPTURE(fx.label);
        const auto n = fx.ring->size();
        for (bool mul : {true, false}) {
            for (Elem a : {Elem(1), Elem(n - 1)}) {
                for (Elem b : {Elem(0), Elem(n / 2), Elem(n - 1)}) {
                    const Elem old = mul ? fx.ring->mul(a, b) : fx.ring->add(a, b);
                    const auto bad = mutate_fixture(fx, mul, a, b, Elem((old + 1) % n));
                    const auto r = run_suite(bad, "ring-axioms");
                    REQUIRE(r.failed());
                    const auto *c = find_check(r, "ring_axioms");
                    REQUIRE(c != nullptr);
                    CHECK_FALSE(c->ok);
                    CHECK(c->report.witness.contains("tuple"));
                    CHECK(c->reverification == "ring_axioms: re-verified");
                }
            }
        }
    }
}
