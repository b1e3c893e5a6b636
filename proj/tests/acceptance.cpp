#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include <mn/error.hpp>
#include <mn/props.hpp>
#include <mn/reverify.hpp>
#include <mn/suite.hpp>
#include <mn/transfer.hpp>

#include "oracle.hpp"

using namespace mn;

namespace
{

Fixture fixture(const std::string &name)
{
    return load_fixture(std::string(MN_FIXTURE_DIR) + "/" + name + ".json");
}

oracle::Set to_set(const ElementSet &s)
{
    oracle::Set out;
    s.for_each([&](Elem e) { out.insert(e); });
    return out;
}

ElementSet from_set(const oracle::Set &s, std::size_t n)
{
    ElementSet out(n);
    for (int e : s) {
        out.insert(Elem(e));
    }
    return out;
}

const CheckResult *find_check(const SuiteReport &r, const std::string &property)
{
    for (const auto &c : r.checks) {
        if (c.report.property == property) {
            return &c;
        }
    }
    return nullptr;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

Outcome example_5_5()
{
    Outcome o;
    const auto fx = fixture("z4_example_5_5");
    const auto ring = oracle::zn(4);
    const auto &u = fx.ideals.at("U");
    const oracle::Set us{0, 2};
    int witnessed = 0;
    for (std::uint32_t m = 0; m < 16; ++m) {
        oracle::Set x;
        for (int i = 0; i < 4; ++i) {
            if (m & (1u << i)) {
                x.insert(i);
            }
        }
        if (oracle::subset(x, us) || oracle::quotient(ring, us, x) != us) {
            continue;
        }
        const auto rep = sigma_u_zip_witness(u, from_set(x, 4));
        o.require(rep.status == Status::holds, "no witness for a qualifying X");
        if (!rep.verdict()) {
            return o;
        }
        const auto y = rep.certificate.at("y").get<oracle::Set>();
        o.require(oracle::subset(y, x) && oracle::quotient(ring, us, y) == us, "witness Y does not verify");
        o.require(reverify(rep, *fx.twist).ok, "re-verification failed");
        ++witnessed;
    }
    const auto q = to_set(quotient_set(*fx.ring, u.members, ElementSet(4, {3})));
    o.require(q == oracle::Set{0, 2}, "(U:{3}) != {0,2}");
    o.detail = std::to_string(witnessed) + " qualifying X witnessed; (U:{3}) = {0,2}";
    return o;
}

Outcome example_5_6()
{
    Outcome o;
    const auto fx = fixture("t_z4_example_5_6");
    const auto &u = fx.ideals.at("U");
    const auto zip = is_sigma_u_zip(u);
    o.require(zip.verdict(), "sigma_u_zip verdict is false");
    o.require(reverify(zip, *fx.twist).ok, "zip report does not re-verify");
    const auto q = to_set(quotient_set(*fx.ring, u.members, ElementSet(16, {8})));
    oracle::Set expected;
    for (int a : {0, 2}) {
        for (int b = 0; b < 4; ++b) {
            expected.insert(a * 4 + b);
        }
    }
    o.require(q == expected, "(U:{(2,0)}) differs from {(a,b) | a in {0,2}}");
    o.require(q != to_set(u.members), "(U:{(2,0)}) equals U");
    o.require(oracle::quotient(oracle::trivial_extension(oracle::zn(4)), to_set(u.members), {8}) == expected,
              "oracle disagrees");
    if (o.pass) {
        o.detail = "zip = true; (U:{(2,0)}) has 8 elements, != U";
    }
    return o;
}

Outcome fusibility()
{
    Outcome o;
    const auto z4 = is_left_fusible(*fixture("z4_example_5_5").ring);
    o.require(!z4.verdict() && z4.witness.at("element") == 2, "Z4 verdict or witness wrong");
    o.require(is_left_fusible(*fixture("klein_fusible").ring).verdict(), "Z2xZ2 not fusible");
    o.require(is_left_fusible(*fixture("gf4_frobenius").ring).verdict(), "GF(4) not fusible");
    return o;
}

Outcome suite_ok(const std::string &name, const std::string &suite, const SuiteOptions &opt, Outcome &o)
{
    const auto fx = fixture(name);
    const auto r = run_suite(fx, suite, opt);
    o.require(r.status == SuiteStatus::pass, name + " " + suite + ": " + std::string(to_string(r.status)));
    for (const auto &c : r.checks) {
        o.require(c.ok, name + " " + suite + ": " + c.report.property + " " + c.reverification);
    }
    return o;
}

Outcome prop_3_2()
{
    Outcome o;
    for (const char *name : {"klein_fusible", "gf4_frobenius"}) {
        const auto r = run_suite(fixture(name), "prop3.2");
        const auto *c = find_check(r, "prop3.2");
        o.require(r.status == SuiteStatus::pass && c != nullptr && c->ok, std::string(name) + ": suite failed");
        if (c != nullptr && c->report.verdict()) {
            o.require(c->report.certificate.at("lifts") == 100, std::string(name) + ": fewer than 100 lifts");
            o.require(c->report.bounds.at("window").size() == 3, std::string(name) + ": window is not [0,2]");
        }
    }
    if (o.pass) {
        o.detail = "2 x 100 certified decompositions";
    }
    return o;
}

Outcome thm_5_4()
{
    Outcome o;
    std::size_t applicable = 0;
    for (const char *name : {"z4_example_5_5", "z4_tau_power"}) {
        const auto r = run_suite(fixture(name), "thm5.4");
        const auto *c = find_check(r, "extraction");
        o.require(r.status == SuiteStatus::pass, std::string(name) + ": suite " + std::string(to_string(r.status)));
        o.require(c != nullptr && c->ok && c->report.verdict(), std::string(name) + ": extraction mismatch");
        if (c != nullptr) {
            o.require(c->report.stats.at("pairs") == 4096, std::string(name) + ": pair scan not exhaustive");
            applicable += c->report.stats.at("applicable").get<std::size_t>();
        }
    }
    if (o.pass) {
        o.detail = std::to_string(applicable) + " applicable pairs, zero mismatches";
    }
    return o;
}

Outcome thm_4_5()
{
    Outcome o;
    SuiteOptions opt;
    opt.window = WindowSpec{0, 1};
    for (const char *name : {"z4_example_5_5", "klein_fusible"}) {
        suite_ok(name, "lemma4.3", opt, o);
        suite_ok(name, "thm4.5", opt, o);
    }
    return o;
}

Outcome base_verdicts()
{
    Outcome o;
    const auto z4 = fixture("z4_example_5_5");
    o.require(is_SA(z4.ring).verdict(), "Z4 not SA");
    o.require(is_IN(z4.ring).verdict(), "Z4 not IN");
    const auto ns = is_right_nonsingular(z4.ring);
    o.require(!ns.verdict(), "Z4 right nonsingular");
    o.require(ns.stats.at("sing").get<oracle::Set>() == oracle::Set{0, 2}, "Sing(Z4) != {0,2}");
    o.require(is_right_nonsingular(fixture("klein_fusible").ring).verdict(), "Z2xZ2 singular");
    return o;
}

Outcome twist_validation()
{
    Outcome o;
    const auto fx = fixture("z4_tau_power");
    const auto w = fx.twist->group().window(-3, 3);
    const auto good = check_twist_conditions(*fx.twist, w);
    o.require(good.get("literal_i").pass && good.get("standard_cocycle").pass, "valid tau rejected");
    o.require(check_associativity_sampled(fx.twist, w, 3, 1000, 0).pass, "sampled associativity failed");
    const auto bad_path = std::string(MN_FIXTURE_DIR) + "/invalid/corrupted_tau.json";
    try {
        load_fixture(bad_path);
        o.require(false, "corrupted tau accepted");
    } catch (const Error &e) {
        o.require(e.kind() == ErrorKind::validation_error, "wrong error kind");
    }
    const auto bad = load_fixture(bad_path, false);
    const auto rep = check_twist_conditions(*bad.twist, w);
    for (const char *c : {"literal_i", "standard_cocycle"}) {
        o.require(!rep.get(c).pass && rep.get(c).witness.has_value(), std::string("corrupted tau passes ") + c);
    }
    const auto assoc = check_associativity_exhaustive(bad.twist, bad.twist->group().window(-1, 1));
    o.require(!assoc.pass && assoc.witness.has_value(), "corrupted tau associative");
    return o;
}

Outcome specializations()
{
    Outcome o;
    std::size_t ni = 0, count = 0;
    for (const auto &path : shipped_fixtures(MN_FIXTURE_DIR)) {
        const auto fx = load_fixture(path);
        ++count;
        const IdealSet zero{fx.ring, ElementSet(fx.ring->size(), {0}), IdealKind::twosided};
        o.require(sigma_u_zip_profile(zero) == right_zip_profile(fx.ring), fx.label + ": right zip disagrees");
        const auto nil = nil_radical(*fx.ring);
        if (nil.is_ni) {
            ++ni;
            o.require(sigma_u_zip_profile(IdealSet{fx.ring, nil.members, IdealKind::twosided}) ==
                          weak_zip_profile(fx.ring),
                      fx.label + ": weak zip disagrees");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " fixtures, " + std::to_string(ni) + " NI";
    }
    return o;
}

Outcome self_checking()
{
    Outcome o;
    std::size_t checks = 0, mutants = 0;
    for (const auto &path : shipped_fixtures(MN_FIXTURE_DIR)) {
        const auto fx = load_fixture(path);
        for (const auto &suite : suite_names()) {
            const auto r = run_suite(fx, suite);
            for (const auto &c : r.checks) {
                ++checks;
                o.require(reverify(c.report, *fx.twist).ok, fx.label + " " + suite + ": " + c.report.property);
            }
        }
        const Elem a = 1, b = Elem(fx.ring->size() - 1);
        const auto bad = mutate_fixture(fx, true, a, b, Elem((fx.ring->mul(a, b) + 1) % fx.ring->size()));
        bool caught = false;
        for (const auto &suite : suite_names()) {
            const auto r = run_suite(bad, suite);
            for (const auto &c : r.checks) {
                caught = caught || (!c.ok && !c.report.witness.is_null());
            }
            if (caught) {
                break;
            }
        }
        o.require(caught, fx.label + ": mutation undetected");
        ++mutants;
    }
    if (o.pass) {
        o.detail = std::to_string(checks) + " checks re-verified; " + std::to_string(mutants) + " mutants caught";
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char *name;
        double limit_ms;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Z4 zip witnesses and (U:{3})", 1000, example_5_5},
        {2, "T(Z4) zip with corrected quotient", 1000, example_5_6},
        {3, "fusibility verdicts", 0, fusibility},
        {4, "fusible lift harness", 30000, prop_3_2},
        {5, "extraction vs oracle", 300000, thm_5_4},
        {6, "annihilator lift and SA transfer", 0, thm_4_5},
        {7, "SA / IN / nonsingular verdicts", 0, base_verdicts},
        {8, "twist validation", 0, twist_validation},
        {9, "zip specializations", 0, specializations},
        {10, "self-checking reports and mutation", 0, self_checking},
    };
    bool all = true;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms > c.limit_ms) {
            out.require(false, "runtime " + std::to_string(ms) + " ms over limit");
        }
        all = all && out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << static_cast<long>(ms)
                  << " ms)" << (out.detail.empty() ? "" : ": " + out.detail) << "\n";
    }
    return all ? 0 : 1;
}
