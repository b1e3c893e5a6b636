#include <mn/suite.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <mn/error.hpp>
#include <mn/props.hpp>
#include <mn/reverify.hpp>
#include <mn/transfer.hpp>

namespace mn
{

std::string_view to_string(SuiteStatus s) noexcept
{
    switch (s) {
        case SuiteStatus::pass:
            return "pass";
        case SuiteStatus::fail:
            return "fail";
        case SuiteStatus::not_applicable:
            return "not_applicable";
    }
    return "fail";
}

namespace
{

SuiteStatus suite_status_from_string(const std::string &s)
{
    for (auto st : {SuiteStatus::pass, SuiteStatus::fail, SuiteStatus::not_applicable}) {
        if (to_string(st) == s) {
            return st;
        }
    }
    fail(ErrorKind::parse_error, "unknown suite status '" + s + "'");
}

} // namespace

nlohmann::json SuiteReport::to_json(bool include_timing) const
{
    auto cs = nlohmann::json::array();
    for (const auto &c : checks) {
        cs.push_back({{"report", c.report.to_json(include_timing)}, {"ok", c.ok}, {"reverification", c.reverification}});
    }
    return {{"fixture", fixture},
            {"suite", suite},
            {"status", std::string(to_string(status))},
            {"checks", cs},
            {"warnings", warnings},
            {"elapsed", include_timing ? nlohmann::json(elapsed_ms) : nlohmann::json(nullptr)}};
}

SuiteReport SuiteReport::from_json(const nlohmann::json &j)
{
    try {
        SuiteReport r;
        r.fixture = j.at("fixture").get<std::string>();
        r.suite = j.at("suite").get<std::string>();
        r.status = suite_status_from_string(j.at("status").get<std::string>());
        for (const auto &c : j.at("checks")) {
            r.checks.push_back(
                {PropertyReport::from_json(c.at("report")), c.at("ok").get<bool>(), c.at("reverification").get<std::string>()});
        }
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        r.elapsed_ms = j.at("elapsed").is_number() ? j.at("elapsed").get<double>() : 0.0;
        return r;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse_error, std::string("suite report: ") + e.what());
    }
}

std::string SuiteReport::to_text() const
{
    std::ostringstream os;
    os << fixture << " / " << suite << ": " << to_string(status) << "\n";
    for (const auto &w : warnings) {
        os << "  warning: " << w << "\n";
    }
    for (const auto &c : checks) {
        std::istringstream body(c.report.to_text());
        std::string line;
        bool first = true;
        while (std::getline(body, line)) {
            os << (first ? (c.ok ? "  [ok]   " : "  [FAIL] ") : "         ") << line << "\n";
            first = false;
        }
        if (!c.ok) {
            os << "         reverification: " << c.reverification << "\n";
        }
    }
    return os.str();
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"ring-axioms", "ideals",  "properties", "prop3.2",
                                                "lemma4.3",    "thm4.5", "thm5.4",     "examples"};
    return names;
}

std::string canonical_suite(std::string_view name)
{
    static const std::map<std::string, std::string, std::less<>> aliases{
        {"axioms", "ring-axioms"},         {"props", "properties"},        {"fusible-lift", "prop3.2"},
        {"annihilator-lift", "lemma4.3"}, {"sa-transfer", "thm4.5"},      {"zip-transfer", "thm5.4"}};
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
        return std::string(name);
    }
    if (const auto it = aliases.find(name); it != aliases.end()) {
        return it->second;
    }
    fail(ErrorKind::suite_unknown, "unknown suite '" + std::string(name) + "'");
}

namespace
{

using json = nlohmann::json;

enum class Expect { any, holds, not_fails };

class Runner
{
public:
    Runner(const Fixture &fx, std::string suite, const SuiteOptions &opt) : m_fx(fx), m_opt(opt)
    {
        m_rep.fixture = fx.label;
        m_rep.suite = std::move(suite);
    }

    const Fixture &fx() const
    {
        return m_fx;
    }
    const SuiteOptions &opt() const
    {
        return m_opt;
    }

    void add(PropertyReport r, Expect expect)
    {
        const auto rv = reverify(r, *m_fx.twist);
        bool ok = rv.ok;
        if (expect == Expect::holds) {
            ok = ok && r.status == Status::holds;
        } else if (expect == Expect::not_fails) {
            ok = ok && r.status != Status::fails;
        }
        if (!m_opt.timing) {
            r.elapsed_ms = 0.0;
        }
        m_rep.checks.push_back({std::move(r), ok, rv.detail});
    }

    // A failed precondition: a warning, or a failure when the fixture claims the suite.
    void precondition(const std::string &why)
    {
        if (m_fx.claims.count(m_rep.suite)) {
            PropertyReport r;
            r.property = "precondition";
            r.status = Status::fails;
            r.witness = {{"reason", why}};
            m_rep.checks.push_back({std::move(r), false, "precondition: claimed applicable"});
        } else {
            m_rep.warnings.push_back("not applicable: " + why);
            m_na = true;
        }
    }

    void warn(std::string w)
    {
        m_rep.warnings.push_back(std::move(w));
    }

    SuiteReport finish(double elapsed)
    {
        const bool bad = std::any_of(m_rep.checks.begin(), m_rep.checks.end(), [](const auto &c) { return !c.ok; });
        m_rep.status = bad ? SuiteStatus::fail : (m_na ? SuiteStatus::not_applicable : SuiteStatus::pass);
        m_rep.elapsed_ms = m_opt.timing ? elapsed : 0.0;
        return std::move(m_rep);
    }

private:
    const Fixture &m_fx;
    const SuiteOptions &m_opt;
    SuiteReport m_rep;
    bool m_na = false;
};

json window_json(const OrderedGroup &g, const std::vector<GroupElement> &w)
{
    auto out = json::array();
    for (const auto &x : w) {
        out.push_back(g.element_to_json(x));
    }
    return out;
}

std::vector<GroupElement> condition_window(const OrderedGroup &g)
{
    return g.rank() == 1 ? g.window(-3, 3) : g.window(-1, 1);
}

void run_ring_axioms(Runner &run)
{
    const auto &fx = run.fx();
    const auto axioms = check_ring_axioms(*fx.ring);
    PropertyReport ar;
    ar.property = "ring_axioms";
    ar.stats = {{"axioms", axioms.checks.size()}, {"ring_size", fx.ring->size()}};
    if (const auto *bad = axioms.first_failure()) {
        ar.status = Status::fails;
        ar.witness = {{"axiom", bad->axiom}, {"tuple", bad->witness}};
    }
    const bool ring_ok = ar.verdict();
    run.add(std::move(ar), Expect::holds);
    if (!ring_ok) {
        return;
    }

    const auto &group = fx.twist->group();
    const auto win = condition_window(group);
    const auto tc = check_twist_conditions(*fx.twist, win);
    PropertyReport tr;
    tr.property = "twist_conditions";
    auto failures = json::array();
    for (const auto &c : tc.conditions) {
        tr.stats[c.name] = c.pass;
        if (!c.pass) {
            json f{{"condition", c.name}, {"at", window_json(group, *c.witness)}};
            if (c.element) {
                f["element"] = *c.element;
            }
            failures.push_back(std::move(f));
        }
    }
    if (!failures.empty()) {
        tr.status = Status::fails;
        tr.witness = {{"failures", failures}};
    } else {
        tr.certificate = {{"window", window_json(group, win)}};
    }
    run.add(std::move(tr), Expect::holds);

    const auto small = group.rank() == 1 ? group.window(-1, 1) : group.window(0, 1);
    auto assoc = check_associativity_exhaustive(fx.twist, small);
    const auto exhaustive_checked = assoc.checked;
    if (assoc.pass) {
        assoc = check_associativity_sampled(fx.twist, win, 3, 1000, run.opt().seed);
    }
    PropertyReport as;
    as.property = "associativity";
    as.stats = {{"exhaustive_single_term", exhaustive_checked}, {"sampled", assoc.pass ? assoc.checked : 0}};
    if (!assoc.pass) {
        const auto &w = *assoc.witness;
        as.status = Status::fails;
        as.witness = {{"f", w[0].to_json()}, {"g", w[1].to_json()}, {"h", w[2].to_json()}};
    } else {
        as.certificate = {{"checked", exhaustive_checked + assoc.checked}, {"seed", run.opt().seed}};
    }
    run.add(std::move(as), Expect::holds);
}

json ideal_list(const std::vector<IdealSet> &ideals)
{
    auto out = json::array();
    for (const auto &i : ideals) {
        out.push_back(set_json(i.members));
    }
    return out;
}

void run_ideals(Runner &run)
{
    const auto &fx = run.fx();
    PropertyReport lat;
    lat.property = "ideal_lattice";
    const auto right = enumerate_ideals(fx.ring, IdealKind::right);
    const auto left = enumerate_ideals(fx.ring, IdealKind::left);
    const auto two = enumerate_ideals(fx.ring, IdealKind::twosided);
    lat.certificate = {{"right", ideal_list(right)}, {"left", ideal_list(left)}, {"twosided", ideal_list(two)}};
    lat.stats = {{"right", right.size()}, {"left", left.size()}, {"twosided", two.size()}};
    run.add(std::move(lat), Expect::holds);

    for (const auto &[name, ideal] : fx.ideals) {
        PropertyReport r;
        r.property = "ideal";
        const auto sp = is_semiprime_ideal(ideal);
        const auto sc = is_sigma_compatible_ideal(ideal, fx.twist->generators());
        r.stats = {{"name", name},
                   {"members", set_json(ideal.members)},
                   {"kind", std::string(to_string(classify(*fx.ring, ideal.members)))},
                   {"semiprime", sp.semiprime},
                   {"sigma_compatible", sc.compatible}};
        if (sp.witness) {
            r.stats["semiprime_witness"] = {sp.witness->element, sp.witness->exponent};
        }
        run.add(std::move(r), Expect::any);
    }
}

PropertyReport zip_specialization(const std::string &kind, const ZipProfile &sigma_u, const ZipProfile &direct)
{
    PropertyReport r;
    r.property = "zip_specialization";
    for (std::size_t x = 0; x < sigma_u.witness.size(); ++x) {
        if (sigma_u.witness[x] != direct.witness[x]) {
            auto side = [&](const std::optional<std::uint32_t> &w) {
                return w ? set_json(mask_to_set(*w, sigma_u.universe)) : json(nullptr);
            };
            r.status = Status::fails;
            r.witness = {{"kind", kind},
                         {"x", set_json(mask_to_set(std::uint32_t(x), sigma_u.universe))},
                         {"sigma_u", side(sigma_u.witness[x])},
                         {"direct", side(direct.witness[x])}};
            return r;
        }
    }
    r.certificate = {{"kind", kind}, {"applicable", sigma_u.applicable()}};
    return r;
}

PropertyReport run_property(const Fixture &fx, const std::string &name)
{
    if (name == "left_fusible") {
        return is_left_fusible(*fx.ring);
    }
    if (name == "sigma_compatible") {
        return is_sigma_compatible_ring(*fx.ring, fx.twist->generators());
    }
    if (name == "right_nonsingular") {
        return is_right_nonsingular(fx.ring);
    }
    if (name == "IN") {
        return is_IN(fx.ring);
    }
    if (name == "SA") {
        return is_SA(fx.ring);
    }
    if (name == "G_armendariz") {
        return is_G_armendariz(fx.twist, fx.armendariz_support, fx.window_elements(fx.armendariz_window));
    }
    fail(ErrorKind::malformed_spec, "unknown property '" + name + "'");
}

void run_properties(Runner &run)
{
    const auto &fx = run.fx();
    for (const char *p : {"left_fusible", "sigma_compatible", "right_nonsingular", "IN", "SA", "G_armendariz"}) {
        try {
            run.add(run_property(fx, p), Expect::any);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::bounds_too_large && e.kind() != ErrorKind::size_cap_exceeded) {
                throw;
            }
            run.warn(std::string(p) + " skipped: " + e.what());
        }
    }
    if (fx.ring->size() > zip_profile_cap) {
        run.warn("zip profiles skipped: ring larger than " + std::to_string(zip_profile_cap));
        return;
    }
    for (const auto &[name, ideal] : fx.ideals) {
        run.add(is_sigma_u_zip(ideal), Expect::holds);
    }
    const auto n = fx.ring->size();
    const IdealSet zero{fx.ring, ElementSet(n, {Elem{0}}), IdealKind::twosided};
    run.add(zip_specialization("right", sigma_u_zip_profile(zero), right_zip_profile(fx.ring)), Expect::holds);
    const auto nil = nil_radical(*fx.ring);
    if (nil.is_ni) {
        const IdealSet nil_ideal{fx.ring, nil.members, IdealKind::twosided};
        run.add(zip_specialization("weak", sigma_u_zip_profile(nil_ideal), weak_zip_profile(fx.ring)), Expect::holds);
    } else {
        run.warn("weak zip comparison skipped: ring is not NI");
    }
}

std::vector<GroupElement> series_window(Runner &run)
{
    const auto &fx = run.fx();
    return fx.window_elements(run.opt().window.value_or(fx.window));
}

void run_prop32(Runner &run)
{
    const auto &fx = run.fx();
    if (!is_left_fusible(*fx.ring).verdict()) {
        return run.precondition(fx.ring->label() + " is not left fusible");
    }
    if (!is_sigma_compatible_ring(*fx.ring, fx.twist->generators()).verdict()) {
        return run.precondition(fx.ring->label() + " is not sigma-compatible");
    }
    if (!fx.twist->normalized()) {
        return run.precondition("twist is not normalized");
    }
    const auto window = series_window(run);
    std::optional<TruncatedUniverse> universe;
    try {
        universe.emplace(fx.twist, window);
    } catch (const Error &e) {
        return run.precondition(e.what());
    }
    const auto support = run.opt().max_support.value_or(fx.max_support);
    std::mt19937_64 rng(run.opt().seed);
    PropertyReport agg;
    agg.property = "prop3.2";
    agg.bounds = {{"window", universe->window_json()}, {"universe_size", universe->count()}, {"max_support", support}};
    auto samples = json::array();
    std::size_t lifted = 0;
    for (std::size_t i = 0; i < run.opt().samples && agg.verdict(); ++i) {
        const auto f = random_series(fx.twist, window, 1, support, rng);
        const auto lift = lift_fusible_decomposition(f, *universe);
        const auto rv = reverify(lift.report, *fx.twist);
        if (!lift.report.verdict() || !rv.ok) {
            agg.status = Status::fails;
            agg.witness = {{"index", i}, {"lift", lift.report.to_json()}, {"reverification", rv.detail}};
            break;
        }
        ++lifted;
        if (samples.size() < 3) {
            samples.push_back(lift.report.certificate);
        }
    }
    if (agg.verdict()) {
        agg.certificate = {{"lifts", lifted}, {"samples", samples}};
    }
    agg.stats = {{"lifts", lifted}, {"seed", run.opt().seed}};
    run.add(std::move(agg), Expect::holds);
}

std::optional<TruncatedUniverse> make_universe(Runner &run, const std::vector<GroupElement> &window)
{
    try {
        return TruncatedUniverse(run.fx().twist, window);
    } catch (const Error &e) {
        run.precondition(e.what());
        return std::nullopt;
    }
}

void run_lemma43(Runner &run)
{
    const auto &fx = run.fx();
    if (!is_sigma_compatible_ring(*fx.ring, fx.twist->generators()).verdict()) {
        return run.precondition(fx.ring->label() + " is not sigma-compatible");
    }
    const auto universe = make_universe(run, fx.window_elements(run.opt().window.value_or(fx.universe_window)));
    if (!universe) {
        return;
    }
    const auto right = enumerate_ideals(fx.ring, IdealKind::right);
    for (std::size_t i = 0; i < right.size(); ++i) {
        for (std::size_t j = i; j < right.size(); ++j) {
            run.add(lifted_annihilator_check(right[i], right[j], Side::left, *universe), Expect::holds);
        }
    }
    const auto two = enumerate_ideals(fx.ring, IdealKind::twosided);
    for (std::size_t i = 0; i < two.size(); ++i) {
        for (std::size_t j = i; j < two.size(); ++j) {
            run.add(lifted_annihilator_check(two[i], two[j], Side::right, *universe), Expect::holds);
        }
    }
}

void run_thm45(Runner &run)
{
    const auto &fx = run.fx();
    const auto universe = make_universe(run, fx.window_elements(run.opt().window.value_or(fx.universe_window)));
    if (!universe) {
        return;
    }
    if (!fx.twist->normalized()) {
        return run.precondition("twist is not normalized");
    }
    if (!is_SA(fx.ring).verdict()) {
        return run.precondition(fx.ring->label() + " is not SA");
    }
    if (!is_G_armendariz(fx.twist, universe->window().size(), universe->window()).verdict()) {
        return run.precondition(fx.ring->label() + " is not G-Armendariz on the universe bounds");
    }
    std::vector<std::pair<std::vector<Series>, std::vector<Series>>> configs;
    if (fx.doc.contains("sa_configs")) {
        for (const auto &c : fx.doc.at("sa_configs")) {
            std::vector<Series> is, js;
            for (const auto &s : c.at("i")) {
                is.push_back(fixture_series(fx, s));
            }
            for (const auto &s : c.at("j")) {
                js.push_back(fixture_series(fx, s));
            }
            configs.emplace_back(std::move(is), std::move(js));
        }
    } else {
        const auto two = enumerate_ideals(fx.ring, IdealKind::twosided);
        const auto &w = universe->window();
        auto gens = [&](const IdealSet &i, const GroupElement &x) {
            std::vector<Series> out;
            i.members.for_each([&](Elem e) {
                if (e != 0) {
                    out.push_back(single_term(fx.twist, x, e));
                }
            });
            return out;
        };
        for (std::size_t i = 0; i < two.size(); ++i) {
            for (std::size_t j = i; j < two.size(); ++j) {
                configs.emplace_back(gens(two[i], w.front()), gens(two[j], w.back()));
            }
        }
    }
    for (const auto &[is, js] : configs) {
        try {
            run.add(sa_transfer_witness(is, js, *universe), Expect::holds);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::no_k) {
                throw;
            }
            PropertyReport r;
            r.property = "sa_transfer";
            r.status = Status::fails;
            r.witness = {{"error", e.what()}};
            run.add(std::move(r), Expect::holds);
        }
    }
}

void run_thm54(Runner &run)
{
    const auto &fx = run.fx();
    if (fx.ideals.empty()) {
        return run.precondition("fixture names no ideal U");
    }
    const auto &u = fx.zip_ideal.empty() ? fx.ideals.begin()->second : fx.ideals.at(fx.zip_ideal);
    if (classify(*fx.ring, u.members) != IdealKind::twosided) {
        return run.precondition("U is not a two-sided ideal");
    }
    if (const auto sp = is_semiprime_ideal(u); !sp.semiprime) {
        return run.precondition("U is not semiprime (" + std::to_string(sp.witness->element) + "^" +
                                std::to_string(sp.witness->exponent) + " lies in U)");
    }
    if (!is_sigma_compatible_ideal(u, fx.twist->generators()).compatible) {
        return run.precondition("U is not sigma-compatible");
    }
    if (fx.ring->size() <= zip_profile_cap) {
        run.add(is_sigma_u_zip(u), Expect::holds);
    }

    const auto universe = make_universe(run, series_window(run));
    if (!universe) {
        return;
    }
    const auto &all = universe->all();
    if (all.size() * all.size() > 20'000'000) {
        run.warn("extraction scan skipped: universe too large");
    } else {
        PropertyReport ex;
        ex.property = "extraction";
        ex.bounds = {{"window", universe->window_json()}, {"universe_size", universe->count()}};
        std::size_t pairs = 0, applicable = 0, steps = 0;
        auto samples = json::array();
        for (const auto &f : all) {
            for (const auto &g : all) {
                ++pairs;
                if (!(f * g).coefficients_in(u.members)) {
                    continue;
                }
                ++applicable;
                try {
                    const auto trace = coefficient_extraction(f, g, u);
                    steps += trace.steps.size();
                    if (samples.size() < 3 && f.support_size() >= 2 && g.support_size() >= 2) {
                        samples.push_back(
                            {{"f", f.to_json()}, {"g", g.to_json()}, {"trace", trace.to_json(fx.twist->group())}});
                    }
                } catch (const Error &e) {
                    if (e.kind() != ErrorKind::trace_mismatch) {
                        throw;
                    }
                    ex.status = Status::fails;
                    ex.witness = {{"u", set_json(u.members)}, {"f", f.to_json()}, {"g", g.to_json()}, {"error", e.what()}};
                    break;
                }
            }
            if (!ex.verdict()) {
                break;
            }
        }
        if (ex.verdict()) {
            ex.certificate = {{"u", set_json(u.members)}, {"samples", samples}};
        }
        ex.stats = {{"pairs", pairs}, {"applicable", applicable}, {"steps", steps}};
        run.add(std::move(ex), Expect::holds);
    }

    if (fx.doc.contains("zip_sets")) {
        const auto small = make_universe(run, fx.window_elements(run.opt().window.value_or(fx.universe_window)));
        if (!small) {
            return;
        }
        for (const auto &set : fx.doc.at("zip_sets")) {
            std::vector<Series> xs;
            for (const auto &s : set) {
                xs.push_back(fixture_series(fx, s));
            }
            run.add(series_zip_witness(xs, u, *small), Expect::not_fails);
        }
    }
}

void run_examples(Runner &run)
{
    const auto &fx = run.fx();
    if (!fx.doc.contains("expect")) {
        return run.precondition("fixture lists no expectations");
    }
    auto ideal = [&](const json &e) -> const IdealSet & {
        const auto name = e.at("ideal").get<std::string>();
        if (!fx.ideals.count(name)) {
            fail(ErrorKind::malformed_spec, "expectation names unknown ideal '" + name + "'");
        }
        return fx.ideals.at(name);
    };
    for (const auto &e : fx.doc.at("expect")) {
        const auto kind = e.at("check").get<std::string>();
        PropertyReport ex;
        ex.property = "example";
        json actual;
        bool match = false;
        if (kind == "quotient") {
            const auto &u = ideal(e);
            const auto x = element_set_ref(*fx.ring, e.at("x"));
            const auto q = quotient_set(*fx.ring, u.members, x);
            actual = set_json(q);
            match = q == element_set_ref(*fx.ring, e.at("equals"));
            ex.certificate = {{"u", set_json(u.members)}, {"x", set_json(x)}, {"quotient", actual}};
        } else if (kind == "zip_witness") {
            auto r = sigma_u_zip_witness(ideal(e), element_set_ref(*fx.ring, e.at("x")), fx.twist->generators());
            match = std::string(to_string(r.status)) == e.at("status").get<std::string>();
            if (e.contains("y")) {
                match = match && r.certificate.at("y") == set_json(element_set_ref(*fx.ring, e.at("y")));
            }
            actual = r.to_json();
            run.add(std::move(r), Expect::any);
        } else if (kind == "zip") {
            auto r = is_sigma_u_zip(ideal(e));
            match = r.verdict() == e.at("verdict").get<bool>();
            actual = r.verdict();
            run.add(std::move(r), Expect::any);
        } else if (kind == "property") {
            auto r = run_property(fx, e.at("name").get<std::string>());
            match = r.verdict() == e.at("verdict").get<bool>();
            if (e.contains("witness")) {
                for (const auto &[k, v] : e.at("witness").items()) {
                    match = match && r.witness.contains(k) && r.witness.at(k) == v;
                }
            }
            actual = r.to_json();
            run.add(std::move(r), Expect::any);
        } else if (kind == "sing") {
            const auto r = is_right_nonsingular(fx.ring);
            actual = r.stats.at("sing");
            match = actual == set_json(element_set_ref(*fx.ring, e.at("equals")));
        } else if (kind == "semiprime") {
            const auto sp = is_semiprime_ideal(ideal(e));
            actual = sp.semiprime;
            match = sp.semiprime == e.at("verdict").get<bool>();
        } else if (kind == "twist") {
            const auto tc = check_twist_conditions(*fx.twist, condition_window(fx.twist->group()));
            const auto &c = tc.get(e.at("condition").get<std::string>());
            actual = c.pass;
            match = c.pass == e.at("pass").get<bool>();
        } else if (kind == "lift") {
            const TruncatedUniverse universe(fx.twist, series_window(run));
            auto lift = lift_fusible_decomposition(fixture_series(fx, e.at("series")), universe);
            match = lift.g == series_ref(fx.twist, e.at("g")) && lift.h == series_ref(fx.twist, e.at("h")) &&
                    lift.report.certificate.at("d") == e.at("d");
            actual = {{"g", lift.g.to_json()}, {"h", lift.h.to_json()}, {"d", lift.report.certificate.value("d", json())}};
            run.add(std::move(lift.report), Expect::holds);
        } else if (kind == "product") {
            const auto p = fixture_series(fx, e.at("f")) * fixture_series(fx, e.at("g"));
            actual = p.to_json();
            match = p == series_ref(fx.twist, e.at("equals"));
        } else {
            fail(ErrorKind::malformed_spec, "unknown expectation kind '" + kind + "'");
        }
        ex.stats = {{"check", kind}, {"expected", e}, {"actual", actual}};
        if (!match) {
            ex.status = Status::fails;
            ex.witness = ex.certificate.is_null() ? json{{"actual", actual}} : ex.certificate;
            ex.certificate = nullptr;
        }
        run.add(std::move(ex), Expect::holds);
    }
}

} // namespace

SuiteReport run_suite(const Fixture &fixture, std::string_view suite, const SuiteOptions &options)
{
    Stopwatch sw;
    const auto name = canonical_suite(suite);
    Runner run(fixture, name, options);
    static const std::map<std::string, std::function<void(Runner &)>> table{
        {"ring-axioms", run_ring_axioms}, {"ideals", run_ideals}, {"properties", run_properties},
        {"prop3.2", run_prop32},          {"lemma4.3", run_lemma43}, {"thm4.5", run_thm45},
        {"thm5.4", run_thm54},            {"examples", run_examples}};
    table.at(name)(run);
    return run.finish(sw.elapsed_ms());
}

} // namespace mn
