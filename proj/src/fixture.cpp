#include <mn/fixture.hpp>

#include <algorithm>
#include <fstream>

#include <mn/error.hpp>

namespace mn
{

namespace
{

WindowSpec window_from_json(const nlohmann::json &j)
{
    if (!j.is_array() || j.size() != 2) {
        fail(ErrorKind::malformed_spec, "window must be [lo, hi]");
    }
    WindowSpec w{j.at(0).get<std::int32_t>(), j.at(1).get<std::int32_t>()};
    if (w.lo > w.hi) {
        fail(ErrorKind::malformed_spec, "window has lo > hi");
    }
    return w;
}

} // namespace

std::vector<GroupElement> Fixture::window_elements(const WindowSpec &w) const
{
    return twist->group().window(w.lo, w.hi);
}

Elem element_ref(const FiniteRing &ring, const nlohmann::json &j)
{
    if (j.is_string()) {
        const auto e = ring.find(j.get<std::string>());
        if (!e) {
            fail(ErrorKind::malformed_spec, "ring " + ring.label() + " has no element named '" + j.get<std::string>() + "'");
        }
        return *e;
    }
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= ring.size()) {
        fail(ErrorKind::malformed_spec, "element id " + std::to_string(v) + " outside ring " + ring.label());
    }
    return static_cast<Elem>(v);
}

ElementSet element_set_ref(const FiniteRing &ring, const nlohmann::json &j)
{
    ElementSet s(ring.size());
    for (const auto &e : j) {
        s.insert(element_ref(ring, e));
    }
    return s;
}

Series series_ref(const TwistPtr &twist, const nlohmann::json &j)
{
    if (!j.is_array()) {
        fail(ErrorKind::malformed_spec, "series must be [[exponent, coefficient], ...]");
    }
    std::vector<Series::Term> terms;
    for (const auto &t : j) {
        if (!t.is_array() || t.size() != 2) {
            fail(ErrorKind::malformed_spec, "series term must be [exponent, coefficient]");
        }
        terms.emplace_back(twist->group().element_from_json(t.at(0)), element_ref(*twist->ring(), t.at(1)));
    }
    return Series::make(twist, std::move(terms));
}

Series fixture_series(const Fixture &fixture, const nlohmann::json &j)
{
    if (j.is_string()) {
        const auto it = fixture.series.find(j.get<std::string>());
        if (it == fixture.series.end()) {
            fail(ErrorKind::malformed_spec, "fixture has no series named '" + j.get<std::string>() + "'");
        }
        return it->second;
    }
    return series_ref(fixture.twist, j);
}

Fixture fixture_from_json(const nlohmann::json &doc, const std::filesystem::path &base_dir, bool validate)
{
    Fixture fx;
    try {
        fx.doc = doc;
        fx.label = doc.at("label").get<std::string>();
        fx.ring = ring_make(RingSpec::from_json(doc.at("ring"), base_dir));
        const auto group = doc.contains("group") ? OrderedGroup::from_json(doc.at("group")) : OrderedGroup::z();
        fx.twist = doc.contains("twist") ? TwistSystem::from_json(doc.at("twist"), fx.ring, group)
                                         : TwistSystem::trivial(fx.ring, group);
        if (doc.contains("ideals")) {
            for (const auto &[name, spec] : doc.at("ideals").items()) {
                if (spec.contains("members")) {
                    const auto members = element_set_ref(*fx.ring, spec.at("members"));
                    fx.ideals.emplace(name, IdealSet{fx.ring, members, classify(*fx.ring, members)});
                } else {
                    const auto kind = ideal_kind_from_string(spec.value("kind", std::string("twosided")));
                    fx.ideals.emplace(name, ideal_closure(fx.ring, element_set_ref(*fx.ring, spec.at("generators")), kind));
                }
            }
        }
        if (doc.contains("series")) {
            for (const auto &[name, spec] : doc.at("series").items()) {
                fx.series.emplace(name, series_ref(fx.twist, spec));
            }
        }
        if (doc.contains("window")) {
            fx.window = window_from_json(doc.at("window"));
        }
        if (doc.contains("universe_window")) {
            fx.universe_window = window_from_json(doc.at("universe_window"));
        }
        fx.max_support = doc.value("max_support", fx.max_support);
        if (doc.contains("armendariz")) {
            const auto &a = doc.at("armendariz");
            if (a.contains("window")) {
                fx.armendariz_window = window_from_json(a.at("window"));
            }
            fx.armendariz_support = a.value("max_support", fx.armendariz_support);
        }
        fx.zip_ideal = doc.value("zip_ideal", std::string());
        if (!fx.zip_ideal.empty() && !fx.ideals.count(fx.zip_ideal)) {
            fail(ErrorKind::malformed_spec, "zip_ideal '" + fx.zip_ideal + "' is not a named ideal");
        }
        for (const auto &c : doc.value("claims", std::vector<std::string>{})) {
            fx.claims.insert(c);
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::validation_error, std::string("fixture structure: ") + e.what());
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::validation_error) {
            throw;
        }
        fail(ErrorKind::validation_error, e.what());
    }
    if (validate) {
        validate_fixture(fx);
    }
    return fx;
}

void validate_fixture(const Fixture &fx)
{
    const auto &group = fx.twist->group();
    const auto small = group.rank() == 1 ? group.window(-1, 1) : group.window(0, 1);
    const auto exhaustive = check_associativity_exhaustive(fx.twist, small);
    auto assoc_fail = [&](const AssociativityReport &r) {
        const auto &w = *r.witness;
        fail(ErrorKind::validation_error, "fixture '" + fx.label + "': associativity fails at f = " + w[0].format() +
                                              ", g = " + w[1].format() + ", h = " + w[2].format());
    };
    if (!exhaustive.pass) {
        assoc_fail(exhaustive);
    }
    const auto wide = group.rank() == 1 ? group.window(-3, 3) : group.window(-1, 1);
    const auto sampled = check_associativity_sampled(fx.twist, wide, 3, 1000, 0);
    if (!sampled.pass) {
        assoc_fail(sampled);
    }
    const auto tc = check_twist_conditions(*fx.twist, wide);
    for (const auto &c : tc.conditions) {
        if (!c.pass) {
            fail(ErrorKind::validation_error, "fixture '" + fx.label + "': twist condition " + c.name + " fails: " +
                                                  tc.to_json(group).dump());
        }
    }
}

Fixture load_fixture(const std::filesystem::path &path, bool validate)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::parse_error, "cannot open fixture " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::parse_error, path.string() + ": " + e.what());
    }
    auto fx = fixture_from_json(doc, path.parent_path(), validate);
    fx.path = path;
    return fx;
}

Fixture mutate_fixture(const Fixture &fixture, bool mul_table, Elem a, Elem b, Elem value)
{
    Fixture fx = fixture;
    fx.ring = std::make_shared<const FiniteRing>(fixture.ring->with_entry(mul_table, a, b, value));
    fx.label = fixture.label + "~mutated";
    fx.twist = TwistSystem::trivial(fx.ring, fixture.twist->group());
    for (auto &[name, ideal] : fx.ideals) {
        ideal.ring = fx.ring;
    }
    std::map<std::string, Series> series;
    for (const auto &[name, f] : fixture.series) {
        std::vector<Series::Term> terms = f.terms();
        series.emplace(name, Series::make(fx.twist, std::move(terms)));
    }
    fx.series = std::move(series);
    return fx;
}

std::vector<std::filesystem::path> shipped_fixtures(const std::filesystem::path &dir)
{
    std::vector<std::filesystem::path> out;
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            out.push_back(entry.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mn
