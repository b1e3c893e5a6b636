#ifndef MN_FIXTURE_HPP
#define MN_FIXTURE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include <mn/ideal.hpp>
#include <mn/series.hpp>

namespace mn
{

struct WindowSpec {
    std::int32_t lo = 0;
    std::int32_t hi = 2;
};

// One JSON document: ring, group, twist, named ideals/sets/series, bounds,
// suite configuration and expectations.
struct Fixture {
    std::string label;
    std::filesystem::path path;
    nlohmann::json doc;

    RingPtr ring;
    TwistPtr twist;
    std::map<std::string, IdealSet> ideals;
    std::map<std::string, Series> series;

    WindowSpec window{0, 2};
    WindowSpec universe_window{0, 1};
    WindowSpec armendariz_window{0, 1};
    std::size_t max_support = 3;
    std::size_t armendariz_support = 2;
    std::string zip_ideal;
    std::set<std::string> claims;

    std::vector<GroupElement> window_elements(const WindowSpec &w) const;
};

// ParseError for unreadable or non-JSON input; ValidationError naming the
// failing invariant (axioms, automorphisms, twist conditions, associativity).
Fixture load_fixture(const std::filesystem::path &path, bool validate = true);
Fixture fixture_from_json(const nlohmann::json &doc, const std::filesystem::path &base_dir, bool validate = true);
void validate_fixture(const Fixture &fixture);

// Same fixture over a ring with one table entry replaced. The twist falls back
// to the trivial one over the new ring.
Fixture mutate_fixture(const Fixture &fixture, bool mul_table, Elem a, Elem b, Elem value);

// Element reference: integer id or element name.
Elem element_ref(const FiniteRing &ring, const nlohmann::json &j);
ElementSet element_set_ref(const FiniteRing &ring, const nlohmann::json &j);
// [[exponent, coefficient], ...] with coefficient references.
Series series_ref(const TwistPtr &twist, const nlohmann::json &j);
// A series name from the fixture or an inline series.
Series fixture_series(const Fixture &fixture, const nlohmann::json &j);

std::vector<std::filesystem::path> shipped_fixtures(const std::filesystem::path &dir);

} // namespace mn

#endif
