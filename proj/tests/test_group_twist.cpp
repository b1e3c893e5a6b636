#include <doctest.h>

#include <limits>

#include <mn/error.hpp>
#include <mn/twist.hpp>

#include "support.hpp"

using namespace mn;

namespace
{

int tau_power(int x, int y)
{
    return (x * y) % 2 != 0 ? 3 : 1;
}

oracle::Twist tau_oracle(bool corrupted)
{
    return {oracle::zn(4), [](int, int r) { return r; },
            [corrupted](int x, int y) { return corrupted && x == 1 && y == 1 ? 1 : tau_power(x, y); }};
}

bool literal_i_holds(const oracle::Twist &t, int x, int y, int z)
{
    const auto &r = t.ring;
    return r.mul(t.tau(x + y, z), t.sigma(x, t.tau(x, y))) == r.mul(t.tau(x, y + z), t.tau(y, z));
}

bool standard_holds(const oracle::Twist &t, int x, int y, int z)
{
    const auto &r = t.ring;
    return r.mul(t.tau(x, y), t.tau(x + y, z)) == r.mul(t.sigma(x, t.tau(y, z)), t.tau(x, y + z));
}

} // namespace

TEST_CASE("ordered groups")
{
    const auto z = OrderedGroup::z();
    const auto w = z.window(-2, 2);
    REQUIRE(w.size() == 5);
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK(z.op(z.element(3), z.element(-5)) == z.element(-2));
    CHECK(z.inverse(z.element(4)) == z.element(-4));
    CHECK_THROWS_AS(z.op(z.element(std::numeric_limits<std::int32_t>::max()), z.element(1)), Error);

    const auto z2 = OrderedGroup::zk_lex(2);
    const auto w2 = z2.window(0, 1);
    REQUIRE(w2.size() == 4);
    CHECK(z2.element({0, 1}) < z2.element({1, 0}));
    CHECK(z2.element({1, -5}) > z2.element({0, 7}));
    CHECK(z2.element_from_json(z2.element_to_json(z2.element({2, -3}))) == z2.element({2, -3}));
    CHECK(OrderedGroup::from_json(z2.to_json()) == z2);
}

TEST_CASE("tau unit-power twist evaluates the closed formula")
{
    const auto fx = support::fixture("z4_tau_power");
    const auto &g = fx.twist->group();
    for (int x = -4; x <= 4; ++x) {
        for (int y = -4; y <= 4; ++y) {
            CHECK(fx.twist->tau(g.element(x), g.element(y)) == tau_power(x, y));
        }
    }
    CHECK(fx.twist->normalized());
    CHECK(fx.twist->trivial_sigma());
    CHECK_FALSE(fx.twist->trivial_tau());
}

TEST_CASE("z4_tau_power passes every twist condition on [-3,3]")
{
    const auto fx = support::fixture("z4_tau_power");
    const auto &g = fx.twist->group();
    const auto rep = check_twist_conditions(*fx.twist, g.window(-3, 3));
    for (const auto &c : rep.conditions) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    const auto t = tau_oracle(false);
    for (int x = -3; x <= 3; ++x) {
        for (int y = -3; y <= 3; ++y) {
            for (int z = -3; z <= 3; ++z) {
                CHECK(literal_i_holds(t, x, y, z));
                CHECK(standard_holds(t, x, y, z));
            }
        }
    }
}

TEST_CASE("corrupted tau fails both cocycle forms with genuine witnesses")
{
    const auto fx = support::fixture("z4_tau_power");
    auto doc = fx.doc;
    doc["twist"]["tau"]["overrides"] = {{1, 1, 1}};
    const auto bad = fixture_from_json(doc, fx.path.parent_path(), false);
    const auto &g = bad.twist->group();
    const auto rep = check_twist_conditions(*bad.twist, g.window(-3, 3));
    const auto t = tau_oracle(true);
    for (const char *name : {"literal_i", "standard_cocycle"}) {
        CAPTURE(name);
        const auto &c = rep.get(name);
        REQUIRE_FALSE(c.pass);
        REQUIRE(c.witness->size() == 3);
        const int x = (*c.witness)[0].coords[0], y = (*c.witness)[1].coords[0], z = (*c.witness)[2].coords[0];
        if (std::string(name) == "literal_i") {
            CHECK_FALSE(literal_i_holds(t, x, y, z));
        } else {
            CHECK_FALSE(standard_holds(t, x, y, z));
        }
    }
}

TEST_CASE("sigma generated by one automorphism per generator")
{
    const auto fx = support::fixture("gf4_frobenius");
    const auto &g = fx.twist->group();
    const auto o = oracle::gf4();
    for (int x = -5; x <= 5; ++x) {
        for (int r = 0; r < 4; ++r) {
            CHECK(fx.twist->sigma(g.element(x), Elem(r)) == (x % 2 != 0 ? o.mul(r, r) : r));
        }
    }
    const auto sq = support::fixture("gf4_squared_frobenius");
    CHECK(sq.twist->sigma_map(sq.twist->group().element(0)).is_identity());
    const auto rep = check_twist_conditions(*sq.twist, sq.twist->group().window(-1, 1));
    for (const auto &c : rep.conditions) {
        CHECK(c.pass);
    }
}

TEST_CASE("twist JSON round-trip")
{
    for (const char *name : {"z4_tau_power", "gf4_frobenius", "klein_swap"}) {
        const auto fx = support::fixture(name);
        const auto back = TwistSystem::from_json(fx.twist->to_json(), fx.ring, fx.twist->group());
        const auto w = fx.twist->group().window(-2, 2);
        for (const auto &x : w) {
            for (const auto &y : w) {
                CHECK(back->tau(x, y) == fx.twist->tau(x, y));
            }
            for (Elem r = 0; r < fx.ring->size(); ++r) {
                CHECK(back->sigma(x, r) == fx.twist->sigma(x, r));
            }
        }
    }
}

TEST_CASE("non-automorphism sigma is rejected")
{
    const auto fx = support::fixture("gf4_frobenius");
    auto doc = fx.doc;
    doc["twist"]["sigma"]["generator"] = {0, 2, 1, 3};
    try {
        fixture_from_json(doc, fx.path.parent_path(), false);
        FAIL("expected rejection");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::validation_error);
        CHECK(std::string(e.what()).find("NotAutomorphism") != std::string::npos);
    }
}
