#include <doctest.h>

#include <random>

#include <mn/error.hpp>
#include <mn/series.hpp>

#include "support.hpp"

using namespace mn;

namespace
{

struct Case {
    const char *fixture;
    oracle::Twist twist;
};

std::vector<Case> cases()
{
    const auto gf = oracle::gf4();
    const auto klein = oracle::product(oracle::zn(2), oracle::zn(2));
    return {
        {"z4_example_5_5", {oracle::zn(4), [](int, int r) { return r; }, [](int, int) { return 1; }}},
        {"z4_tau_power",
         {oracle::zn(4), [](int, int r) { return r; }, [](int x, int y) { return (x * y) % 2 != 0 ? 3 : 1; }}},
        {"gf4_frobenius", {gf, [gf](int x, int r) { return x % 2 != 0 ? gf.mul(r, r) : r; }, [](int, int) { return 1; }}},
        {"klein_swap",
         {klein, [](int x, int r) { return x % 2 != 0 ? (r % 2) * 2 + r / 2 : r; }, [](int, int) { return 3; }}},
        {"t_z4_example_5_6",
         {oracle::trivial_extension(oracle::zn(4)), [](int, int r) { return r; }, [](int, int) { return 4; }}},
    };
}

} // namespace

TEST_CASE("series multiplication agrees with the naive twisted convolution")
{
    std::mt19937_64 rng(11);
    for (const auto &c : cases()) {
        CAPTURE(c.fixture);
        const auto fx = support::fixture(c.fixture);
        const auto w = fx.twist->group().window(-3, 3);
        for (int i = 0; i < 300; ++i) {
            const auto f = random_series(fx.twist, w, 0, 4, rng);
            const auto g = random_series(fx.twist, w, 0, 4, rng);
            CHECK(support::to_series(f * g) == oracle::mul(c.twist, support::to_series(f), support::to_series(g)));
            CHECK(support::to_series(f + g) == oracle::add(c.twist.ring, support::to_series(f), support::to_series(g)));
        }
    }
}

TEST_CASE("seeded ring laws on random series")
{
    std::mt19937_64 rng(12);
    for (const auto &c : cases()) {
        CAPTURE(c.fixture);
        const auto fx = support::fixture(c.fixture);
        const auto w = fx.twist->group().window(-2, 2);
        const auto one = embed_scalar(fx.twist, fx.ring->one());
        for (int i = 0; i < 200; ++i) {
            const auto f = random_series(fx.twist, w, 0, 3, rng);
            const auto g = random_series(fx.twist, w, 0, 3, rng);
            const auto h = random_series(fx.twist, w, 0, 3, rng);
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f + g) * h == f * h + g * h);
            CHECK(f + g == g + f);
            CHECK((f - f).is_zero());
            CHECK(one * f == f);
            CHECK(f * one == f);
        }
    }
}

TEST_CASE("worked products")
{
    const auto fx = support::fixture("z4_tau_power");
    const auto &g = fx.twist->group();
    const auto x1 = single_term(fx.twist, g.element(1), 1);
    CHECK(x1 * x1 == single_term(fx.twist, g.element(2), 3));

    const auto swap = support::fixture("klein_swap");
    const auto &sg = swap.twist->group();
    const auto e = single_term(swap.twist, sg.element(1), pair_id(1, 0, 2));
    CHECK((e * e).is_zero());
}

TEST_CASE("series construction")
{
    const auto fx = support::fixture("z4_example_5_5");
    const auto &g = fx.twist->group();
    const auto f = Series::make(fx.twist, {{g.element(2), 1}, {g.element(-1), 0}, {g.element(0), 3}});
    CHECK(f.support_size() == 2);
    CHECK(f.terms().front().first == g.element(0));
    CHECK(f.coeff(g.element(-1)) == 0);
    CHECK(support::to_set(f.content()) == oracle::Set{1, 3});
    CHECK(f.coefficients_in(ElementSet(4, {1, 3})));
    CHECK(Series::from_json(fx.twist, f.to_json()) == f);
    try {
        Series::make(fx.twist, {{g.element(1), 1}, {g.element(1), 2}});
        FAIL("expected DuplicateKey");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::duplicate_key);
    }
    const auto s = support_stats(f);
    CHECK(s.pi == g.element(0));
    CHECK(s.leading == 3);
    CHECK_THROWS_AS(support_stats(Series(fx.twist)), Error);
    const auto other = support::fixture("z4_tau_power");
    CHECK_THROWS_AS(f * single_term(other.twist, g.element(0), 1), Error);
}

TEST_CASE("X_w pairs")
{
    const auto fx = support::fixture("z4_example_5_5");
    const auto &g = fx.twist->group();
    const auto f = Series::make(fx.twist, {{g.element(0), 1}, {g.element(1), 1}, {g.element(2), 1}});
    const auto pairs = x_w_pairs(f, f, g.element(2));
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair{g.element(0), g.element(2)});
    CHECK(pairs[2] == std::pair{g.element(2), g.element(0)});
}

TEST_CASE("associativity checkers")
{
    for (const char *name : {"z4_tau_power", "gf4_frobenius", "klein_swap", "gf4_squared_frobenius"}) {
        const auto fx = support::fixture(name);
        const auto w = fx.twist->group().rank() == 1 ? fx.twist->group().window(-3, 3) : fx.twist->group().window(-1, 1);
        const auto rep = check_associativity_sampled(fx.twist, w, 3, 1000, 0);
        CHECK(rep.pass);
        CHECK(rep.checked == 1000);
    }
    const auto fx = support::fixture("z4_tau_power");
    auto doc = fx.doc;
    doc["twist"]["tau"]["overrides"] = {{1, 1, 1}};
    const auto bad = fixture_from_json(doc, fx.path.parent_path(), false);
    const auto rep = check_associativity_exhaustive(bad.twist, bad.twist->group().window(-1, 1));
    REQUIRE_FALSE(rep.pass);
    const auto &[f, g, h] = *rep.witness;
    CHECK((f * g) * h != f * (g * h));
}

TEST_CASE("random series are deterministic in the seed")
{
    const auto fx = support::fixture("gf4_frobenius");
    const auto w = fx.twist->group().window(0, 2);
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_series(fx.twist, w, 1, 3, a);
        CHECK(f == random_series(fx.twist, w, 1, 3, b));
        CHECK(f.support_size() >= 1);
        CHECK(f.support_size() <= 3);
    }
}
