#include <doctest.h>

#include <mn/error.hpp>
#include <mn/ideal.hpp>

#include "support.hpp"

using namespace mn;

namespace
{

struct Case {
    const char *fixture;
    oracle::Ring ring;
};

std::vector<Case> cases()
{
    return {{"z4_example_5_5", oracle::zn(4)},
            {"klein_fusible", oracle::product(oracle::zn(2), oracle::zn(2))},
            {"gf4_frobenius", oracle::gf4()},
            {"t_z4_example_5_6", oracle::trivial_extension(oracle::zn(4))},
            {"gf4_squared_frobenius", oracle::product(oracle::gf4(), oracle::gf4())}};
}

std::vector<oracle::Set> lib_ideals(const RingPtr &ring, IdealKind kind)
{
    std::vector<oracle::Set> out;
    for (const auto &i : enumerate_ideals(ring, kind)) {
        out.push_back(support::to_set(i.members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("ideal enumeration agrees with brute force over all subsets")
{
    for (const auto &c : cases()) {
        CAPTURE(c.fixture);
        const auto fx = support::fixture(c.fixture);
        for (auto [kind, ch] : {std::pair{IdealKind::right, 'r'}, {IdealKind::left, 'l'}, {IdealKind::twosided, 't'}}) {
            auto expected = oracle::ideals(c.ring, ch);
            std::sort(expected.begin(), expected.end());
            CHECK(lib_ideals(fx.ring, kind) == expected);
        }
    }
}

TEST_CASE("enumeration order is by size then members")
{
    const auto fx = support::fixture("t_z4_example_5_6");
    const auto all = enumerate_ideals(fx.ring, IdealKind::right);
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(size_lex_less(all[i - 1].members, all[i].members));
    }
}

TEST_CASE("quotients and annihilators agree with the oracle on every subset")
{
    for (const auto &c : cases()) {
        if (c.ring.n > 4) {
            continue;
        }
        CAPTURE(c.fixture);
        const auto fx = support::fixture(c.fixture);
        const auto n = fx.ring->size();
        for (const auto &u : enumerate_ideals(fx.ring, IdealKind::right)) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                oracle::Set v;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask & (1u << i)) {
                        v.insert(int(i));
                    }
                }
                const auto vs = support::from_set(v, n);
                CHECK(support::to_set(quotient_ideal(u, vs).members) ==
                      oracle::quotient(c.ring, support::to_set(u.members), v));
                CHECK(support::to_set(annihilator(fx.ring, vs, Side::right).members) ==
                      oracle::right_annihilator(c.ring, v));
                CHECK(support::to_set(annihilator(fx.ring, vs, Side::left).members) ==
                      oracle::left_annihilator(c.ring, v));
                CHECK(support::to_set(weak_annihilator(*fx.ring, vs)) == oracle::weak_annihilator(c.ring, v));
            }
        }
    }
}

TEST_CASE("quotient of right ideals is two-sided")
{
    const auto fx = support::fixture("t_z4_example_5_6");
    const auto right = enumerate_ideals(fx.ring, IdealKind::right);
    for (const auto &u : right) {
        for (const auto &v : right) {
            const auto q = quotient_ideal(u, v);
            CHECK(q.kind == IdealKind::twosided);
            CHECK(oracle::is_ideal(oracle::trivial_extension(oracle::zn(4)), support::to_set(q.members), 't'));
        }
    }
}

TEST_CASE("closure, classification and set sums")
{
    const auto fx = support::fixture("z4_example_5_5");
    const auto two = ideal_closure(fx.ring, ElementSet(4, {2}), IdealKind::twosided);
    CHECK(support::to_set(two.members) == oracle::Set{0, 2});
    CHECK(classify(*fx.ring, ElementSet(4, {0, 1})) == IdealKind::subset);
    CHECK(classify(*fx.ring, ElementSet(4, {0, 2})) == IdealKind::twosided);
    CHECK(satisfies(IdealKind::twosided, IdealKind::right));
    CHECK_FALSE(satisfies(IdealKind::left, IdealKind::right));
    CHECK(support::to_set(set_sum(*fx.ring, ElementSet(4, {0, 2}), ElementSet(4, {0, 1}))) == oracle::Set{0, 1, 2, 3});
    CHECK(ideal_kind_from_string("right") == IdealKind::right);
    CHECK_THROWS_AS(ideal_kind_from_string("sideways"), Error);
}

TEST_CASE("semiprime ideals")
{
    const auto z4 = support::fixture("z4_example_5_5");
    CHECK(is_semiprime_ideal(z4.ideals.at("U")).semiprime);
    const IdealSet zero{z4.ring, ElementSet(4, {0}), IdealKind::twosided};
    const auto zr = is_semiprime_ideal(zero);
    REQUIRE_FALSE(zr.semiprime);
    CHECK(zr.witness->element == 2);
    CHECK(zr.witness->exponent == 2);

    const auto t = support::fixture("t_z4_example_5_6");
    const auto tr = is_semiprime_ideal(t.ideals.at("U"));
    REQUIRE_FALSE(tr.semiprime);
    CHECK(tr.witness->element == pair_id(2, 0, 4));
    const auto o = oracle::trivial_extension(oracle::zn(4));
    CHECK(o.mul(8, 8) < 4);
}

TEST_CASE("nil radical and NI")
{
    for (const auto &c : cases()) {
        CAPTURE(c.fixture);
        const auto fx = support::fixture(c.fixture);
        const auto nil = nil_radical(*fx.ring);
        CHECK(support::to_set(nil.members) == oracle::nil(c.ring));
        CHECK(nil.is_ni == oracle::is_ideal(c.ring, oracle::nil(c.ring), 't'));
    }
    CHECK(nilpotency_index(*support::fixture("z4_example_5_5").ring, 2) == 2u);
    CHECK_FALSE(nilpotency_index(*support::fixture("z4_example_5_5").ring, 1).has_value());
}

TEST_CASE("sigma-compatibility of ideals")
{
    const auto gf = support::fixture("gf4_frobenius");
    const IdealSet zero{gf.ring, ElementSet(4, {0}), IdealKind::twosided};
    CHECK(is_sigma_compatible_ideal(zero, gf.twist->generators()).compatible);

    const auto swap = support::fixture("klein_swap");
    const IdealSet kz{swap.ring, ElementSet(4, {0}), IdealKind::twosided};
    const auto r = is_sigma_compatible_ideal(kz, swap.twist->generators());
    REQUIRE_FALSE(r.compatible);
    const auto &w = *r.witness;
    const auto &s = swap.twist->generators()[w.family_index];
    const Elem sb = w.inverse ? inverse(s)(w.b) : s(w.b);
    CHECK((swap.ring->mul(w.a, w.b) == 0) != (swap.ring->mul(w.a, sb) == 0));
}
