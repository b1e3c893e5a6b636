#include <doctest.h>

#include <mn/error.hpp>
#include <mn/props.hpp>
#include <mn/reverify.hpp>

#include "support.hpp"

using namespace mn;

namespace
{

oracle::Set from_mask(std::uint32_t mask, int n)
{
    oracle::Set s;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
            s.insert(i);
        }
    }
    return s;
}

// First Y ⊆ X by size then lexicographic order with (U:Y) = U.
std::optional<oracle::Set> minimal_witness(const oracle::Ring &r, const oracle::Set &u, const oracle::Set &x)
{
    std::vector<oracle::Set> subsets;
    const std::vector<int> xs(x.begin(), x.end());
    for (std::uint32_t m = 0; m < (1u << xs.size()); ++m) {
        oracle::Set y;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (m & (1u << i)) {
                y.insert(xs[i]);
            }
        }
        subsets.push_back(y);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size()
                                    : std::vector<int>(a.begin(), a.end()) < std::vector<int>(b.begin(), b.end());
    });
    for (const auto &y : subsets) {
        if (oracle::quotient(r, u, y) == u) {
            return y;
        }
    }
    return std::nullopt;
}

oracle::Set json_set(const nlohmann::json &j)
{
    return j.get<oracle::Set>();
}

} // namespace

TEST_CASE("zero divisors agree with the oracle")
{
    const std::vector<std::pair<const char *, oracle::Ring>> cases{
        {"z4_example_5_5", oracle::zn(4)},
        {"klein_fusible", oracle::product(oracle::zn(2), oracle::zn(2))},
        {"gf4_frobenius", oracle::gf4()},
        {"t_z4_example_5_6", oracle::trivial_extension(oracle::zn(4))}};
    for (const auto &[name, o] : cases) {
        CAPTURE(name);
        const auto fx = support::fixture(name);
        const auto z = zero_divisor_sets(*fx.ring);
        for (int a = 0; a < o.n; ++a) {
            CHECK(z.left.contains(Elem(a)) == oracle::left_zero_divisor(o, a));
            CHECK(z.left_regular.contains(Elem(a)) != z.left.contains(Elem(a)));
        }
        CHECK(is_left_fusible(*fx.ring).verdict() == oracle::left_fusible(o));
    }
}

TEST_CASE("fusibility verdicts")
{
    const auto z4 = is_left_fusible(*support::fixture("z4_example_5_5").ring);
    CHECK_FALSE(z4.verdict());
    CHECK(z4.witness.at("element") == 2);
    CHECK(is_left_fusible(*support::fixture("klein_fusible").ring).verdict());
    CHECK(is_left_fusible(*support::fixture("gf4_frobenius").ring).verdict());

    const auto klein = support::fixture("klein_fusible");
    const auto o = oracle::product(oracle::zn(2), oracle::zn(2));
    for (Elem a = 1; a < 4; ++a) {
        for (const auto &[z, r] : fusible_decompositions(*klein.ring, a)) {
            CHECK(o.add(z, r) == a);
            CHECK(oracle::left_zero_divisor(o, z));
            CHECK_FALSE(oracle::left_zero_divisor(o, r));
        }
    }
    CHECK_THROWS_AS(fusible_decompositions(*klein.ring, 0), Error);
}

TEST_CASE("SA, IN and nonsingularity verdicts")
{
    const auto z4 = support::fixture("z4_example_5_5");
    CHECK(is_SA(z4.ring).verdict());
    CHECK(is_IN(z4.ring).verdict());
    const auto ns = is_right_nonsingular(z4.ring);
    CHECK_FALSE(ns.verdict());
    CHECK(json_set(ns.stats.at("sing")) == oracle::Set{0, 2});
    const auto klein = is_right_nonsingular(support::fixture("klein_fusible").ring);
    CHECK(klein.verdict());
    CHECK(json_set(klein.stats.at("sing")) == oracle::Set{0});
}

TEST_CASE("SA certificates give genuine K by the oracle")
{
    const auto fx = support::fixture("t_z4_example_5_6");
    const auto o = oracle::trivial_extension(oracle::zn(4));
    const auto rep = is_SA(fx.ring);
    REQUIRE(rep.verdict());
    const auto &ideals = rep.certificate.at("ideals");
    for (const auto &t : rep.certificate.at("k")) {
        const auto i = json_set(ideals.at(t[0].get<std::size_t>()));
        const auto j = json_set(ideals.at(t[1].get<std::size_t>()));
        const auto k = json_set(ideals.at(t[2].get<std::size_t>()));
        CHECK(oracle::sum(o, oracle::right_annihilator(o, i), oracle::right_annihilator(o, j)) ==
              oracle::right_annihilator(o, k));
    }
}

TEST_CASE("sigma-compatibility of the swap twist")
{
    const auto fx = support::fixture("klein_swap");
    const auto rep = is_sigma_compatible_ring(*fx.ring, fx.twist->generators());
    REQUIRE_FALSE(rep.verdict());
    const auto &r = *fx.ring;
    const auto swap = [](Elem e) { return Elem((e % 2) * 2 + e / 2); };
    const Elem a = rep.witness.at("a"), b = rep.witness.at("b");
    CHECK((r.mul(a, b) == 0) != (r.mul(a, swap(b)) == 0));
    const Elem e10 = pair_id(1, 0, 2);
    CHECK((r.mul(e10, e10) == 0) != (r.mul(e10, swap(e10)) == 0));
    CHECK(is_sigma_compatible_ring(*support::fixture("gf4_frobenius").ring,
                                   support::fixture("gf4_frobenius").twist->generators())
              .verdict());
}

TEST_CASE("G-Armendariz")
{
    const auto swap = support::fixture("klein_swap");
    const auto w = swap.window_elements({0, 1});
    const auto rep = is_G_armendariz(swap.twist, 2, w);
    REQUIRE_FALSE(rep.verdict());
    const auto f = Series::from_json(swap.twist, rep.witness.at("f"));
    const auto g = Series::from_json(swap.twist, rep.witness.at("g"));
    CHECK((f * g).is_zero());
    bool nonzero = false;
    for (const auto &[x, a] : f.terms()) {
        for (const auto &[y, b] : g.terms()) {
            nonzero = nonzero || swap.ring->mul(a, b) != 0;
        }
    }
    CHECK(nonzero);

    const auto e = single_term(swap.twist, swap.twist->group().element(1), pair_id(1, 0, 2));
    CHECK((e * e).is_zero());
    CHECK(swap.ring->mul(pair_id(1, 0, 2), pair_id(1, 0, 2)) != 0);

    CHECK(is_G_armendariz(support::fixture("z2_plain").twist, 2, w).verdict());
    CHECK(is_G_armendariz(support::fixture("klein_fusible").twist, 2, w).verdict());
    try {
        is_G_armendariz(swap.twist, 3, swap.window_elements({0, 2}), 1000);
        FAIL("expected BoundsTooLarge");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::bounds_too_large);
    }
}

TEST_CASE("bounded series enumeration")
{
    const auto fx = support::fixture("z4_example_5_5");
    const auto all = enumerate_bounded_series(fx.twist, fx.window_elements({0, 2}), 3, 1000);
    CHECK(all.size() == 64);
    CHECK(all.front().is_zero());
    const auto two = enumerate_bounded_series(fx.twist, fx.window_elements({0, 2}), 1, 1000);
    CHECK(two.size() == 1 + 3 * 3);
}

TEST_CASE("Z4 zip witnesses over all 16 subsets")
{
    const auto fx = support::fixture("z4_example_5_5");
    const auto o = oracle::zn(4);
    const auto &u = fx.ideals.at("U");
    const oracle::Set us{0, 2};
    std::size_t held = 0;
    for (std::uint32_t m = 0; m < 16; ++m) {
        const auto x = from_mask(m, 4);
        const auto rep = sigma_u_zip_witness(u, support::from_set(x, 4));
        CAPTURE(m);
        if (oracle::subset(x, us)) {
            CHECK(rep.status == Status::not_applicable);
        } else if (oracle::quotient(o, us, x) != us) {
            CHECK(rep.status == Status::hypothesis_fails);
        } else {
            REQUIRE(rep.status == Status::holds);
            CHECK(json_set(rep.certificate.at("y")) == *minimal_witness(o, us, x));
            CHECK(reverify(rep, *fx.twist).ok);
            ++held;
        }
    }
    CHECK(held > 0);
    CHECK(support::to_set(quotient_set(*fx.ring, u.members, ElementSet(4, {3}))) == oracle::Set{0, 2});
    CHECK(is_sigma_u_zip(u).verdict());
}

TEST_CASE("trivial extension: zip holds although the blanket quotient claim fails")
{
    const auto fx = support::fixture("t_z4_example_5_6");
    const auto o = oracle::trivial_extension(oracle::zn(4));
    const auto &u = fx.ideals.at("U");
    CHECK(is_sigma_u_zip(u).verdict());
    const auto q = quotient_set(*fx.ring, u.members, ElementSet(16, {8}));
    CHECK(support::to_set(q) == oracle::Set{0, 1, 2, 3, 8, 9, 10, 11});
    CHECK(oracle::quotient(o, {0, 1, 2, 3}, {8}) == support::to_set(q));
    CHECK(sigma_u_zip_witness(u, ElementSet(16, {8})).status == Status::hypothesis_fails);
}

TEST_CASE("zip profiles agree with the oracle")
{
    const std::vector<std::pair<const char *, oracle::Ring>> cases{
        {"z4_example_5_5", oracle::zn(4)},
        {"klein_fusible", oracle::product(oracle::zn(2), oracle::zn(2))},
        {"gf4_frobenius", oracle::gf4()}};
    for (const auto &[name, o] : cases) {
        CAPTURE(name);
        const auto fx = support::fixture(name);
        for (const auto &ideal : enumerate_ideals(fx.ring, IdealKind::twosided)) {
            const auto profile = sigma_u_zip_profile(ideal);
            const auto us = support::to_set(ideal.members);
            for (std::uint32_t m = 0; m < (1u << o.n); ++m) {
                const auto x = from_mask(m, o.n);
                std::optional<oracle::Set> expected;
                if (!oracle::subset(x, us) && oracle::quotient(o, us, x) == us) {
                    expected = minimal_witness(o, us, x);
                }
                const auto got = profile.witness[m];
                REQUIRE(got.has_value() == expected.has_value());
                if (got) {
                    CHECK(from_mask(*got, o.n) == *expected);
                }
            }
        }
    }
}

TEST_CASE("specializations to right zip and weak zip")
{
    for (const char *name : {"z4_example_5_5", "klein_fusible", "gf4_frobenius", "t_z4_example_5_6", "z2_plain",
                             "klein_swap", "z4_tau_power", "gf4_squared_frobenius"}) {
        CAPTURE(name);
        const auto fx = support::fixture(name);
        const IdealSet zero{fx.ring, ElementSet(fx.ring->size(), {0}), IdealKind::twosided};
        CHECK(sigma_u_zip_profile(zero) == right_zip_profile(fx.ring));
        const auto nil = nil_radical(*fx.ring);
        if (nil.is_ni) {
            CHECK(sigma_u_zip_profile(IdealSet{fx.ring, nil.members, IdealKind::twosided}) == weak_zip_profile(fx.ring));
        }
    }
}

TEST_CASE("set JSON helpers")
{
    const ElementSet s(16, {0, 3, 15});
    CHECK(set_json(s) == nlohmann::json{0, 3, 15});
    CHECK(set_from_json(set_json(s), 16) == s);
    CHECK(mask_to_set(set_to_mask(s), 16) == s);
}
