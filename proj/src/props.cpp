#include <mn/props.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <mn/error.hpp>
#include <mn/kernels.hpp>

namespace mn
{

nlohmann::json set_json(const ElementSet &s)
{
    return s.members();
}

ElementSet set_from_json(const nlohmann::json &j, std::size_t universe)
{
    ElementSet s(universe);
    for (const auto &e : j) {
        const auto v = e.get<std::int64_t>();
        if (v < 0 || static_cast<std::size_t>(v) >= universe) {
            fail(ErrorKind::parse_error, "element id " + std::to_string(v) + " out of range");
        }
        s.insert(static_cast<Elem>(v));
    }
    return s;
}

ZeroDivisorSets zero_divisor_sets(const FiniteRing &ring)
{
    const auto n = ring.size();
    ZeroDivisorSets z{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
    for (std::size_t a = 0; a < n; ++a) {
        // position 0 always contributes one zero
        if (kernels::count_eq(ring.mul_row(Elem(a)), 0) > 1) {
            z.left.insert(Elem(a));
        } else {
            z.left_regular.insert(Elem(a));
        }
        if (kernels::count_eq(ring.mul_col(Elem(a)), 0) > 1) {
            z.right.insert(Elem(a));
        } else {
            z.right_regular.insert(Elem(a));
        }
    }
    return z;
}

std::vector<std::pair<Elem, Elem>> fusible_decompositions(const FiniteRing &ring, Elem a)
{
    if (a == 0) {
        fail(ErrorKind::zero_element, "fusible decompositions are defined for nonzero elements");
    }
    const auto z = zero_divisor_sets(ring);
    std::vector<std::pair<Elem, Elem>> out;
    z.left.for_each([&](Elem d) {
        const Elem r = ring.sub(a, d);
        if (z.left_regular.contains(r)) {
            out.emplace_back(d, r);
        }
    });
    return out;
}

PropertyReport is_left_fusible(const FiniteRing &ring)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "left_fusible";
    const auto z = zero_divisor_sets(ring);
    auto decomps = nlohmann::json::array();
    for (std::size_t a = 1; a < ring.size(); ++a) {
        std::optional<std::pair<Elem, Elem>> first;
        z.left.for_each([&](Elem d) {
            const Elem r = ring.sub(Elem(a), d);
            if (!first && z.left_regular.contains(r)) {
                first = {d, r};
            }
        });
        if (!first) {
            rep.status = Status::fails;
            rep.witness = {{"element", a}};
            break;
        }
        decomps.push_back({a, first->first, first->second});
    }
    if (rep.verdict()) {
        rep.certificate = {{"decompositions", decomps}};
    }
    rep.stats = {{"ring_size", ring.size()},
                 {"left_zero_divisors", set_json(z.left)},
                 {"left_regular", set_json(z.left_regular)}};
    rep.notes.push_back("0 counts as a left zero-divisor; only nonzero elements must decompose");
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

PropertyReport is_sigma_compatible_ring(const FiniteRing &ring, std::span<const RingAutomorphism> family)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "sigma_compatible";
    const ElementSet zero(ring.size(), {Elem{0}});
    const auto res = sigma_compatibility(ring, zero, family);
    if (!res.compatible) {
        const auto &w = *res.witness;
        rep.status = Status::fails;
        rep.witness = {{"a", w.a}, {"b", w.b}, {"generator", w.family_index}, {"inverse", w.inverse}};
    }
    rep.stats = {{"ring_size", ring.size()}, {"family_size", family.size()}};
    if (res.lemma_divergence) {
        rep.notes.push_back("sigma(a)b = 0 and ab = 0 disagree at a=" + std::to_string(res.lemma_divergence->a) +
                            " b=" + std::to_string(res.lemma_divergence->b));
    }
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

namespace
{

nlohmann::json ideal_list_json(const std::vector<IdealSet> &ideals)
{
    auto out = nlohmann::json::array();
    for (const auto &i : ideals) {
        out.push_back(set_json(i.members));
    }
    return out;
}

} // namespace

PropertyReport is_right_nonsingular(const RingPtr &ring, std::size_t cap)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "right_nonsingular";
    const auto n = ring->size();
    const auto ideals = enumerate_ideals(ring, IdealKind::right, cap);
    const ElementSet zero(n, {Elem{0}});

    auto essential = [&](const ElementSet &i) {
        for (const auto &l : ideals) {
            if (l.members != zero && (i & l.members) == zero) {
                return false;
            }
        }
        return true;
    };

    std::vector<IdealSet> ess;
    for (const auto &i : ideals) {
        if (essential(i.members)) {
            ess.push_back(i);
        }
    }
    ElementSet sing(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto r = annihilator(ring, ElementSet(n, {Elem(x)}), Side::right);
        if (essential(r.members)) {
            sing.insert(Elem(x));
        }
    }
    if (sing != zero) {
        Elem x = 0;
        sing.for_each([&](Elem e) {
            if (x == 0 && e != 0) {
                x = e;
            }
        });
        rep.status = Status::fails;
        rep.witness = {{"element", x},
                       {"annihilator", set_json(annihilator(ring, ElementSet(n, {x}), Side::right).members)}};
    } else {
        rep.certificate = {{"right_ideals", ideal_list_json(ideals)}};
    }
    rep.stats = {{"right_ideals", ideals.size()}, {"essential", ideal_list_json(ess)}, {"sing", set_json(sing)}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

PropertyReport is_IN(const RingPtr &ring, std::size_t cap)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "IN";
    const auto ideals = enumerate_ideals(ring, IdealKind::right, cap);
    std::vector<ElementSet> ell;
    for (const auto &i : ideals) {
        ell.push_back(annihilator(ring, i.members, Side::left).members);
    }
    std::size_t checked = 0;
    for (std::size_t i = 0; i < ideals.size() && rep.verdict(); ++i) {
        for (std::size_t j = i; j < ideals.size(); ++j) {
            ++checked;
            const auto lhs = annihilator(ring, ideals[i].members & ideals[j].members, Side::left).members;
            const auto rhs = set_sum(*ring, ell[i], ell[j]);
            if (lhs != rhs) {
                rep.status = Status::fails;
                rep.witness = {{"I", set_json(ideals[i].members)},
                               {"J", set_json(ideals[j].members)},
                               {"l_of_intersection", set_json(lhs)},
                               {"sum_of_l", set_json(rhs)}};
                break;
            }
        }
    }
    if (rep.verdict()) {
        rep.certificate = {{"right_ideals", ideal_list_json(ideals)}};
    }
    rep.stats = {{"right_ideals", ideals.size()}, {"pairs_checked", checked}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

PropertyReport is_SA(const RingPtr &ring, std::size_t cap)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "SA";
    const auto ideals = enumerate_ideals(ring, IdealKind::twosided, cap);
    std::vector<ElementSet> r;
    for (const auto &i : ideals) {
        r.push_back(annihilator(ring, i.members, Side::right).members);
    }
    auto triples = nlohmann::json::array();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < ideals.size() && rep.verdict(); ++i) {
        for (std::size_t j = i; j < ideals.size(); ++j) {
            ++checked;
            const auto sum = set_sum(*ring, r[i], r[j]);
            const auto k = std::find(r.begin(), r.end(), sum);
            if (k == r.end()) {
                rep.status = Status::fails;
                rep.witness = {{"I", set_json(ideals[i].members)},
                               {"J", set_json(ideals[j].members)},
                               {"sum", set_json(sum)},
                               {"ideals", ideal_list_json(ideals)}};
                break;
            }
            triples.push_back({i, j, k - r.begin()});
        }
    }
    if (rep.verdict()) {
        rep.certificate = {{"ideals", ideal_list_json(ideals)}, {"k", triples}};
    }
    rep.stats = {{"ideals", ideals.size()}, {"pairs_checked", checked}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

namespace
{

double bounded_series_count(std::size_t ring_size, std::size_t window, std::size_t max_support)
{
    double total = 0.0;
    double binom = 1.0;
    for (std::size_t s = 0; s <= std::min(max_support, window); ++s) {
        total += binom * std::pow(double(ring_size - 1), double(s));
        binom = binom * double(window - s) / double(s + 1);
    }
    return total;
}

} // namespace

std::vector<Series> enumerate_bounded_series(const TwistPtr &twist, const std::vector<GroupElement> &window,
                                             std::size_t max_support, std::uint64_t cap)
{
    const auto n = twist->ring()->size();
    if (bounded_series_count(n, window.size(), max_support) > double(cap)) {
        fail(ErrorKind::bounds_too_large, "series enumeration over " + std::to_string(window.size()) +
                                              " exponents with support <= " + std::to_string(max_support) +
                                              " exceeds cap " + std::to_string(cap));
    }
    std::vector<Series> out;
    out.emplace_back(twist);
    const auto w = window.size();
    for (std::size_t s = 1; s <= std::min(max_support, w); ++s) {
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<Elem> coef(s, 1);
            while (true) {
                std::vector<Series::Term> terms;
                for (std::size_t t = 0; t < s; ++t) {
                    terms.emplace_back(window[idx[t]], coef[t]);
                }
                out.push_back(Series::make(twist, std::move(terms)));
                std::size_t t = s;
                while (t > 0 && coef[t - 1] + 1u == n) {
                    coef[--t] = 1;
                }
                if (t == 0) {
                    break;
                }
                ++coef[t - 1];
            }
            std::size_t t = s;
            while (t > 0 && idx[t - 1] == w - s + (t - 1)) {
                --t;
            }
            if (t == 0) {
                break;
            }
            ++idx[t - 1];
            for (std::size_t u = t; u < s; ++u) {
                idx[u] = idx[u - 1] + 1;
            }
        }
    }
    return out;
}

PropertyReport is_G_armendariz(const TwistPtr &twist, std::size_t max_support, const std::vector<GroupElement> &window,
                               std::uint64_t pair_cap)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "G_armendariz";
    const auto &ring = *twist->ring();
    const auto &group = twist->group();
    const double count = bounded_series_count(ring.size(), window.size(), max_support);
    if (count * count > double(pair_cap)) {
        fail(ErrorKind::bounds_too_large, "G-Armendariz scan needs " + std::to_string(count * count) +
                                              " pairs, cap is " + std::to_string(pair_cap));
    }
    const auto all = enumerate_bounded_series(twist, window, max_support, pair_cap);
    std::uint64_t pairs = 0, zero_products = 0;
    for (const auto &f : all) {
        if (f.is_zero() || !rep.verdict()) {
            continue;
        }
        for (const auto &g : all) {
            if (g.is_zero()) {
                continue;
            }
            ++pairs;
            if (!series_mul(f, g).is_zero()) {
                continue;
            }
            ++zero_products;
            for (const auto &[x, a] : f.terms()) {
                for (const auto &[y, b] : g.terms()) {
                    if (ring.mul(a, b) != 0 && rep.verdict()) {
                        rep.status = Status::fails;
                        rep.witness = {{"f", f.to_json()},
                                       {"g", g.to_json()},
                                       {"x", group.element_to_json(x)},
                                       {"y", group.element_to_json(y)},
                                       {"product", ring.mul(a, b)}};
                    }
                }
            }
            if (!rep.verdict()) {
                break;
            }
        }
    }
    auto win = nlohmann::json::array();
    for (const auto &x : window) {
        win.push_back(group.element_to_json(x));
    }
    rep.bounds = {{"window", win}, {"max_support", max_support}};
    rep.stats = {{"series", all.size()}, {"pairs", pairs}, {"zero_products", zero_products}};
    rep.notes.push_back("verdict certifies the bounded fragment only");
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

ElementSet quotient_set(const FiniteRing &ring, const ElementSet &u, const ElementSet &y)
{
    auto q = ElementSet::full(ring.size());
    y.for_each([&](Elem v) { q &= kernels::member_set(ring.mul_row(v), u); });
    return q;
}

PropertyReport sigma_u_zip_witness(const IdealSet &u, const ElementSet &x, std::span<const RingAutomorphism> family)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "sigma_u_zip_witness";
    for (const auto &s : family) {
        if (s.ring() != u.ring) {
            fail(ErrorKind::ring_mismatch, "sigma family acts on a different ring");
        }
    }
    if (x.universe() != u.ring->size()) {
        fail(ErrorKind::ring_mismatch, "subset X is over a ring of a different size");
    }
    const auto &ring = *u.ring;
    if (!family.empty()) {
        rep.stats["u_sigma_compatible"] = sigma_compatibility(ring, u.members, family).compatible;
    }
    if (x.subset_of(u.members)) {
        rep.status = Status::not_applicable;
        rep.witness = {{"u", set_json(u.members)}, {"x", set_json(x)}};
        rep.notes.push_back("X is contained in U");
        rep.elapsed_ms = sw.elapsed_ms();
        return rep;
    }
    const auto q = quotient_set(ring, u.members, x);
    if (q != u.members) {
        rep.status = Status::hypothesis_fails;
        rep.witness = {{"u", set_json(u.members)}, {"x", set_json(x)}, {"quotient", set_json(q)}};
        rep.elapsed_ms = sw.elapsed_ms();
        return rep;
    }
    const auto xs = x.members();
    std::vector<ElementSet> per;
    for (auto v : xs) {
        per.push_back(kernels::member_set(ring.mul_row(v), u.members));
    }
    std::uint64_t tested = 0;
    std::optional<std::vector<Elem>> found;
    for (std::size_t k = 1; k <= xs.size() && !found; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ++tested;
            auto acc = per[idx[0]];
            for (std::size_t t = 1; t < k; ++t) {
                acc &= per[idx[t]];
            }
            if (acc == u.members) {
                found.emplace();
                for (auto i : idx) {
                    found->push_back(xs[i]);
                }
                break;
            }
            std::size_t t = k;
            while (t > 0 && idx[t - 1] == xs.size() - k + (t - 1)) {
                --t;
            }
            if (t == 0) {
                break;
            }
            ++idx[t - 1];
            for (std::size_t s = t; s < k; ++s) {
                idx[s] = idx[s - 1] + 1;
            }
        }
    }
    rep.certificate = {{"u", set_json(u.members)}, {"x", set_json(x)}, {"quotient", set_json(q)}, {"y", *found}};
    rep.stats["subsets_tested"] = tested;
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

std::size_t ZipProfile::applicable() const noexcept
{
    return static_cast<std::size_t>(std::count_if(witness.begin(), witness.end(), [](auto &w) { return w.has_value(); }));
}

ElementSet mask_to_set(std::uint32_t mask, std::size_t universe)
{
    ElementSet s(universe);
    for (std::size_t e = 0; e < universe; ++e) {
        if ((mask >> e) & 1u) {
            s.insert(Elem(e));
        }
    }
    return s;
}

std::uint32_t set_to_mask(const ElementSet &s)
{
    std::uint32_t m = 0;
    s.for_each([&](Elem e) { m |= std::uint32_t{1} << e; });
    return m;
}

namespace
{

void check_profile_size(const FiniteRing &ring)
{
    if (ring.size() > zip_profile_cap) {
        fail(ErrorKind::size_cap_exceeded, "zip profile needs |R| <= " + std::to_string(zip_profile_cap) + ", got " +
                                               std::to_string(ring.size()));
    }
}

// Minimal submask of x (by popcount, then lexicographic member list) satisfying good.
template <typename Good>
std::optional<std::uint32_t> minimal_submask(std::uint32_t x, Good &&good)
{
    std::vector<std::uint32_t> bits;
    for (auto m = x; m != 0; m &= m - 1) {
        bits.push_back(m & (~m + 1));
    }
    const auto n = bits.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::uint32_t y = 0;
            for (auto i : idx) {
                y |= bits[i];
            }
            if (good(y)) {
                return y;
            }
            std::size_t t = k;
            while (t > 0 && idx[t - 1] == n - k + (t - 1)) {
                --t;
            }
            if (t == 0) {
                break;
            }
            ++idx[t - 1];
            for (std::size_t s = t; s < k; ++s) {
                idx[s] = idx[s - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

} // namespace

ZipProfile sigma_u_zip_profile(const IdealSet &u)
{
    const auto &ring = *u.ring;
    check_profile_size(ring);
    const auto n = ring.size();
    const std::uint32_t total = std::uint32_t{1} << n;
    const auto umask = set_to_mask(u.members);
    std::vector<std::uint32_t> per(n);
    for (std::size_t v = 0; v < n; ++v) {
        per[v] = set_to_mask(kernels::member_set(ring.mul_row(Elem(v)), u.members));
    }
    // quot[X] = (U:X), built from X without its lowest element
    std::vector<std::uint32_t> quot(total);
    quot[0] = total - 1;
    for (std::uint32_t x = 1; x < total; ++x) {
        quot[x] = quot[x & (x - 1)] & per[std::countr_zero(x)];
    }
    ZipProfile p{n, std::vector<std::optional<std::uint32_t>>(total)};
    for (std::uint32_t x = 1; x < total; ++x) {
        if ((x & ~umask) != 0 && quot[x] == umask) {
            p.witness[x] = minimal_submask(x, [&](std::uint32_t y) { return quot[y] == umask; });
        }
    }
    return p;
}

ZipProfile right_zip_profile(const RingPtr &ring)
{
    check_profile_size(*ring);
    const auto n = ring->size();
    const std::uint32_t total = std::uint32_t{1} << n;
    const ElementSet zero(n, {Elem{0}});
    std::vector<char> ann_zero(total);
    for (std::uint32_t x = 0; x < total; ++x) {
        ann_zero[x] = annihilator(ring, mask_to_set(x, n), Side::right).members == zero;
    }
    ZipProfile p{n, std::vector<std::optional<std::uint32_t>>(total)};
    for (std::uint32_t x = 0; x < total; ++x) {
        if (ann_zero[x]) {
            p.witness[x] = minimal_submask(x, [&](std::uint32_t y) { return ann_zero[y] != 0; });
        }
    }
    return p;
}

ZipProfile weak_zip_profile(const RingPtr &ring)
{
    check_profile_size(*ring);
    const auto n = ring->size();
    const std::uint32_t total = std::uint32_t{1} << n;
    const auto nil = nil_radical(*ring).members;
    std::vector<char> small(total);
    for (std::uint32_t x = 0; x < total; ++x) {
        small[x] = weak_annihilator(*ring, mask_to_set(x, n)).subset_of(nil);
    }
    ZipProfile p{n, std::vector<std::optional<std::uint32_t>>(total)};
    for (std::uint32_t x = 0; x < total; ++x) {
        if (small[x]) {
            p.witness[x] = minimal_submask(x, [&](std::uint32_t y) { return small[y] != 0; });
        }
    }
    return p;
}

PropertyReport is_sigma_u_zip(const IdealSet &u)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "sigma_u_zip";
    const auto &ring = *u.ring;
    const auto p = sigma_u_zip_profile(u);
    const auto n = ring.size();
    const auto umask = set_to_mask(u.members);
    std::size_t applicable = 0, max_size = 0, divergent = 0;
    auto samples = nlohmann::json::array();
    auto divergences = nlohmann::json::array();
    for (std::uint32_t x = 1; x < p.witness.size(); ++x) {
        if (p.witness[x]) {
            ++applicable;
            max_size = std::max<std::size_t>(max_size, std::popcount(*p.witness[x]));
            if (samples.size() < 8) {
                samples.push_back({{"x", set_json(mask_to_set(x, n))}, {"y", set_json(mask_to_set(*p.witness[x], n))}});
            }
        } else if ((x & ~umask) != 0) {
            ++divergent;
            if (divergences.size() < 8) {
                const auto xs = mask_to_set(x, n);
                divergences.push_back({{"x", set_json(xs)}, {"quotient", set_json(quotient_set(ring, u.members, xs))}});
            }
        }
    }
    rep.certificate = {{"u", set_json(u.members)}, {"samples", samples}};
    rep.stats = {{"subsets", p.witness.size()},
                 {"applicable", applicable},
                 {"max_witness_size", max_size},
                 {"hypothesis_divergent", divergent},
                 {"divergence_examples", divergences}};
    if (divergent > 0) {
        rep.notes.push_back(std::to_string(divergent) + " subsets X not inside U have (U:X) != U");
    }
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

} // namespace mn
