#include <mn/transfer.hpp>

#include <algorithm>
#include <set>

#include <mn/error.hpp>

namespace mn
{

TruncatedUniverse::TruncatedUniverse(TwistPtr twist, std::vector<GroupElement> window, std::size_t ring_cap,
                                     std::size_t window_cap)
    : m_twist(std::move(twist)), m_window(std::move(window))
{
    const auto n = m_twist->ring()->size();
    if (m_window.empty()) {
        fail(ErrorKind::malformed_spec, "universe window is empty");
    }
    if (!std::is_sorted(m_window.begin(), m_window.end()) ||
        std::adjacent_find(m_window.begin(), m_window.end()) != m_window.end()) {
        fail(ErrorKind::malformed_spec, "universe window must be strictly ascending");
    }
    if (n > ring_cap || m_window.size() > window_cap) {
        fail(ErrorKind::size_cap_exceeded, "universe needs |R| <= " + std::to_string(ring_cap) + " and |window| <= " +
                                               std::to_string(window_cap) + ", got " + std::to_string(n) + " and " +
                                               std::to_string(m_window.size()));
    }
    m_count = 1;
    for (std::size_t i = 0; i < m_window.size(); ++i) {
        m_count *= n;
    }
}

Series TruncatedUniverse::at(std::uint64_t index) const
{
    const auto n = m_twist->ring()->size();
    std::vector<Series::Term> terms;
    for (const auto &x : m_window) {
        terms.emplace_back(x, static_cast<Elem>(index % n));
        index /= n;
    }
    return Series::make(m_twist, std::move(terms));
}

bool TruncatedUniverse::contains(const Series &f) const noexcept
{
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto &t) {
        return std::binary_search(m_window.begin(), m_window.end(), t.first);
    });
}

std::uint64_t TruncatedUniverse::index_of(const Series &f) const
{
    if (!contains(f)) {
        fail(ErrorKind::malformed_spec, "series support leaves the universe window: " + f.format());
    }
    const auto n = m_twist->ring()->size();
    std::uint64_t index = 0;
    for (std::size_t p = m_window.size(); p-- > 0;) {
        index = index * n + f.coeff(m_window[p]);
    }
    return index;
}

const std::vector<Series> &TruncatedUniverse::all() const
{
    if (m_all.empty()) {
        m_all.reserve(m_count);
        for (std::uint64_t i = 0; i < m_count; ++i) {
            m_all.push_back(at(i));
        }
    }
    return m_all;
}

std::vector<std::uint64_t> TruncatedUniverse::with_coefficients_in(const ElementSet &s) const
{
    std::vector<std::uint64_t> out;
    const auto &a = all();
    for (std::uint64_t i = 0; i < m_count; ++i) {
        if (a[i].coefficients_in(s)) {
            out.push_back(i);
        }
    }
    return out;
}

nlohmann::json TruncatedUniverse::window_json() const
{
    auto out = nlohmann::json::array();
    for (const auto &x : m_window) {
        out.push_back(m_twist->group().element_to_json(x));
    }
    return out;
}

namespace
{

nlohmann::json universe_bounds(const TruncatedUniverse &u)
{
    return {{"window", u.window_json()}, {"universe_size", u.count()}};
}

nlohmann::json series_list_json(const std::vector<Series> &fs)
{
    auto out = nlohmann::json::array();
    for (const auto &f : fs) {
        out.push_back(f.to_json());
    }
    return out;
}

} // namespace

FusibleLift lift_fusible_decomposition(const Series &f, const TruncatedUniverse &universe)
{
    Stopwatch sw;
    const auto &twist = f.twist();
    if (twist != universe.twist()) {
        fail(ErrorKind::twist_mismatch, "series and universe use different twist systems");
    }
    const auto &ring = *twist->ring();
    const auto &group = twist->group();
    if (f.is_zero()) {
        fail(ErrorKind::zero_series, "cannot lift a decomposition of the zero series");
    }
    if (!is_left_fusible(ring).verdict()) {
        fail(ErrorKind::not_fusible_ring, ring.label() + " is not left fusible");
    }
    if (const auto sc = is_sigma_compatible_ring(ring, twist->generators()); !sc.verdict()) {
        fail(ErrorKind::not_sigma_compatible, ring.label() + " is not sigma-compatible: " + sc.witness.dump());
    }
    if (!twist->normalized()) {
        fail(ErrorKind::not_normalized, "twist system is not normalized");
    }
    const auto stats = support_stats(f);
    const auto s0 = stats.pi;
    const auto [a, b] = fusible_decompositions(ring, stats.leading).front();
    const auto g = single_term(twist, s0, a);
    const auto h = f - g;

    PropertyReport rep;
    rep.property = "fusible_lift";
    rep.bounds = universe_bounds(universe);
    auto fail_with = [&](std::string what, nlohmann::json detail) {
        rep.status = Status::fails;
        rep.witness = {{"failed", std::move(what)}, {"detail", std::move(detail)}};
    };

    if (g + h != f) {
        fail_with("sum", {{"g", g.to_json()}, {"h", h.to_json()}});
    }
    // d ≠ 0 with a·d = 0; for a = 0 any nonzero d works
    Elem d = 0;
    for (std::size_t c = 1; c < ring.size(); ++c) {
        if (ring.mul(a, Elem(c)) == 0) {
            d = Elem(c);
            break;
        }
    }
    if (d == 0) {
        fail_with("left_zero_divisor", {{"a", a}});
    } else if (!(g * embed_scalar(twist, d)).is_zero()) {
        fail_with("g_times_d", {{"d", d}});
    }
    const auto hstats = support_stats(h);
    if (hstats.leading != b) {
        fail_with("h_leading", {{"leading", hstats.leading}, {"b", b}});
    }
    const auto z = zero_divisor_sets(ring);
    if (!z.left_regular.contains(hstats.leading)) {
        fail_with("leading_regular", {{"leading", hstats.leading}});
    }
    std::uint64_t checked = 0;
    for (const auto &k : universe.all()) {
        if (k.is_zero() || !rep.verdict()) {
            continue;
        }
        ++checked;
        const auto hk = h * k;
        const auto kpi = support_stats(k).pi;
        const auto lead = group.op(hstats.pi, kpi);
        if (hk.coeff(lead) == 0) {
            fail_with("h_regular", {{"k", k.to_json()}, {"product", hk.to_json()}});
        }
    }
    if (rep.verdict()) {
        rep.certificate = {{"f", f.to_json()},
                           {"s0", group.element_to_json(s0)},
                           {"a", a},
                           {"b", b},
                           {"g", g.to_json()},
                           {"h", h.to_json()},
                           {"d", d},
                           {"h_leading", hstats.leading},
                           {"h_pi", group.element_to_json(hstats.pi)},
                           {"k_checked", checked}};
    }
    rep.stats = {{"k_checked", checked}};
    rep.elapsed_ms = sw.elapsed_ms();
    return {g, h, std::move(rep)};
}

namespace
{

using Membership = std::vector<char>;

// Series u with u·s = 0 (left) or s·u = 0 (right) for every s in the listed set.
Membership universe_annihilator(const TruncatedUniverse &universe, const std::vector<std::uint64_t> &set, Side side)
{
    const auto &all = universe.all();
    Membership out(all.size(), 1);
    for (std::size_t u = 0; u < all.size(); ++u) {
        for (auto s : set) {
            const auto p = side == Side::left ? all[u] * all[s] : all[s] * all[u];
            if (!p.is_zero()) {
                out[u] = 0;
                break;
            }
        }
    }
    return out;
}

Membership universe_sum(const TruncatedUniverse &universe, const Membership &a, const Membership &b)
{
    const auto &all = universe.all();
    Membership out(all.size(), 0);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!a[i]) {
            continue;
        }
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (b[j]) {
                out[universe.index_of(all[i] + all[j])] = 1;
            }
        }
    }
    return out;
}

Membership coefficient_membership(const TruncatedUniverse &universe, const ElementSet &s)
{
    Membership out(universe.count(), 0);
    for (auto i : universe.with_coefficients_in(s)) {
        out[i] = 1;
    }
    return out;
}

std::optional<std::size_t> first_difference(const Membership &a, const Membership &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t membership_count(const Membership &m)
{
    return static_cast<std::size_t>(std::count(m.begin(), m.end(), 1));
}

std::vector<std::uint64_t> members_of(const Membership &m)
{
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i]) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

PropertyReport lifted_annihilator_check(const IdealSet &i, const IdealSet &j, Side side,
                                        const TruncatedUniverse &universe)
{
    Stopwatch sw;
    PropertyReport rep;
    rep.property = "lifted_annihilator";
    rep.bounds = universe_bounds(universe);
    const auto &ring = i.ring;
    if (j.ring != ring || universe.twist()->ring() != ring) {
        fail(ErrorKind::ring_mismatch, "ideals and universe are over different rings");
    }
    const auto &all = universe.all();
    const auto meet = i.members & j.members;
    auto fail_with = [&](std::string identity, nlohmann::json detail) {
        if (rep.verdict()) {
            rep.status = Status::fails;
            rep.witness = {{"identity", std::move(identity)}, {"detail", std::move(detail)}};
        }
    };

    for (const auto &u : all) {
        const bool both = u.coefficients_in(i.members) && u.coefficients_in(j.members);
        if (both != u.coefficients_in(meet)) {
            fail_with("intersection", {{"u", u.to_json()}});
            break;
        }
    }

    auto lifted = nlohmann::json::object();
    for (const auto &[key, x] : {std::pair{"I", &i}, std::pair{"J", &j}}) {
        const auto base = annihilator(ring, x->members, side).members;
        const auto series_ann = universe_annihilator(universe, universe.with_coefficients_in(x->members), side);
        const auto expected = coefficient_membership(universe, base);
        if (const auto d = first_difference(series_ann, expected)) {
            fail_with("annihilator_lift", {{"ideal", set_json(x->members)},
                                           {"u", all[*d].to_json()},
                                           {"annihilates", series_ann[*d] != 0},
                                           {"base_annihilator", set_json(base)}});
        }
        lifted[key] = {{"base_annihilator", set_json(base)},
                       {"universe_annihilator_size", membership_count(series_ann)}};
    }

    const auto l_i = annihilator(ring, i.members, Side::left).members;
    const auto l_j = annihilator(ring, j.members, Side::left).members;
    const auto l_meet = annihilator(ring, meet, Side::left).members;
    const bool base_in = l_meet == set_sum(*ring, l_i, l_j);
    const auto u_i = universe_annihilator(universe, universe.with_coefficients_in(i.members), Side::left);
    const auto u_j = universe_annihilator(universe, universe.with_coefficients_in(j.members), Side::left);
    const auto u_meet = universe_annihilator(universe, universe.with_coefficients_in(meet), Side::left);
    const bool universe_in = u_meet == universe_sum(universe, u_i, u_j);
    if (base_in != universe_in) {
        fail_with("in_agreement", {{"base", base_in}, {"universe", universe_in}});
    }
    if (rep.verdict()) {
        rep.certificate = {{"I", set_json(i.members)},
                           {"J", set_json(j.members)},
                           {"side", side == Side::left ? "left" : "right"},
                           {"lifted", lifted},
                           {"base_in", base_in},
                           {"universe_in", universe_in}};
    }
    rep.stats = {{"universe_size", universe.count()}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

namespace
{

ElementSet content_union(const FiniteRing &ring, const std::vector<Series> &fs)
{
    ElementSet c(ring.size());
    for (const auto &f : fs) {
        c |= f.content();
    }
    return c;
}

} // namespace

PropertyReport sa_transfer_witness(const std::vector<Series> &i_gens, const std::vector<Series> &j_gens,
                                   const TruncatedUniverse &universe)
{
    Stopwatch sw;
    const auto &twist = universe.twist();
    const auto &ring = twist->ring();
    for (const auto *side : {&i_gens, &j_gens}) {
        for (const auto &f : *side) {
            if (f.twist() != twist) {
                fail(ErrorKind::twist_mismatch, "generator series use a different twist system");
            }
        }
    }
    if (!twist->normalized()) {
        fail(ErrorKind::precondition_fail, "twist system is not normalized");
    }
    if (!is_SA(ring).verdict()) {
        fail(ErrorKind::precondition_fail, ring->label() + " is not SA");
    }
    if (const auto ga = is_G_armendariz(twist, universe.window().size(), universe.window()); !ga.verdict()) {
        fail(ErrorKind::precondition_fail, ring->label() + " is not G-Armendariz on the universe bounds: " +
                                               ga.witness.dump());
    }

    PropertyReport rep;
    rep.property = "sa_transfer";
    rep.bounds = universe_bounds(universe);

    const auto i0 = ideal_closure(ring, content_union(*ring, i_gens), IdealKind::twosided).members;
    const auto j0 = ideal_closure(ring, content_union(*ring, j_gens), IdealKind::twosided).members;
    const auto r_i0 = annihilator(ring, i0, Side::right).members;
    const auto r_j0 = annihilator(ring, j0, Side::right).members;
    const auto target = set_sum(*ring, r_i0, r_j0);
    std::optional<ElementSet> k;
    for (const auto &cand : enumerate_ideals(ring, IdealKind::twosided)) {
        if (annihilator(ring, cand.members, Side::right).members == target) {
            k = cand.members;
            break;
        }
    }
    if (!k) {
        fail(ErrorKind::no_k, "no two-sided K with r(K) = r(I0) + r(J0) = " + set_json(target).dump());
    }

    const auto a = universe_annihilator(universe, universe.with_coefficients_in(i0), Side::right);
    const auto b = universe_annihilator(universe, universe.with_coefficients_in(j0), Side::right);
    const auto k_series = universe.with_coefficients_in(*k);
    const auto c = universe_annihilator(universe, k_series, Side::right);
    const auto sum = universe_sum(universe, a, b);
    const auto &all = universe.all();
    if (const auto d = first_difference(sum, c)) {
        rep.status = Status::fails;
        rep.witness = {{"level", "universe"}, {"u", all[*d].to_json()}, {"in_sum", sum[*d] != 0}};
    }

    // the other direction: recover K0 from the universe-level K and recheck the base identity
    ElementSet k0(ring->size());
    for (auto idx : k_series) {
        k0 |= all[idx].content();
    }
    k0 = ideal_closure(ring, k0, IdealKind::twosided).members;
    const auto r_k0 = annihilator(ring, k0, Side::right).members;
    if (rep.verdict() && r_k0 != target) {
        rep.status = Status::fails;
        rep.witness = {{"level", "base"}, {"k0", set_json(k0)}, {"r_k0", set_json(r_k0)}};
    }
    if (rep.verdict()) {
        rep.certificate = {{"i0", set_json(i0)},
                           {"j0", set_json(j0)},
                           {"k", set_json(*k)},
                           {"k0", set_json(k0)},
                           {"r_i0", set_json(r_i0)},
                           {"r_j0", set_json(r_j0)},
                           {"r_k", set_json(target)},
                           {"universe_r_k_size", membership_count(c)}};
    }
    rep.stats = {{"universe_size", universe.count()}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

nlohmann::json DerivationTrace::to_json(const OrderedGroup &group) const
{
    auto pair_json = [&](const std::pair<GroupElement, GroupElement> &p) {
        return nlohmann::json::array({group.element_to_json(p.first), group.element_to_json(p.second)});
    };
    auto steps_json = nlohmann::json::array();
    for (const auto &s : steps) {
        auto pairs = nlohmann::json::array();
        for (const auto &p : s.pairs) {
            pairs.push_back(pair_json(p));
        }
        steps_json.push_back({{"w", group.element_to_json(s.w)},
                              {"pairs", pairs},
                              {"established", nlohmann::json::array({pair_json(s.established)})},
                              {"multiplier", s.multiplier},
                              {"check", "direct-eval-ok"}});
    }
    auto concl = nlohmann::json::array();
    for (const auto &p : conclusion) {
        concl.push_back(pair_json(p));
    }
    return {{"steps", steps_json}, {"conclusion", concl}};
}

namespace
{

Elem twisted_term(const TwistSystem &twist, const Series &f, const Series &g, const GroupElement &u,
                  const GroupElement &v)
{
    const auto &ring = *twist.ring();
    return ring.mul(ring.mul(f.coeff(u), twist.sigma(u, g.coeff(v))), twist.tau(u, v));
}

void check_extraction_preconditions(const IdealSet &u, const TwistSystem &twist)
{
    if (u.ring != twist.ring()) {
        fail(ErrorKind::ring_mismatch, "ideal and series are over different rings");
    }
    if (classify(*u.ring, u.members) != IdealKind::twosided) {
        fail(ErrorKind::precondition_fail, "U is not a two-sided ideal");
    }
    if (const auto sp = is_semiprime_ideal(u); !sp.semiprime) {
        fail(ErrorKind::precondition_fail, "U is not semiprime: " + std::to_string(sp.witness->element) + "^" +
                                               std::to_string(sp.witness->exponent) + " lies in U");
    }
    if (const auto sc = is_sigma_compatible_ideal(u, twist.generators()); !sc.compatible) {
        fail(ErrorKind::precondition_fail, "U is not sigma-compatible at a=" + std::to_string(sc.witness->a) +
                                               " b=" + std::to_string(sc.witness->b));
    }
}

[[noreturn]] void mismatch(const OrderedGroup &group, const GroupElement &w, const std::string &what)
{
    fail(ErrorKind::trace_mismatch, "at w=" + group.format(w) + ": " + what);
}

} // namespace

std::vector<std::pair<GroupElement, GroupElement>> extraction_oracle(const Series &f, const Series &g,
                                                                     const IdealSet &u)
{
    std::vector<std::pair<GroupElement, GroupElement>> out;
    for (const auto &[x, a] : f.terms()) {
        for (const auto &[y, b] : g.terms()) {
            if (u.contains(twisted_term(*f.twist(), f, g, x, y))) {
                out.emplace_back(x, y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DerivationTrace coefficient_extraction(const Series &f, const Series &g, const IdealSet &u)
{
    if (f.twist() != g.twist()) {
        fail(ErrorKind::twist_mismatch, "f and g use different twist systems");
    }
    const auto &twist = *f.twist();
    const auto &ring = *twist.ring();
    const auto &group = twist.group();
    check_extraction_preconditions(u, twist);
    const auto fg = f * g;
    if (!fg.coefficients_in(u.members)) {
        fail(ErrorKind::precondition_fail, "fg = " + fg.format() + " has coefficients outside U");
    }
    DerivationTrace trace;
    if (f.is_zero() || g.is_zero()) {
        return trace;
    }
    std::set<GroupElement> ws;
    for (const auto &[x, a] : f.terms()) {
        for (const auto &[y, b] : g.terms()) {
            ws.insert(group.op(x, y));
        }
    }
    std::set<std::pair<GroupElement, GroupElement>> established;
    auto in_u = [&](Elem e) { return u.contains(e); };

    for (const auto &w : ws) {
        const auto pairs = x_w_pairs(f, g, w);
        std::vector<Elem> t;
        Elem a1 = 0;
        for (const auto &[x, y] : pairs) {
            t.push_back(twisted_term(twist, f, g, x, y));
            a1 = ring.add(a1, t.back());
        }
        if (a1 != fg.coeff(w) || !in_u(a1)) {
            mismatch(group, w, "coefficient a1 of fg is not the claimed element of U");
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Elem m = f.coeff(pairs[i].first);
            Elem rest = 0; // Σ_{j≠i} t_j m
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                if (j == i) {
                    continue;
                }
                if (j > i && !established.count({pairs[i].first, pairs[j].second})) {
                    mismatch(group, w, "induction hypothesis for (u_i, v_j) not yet established");
                }
                if (j < i && !established.count(pairs[j])) {
                    mismatch(group, w, "earlier pair at this w not established");
                }
                const Elem tm = ring.mul(t[j], m);
                if (!in_u(tm)) {
                    mismatch(group, w, "t_j f(u_i) not in U for j=" + std::to_string(j));
                }
                rest = ring.add(rest, tm);
            }
            const Elem ti_m = ring.sub(ring.mul(a1, m), rest);
            if (ti_m != ring.mul(t[i], m) || !in_u(ti_m)) {
                mismatch(group, w, "residual t_i f(u_i) not in U");
            }
            if (!in_u(ring.mul(t[i], t[i]))) {
                mismatch(group, w, "t_i^2 not in U");
            }
            if (!in_u(t[i])) {
                mismatch(group, w, "semiprimeness conclusion t_i in U fails");
            }
            established.insert(pairs[i]);
            trace.steps.push_back({w, pairs, pairs[i], m});
        }
    }
    trace.conclusion.assign(established.begin(), established.end());
    if (trace.conclusion != extraction_oracle(f, g, u)) {
        fail(ErrorKind::trace_mismatch, "trace conclusion differs from the direct oracle");
    }
    return trace;
}

PropertyReport series_zip_witness(const std::vector<Series> &x, const IdealSet &u, const TruncatedUniverse &universe)
{
    Stopwatch sw;
    const auto &twist = universe.twist();
    const auto &ring = *twist->ring();
    check_extraction_preconditions(u, *twist);
    for (const auto &f : x) {
        if (f.twist() != twist || !universe.contains(f)) {
            fail(ErrorKind::precondition_fail, "series " + f.format() + " is outside the universe");
        }
    }
    PropertyReport rep;
    rep.property = "series_zip_witness";
    rep.bounds = universe_bounds(universe);
    rep.notes.push_back("universe-level quotients are computed over the truncated window only");

    if (std::all_of(x.begin(), x.end(), [&](const Series &f) { return f.coefficients_in(u.members); })) {
        rep.status = Status::not_applicable;
        rep.witness = {{"x", series_list_json(x)}};
        rep.elapsed_ms = sw.elapsed_ms();
        return rep;
    }
    const auto &all = universe.all();
    const auto u_series = coefficient_membership(universe, u.members);
    auto quotient = [&](const std::vector<Series> &set) {
        Membership q(all.size(), 1);
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (const auto &f : set) {
                if (!(f * all[i]).coefficients_in(u.members)) {
                    q[i] = 0;
                    break;
                }
            }
        }
        return q;
    };
    const auto q = quotient(x);
    if (const auto d = first_difference(q, u_series)) {
        rep.status = Status::hypothesis_fails;
        rep.witness = {{"x", series_list_json(x)}, {"u", all[*d].to_json()}, {"in_quotient", q[*d] != 0}};
        rep.elapsed_ms = sw.elapsed_ms();
        return rep;
    }

    const auto cx = content_union(ring, x);
    const auto base_q = quotient_set(ring, u.members, cx);
    if (base_q != u.members) {
        fail(ErrorKind::trace_mismatch, "(U:C_X) = " + set_json(base_q).dump() + " differs from U");
    }
    const auto zip = sigma_u_zip_witness(u, cx, twist->generators());
    if (zip.status != Status::holds) {
        fail(ErrorKind::trace_mismatch, "base Σ_U-zip search on C_X did not produce a witness");
    }
    const auto cx0 = set_from_json(zip.certificate.at("y"), ring.size());
    std::vector<Series> x0;
    for (const auto &f : x) {
        if (f.content().intersects(cx0)) {
            x0.push_back(f);
        }
    }

    const auto q0 = quotient(x0);
    std::size_t runs = 0;
    for (auto i : members_of(q0)) {
        for (const auto &f : x0) {
            const auto trace = coefficient_extraction(f, all[i], u);
            ++runs;
            for (const auto &[s, t] : trace.conclusion) {
                if (!u.contains(ring.mul(f.coeff(s), all[i].coeff(t)))) {
                    fail(ErrorKind::trace_mismatch, "f(s)u(t) outside U after extraction for " + all[i].format());
                }
            }
        }
        if (!all[i].coefficients_in(u.members)) {
            fail(ErrorKind::trace_mismatch, "content of " + all[i].format() + " escapes (U:C_X0) = U");
        }
    }
    if (const auto d = first_difference(q0, u_series)) {
        rep.status = Status::fails;
        rep.witness = {{"x0", series_list_json(x0)}, {"u", all[*d].to_json()}};
    } else {
        rep.certificate = {{"u", set_json(u.members)},
                           {"c_x", set_json(cx)},
                           {"c_x0", set_json(cx0)},
                           {"x0", series_list_json(x0)},
                           {"universe_quotient_size", membership_count(q0)}};
    }
    rep.stats = {{"universe_size", universe.count()}, {"extraction_runs", runs}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
}

} // namespace mn
