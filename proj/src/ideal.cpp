#include <mn/ideal.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <mn/error.hpp>
#include <mn/kernels.hpp>

namespace mn
{

std::string_view to_string(IdealKind kind) noexcept
{
    switch (kind) {
        case IdealKind::subset:
            return "subset";
        case IdealKind::left:
            return "left";
        case IdealKind::right:
            return "right";
        case IdealKind::twosided:
            return "twosided";
    }
    return "subset";
}

IdealKind ideal_kind_from_string(std::string_view s)
{
    if (s == "subset") {
        return IdealKind::subset;
    }
    if (s == "left") {
        return IdealKind::left;
    }
    if (s == "right") {
        return IdealKind::right;
    }
    if (s == "twosided") {
        return IdealKind::twosided;
    }
    fail(ErrorKind::malformed_spec, "unknown ideal kind '" + std::string(s) + "'");
}

nlohmann::json IdealSet::to_json() const
{
    return {{"ring_label", ring ? ring->label() : std::string()},
            {"kind", std::string(to_string(kind))},
            {"members", members.members()}};
}

bool satisfies(IdealKind have, IdealKind want) noexcept
{
    switch (want) {
        case IdealKind::subset:
            return true;
        case IdealKind::left:
            return have == IdealKind::left || have == IdealKind::twosided;
        case IdealKind::right:
            return have == IdealKind::right || have == IdealKind::twosided;
        case IdealKind::twosided:
            return have == IdealKind::twosided;
    }
    return false;
}

IdealKind classify(const FiniteRing &ring, const ElementSet &s)
{
    const auto n = ring.size();
    if (!s.contains(0)) {
        return IdealKind::subset;
    }
    bool additive = true, left = true, right = true;
    s.for_each([&](Elem a) {
        if (!additive) {
            return;
        }
        // A nonempty finite subset closed under + is an additive subgroup.
        // bit b of hits: a + b ∈ s; only b ∈ s matters.
        const auto hits = kernels::member_set(ring.add_table().subspan(std::size_t{a} * n, n), s);
        if (!s.subset_of(hits)) {
            additive = false;
        }
        if (right && !kernels::member_set(ring.mul_row(a), s).is_full()) {
            right = false;
        }
        if (left && !kernels::member_set(ring.mul_col(a), s).is_full()) {
            left = false;
        }
    });
    if (!additive) {
        return IdealKind::subset;
    }
    if (left && right) {
        return IdealKind::twosided;
    }
    if (right) {
        return IdealKind::right;
    }
    if (left) {
        return IdealKind::left;
    }
    return IdealKind::subset;
}

IdealSet ideal_closure(const RingPtr &ring, const ElementSet &gens, IdealKind kind)
{
    const auto &r = *ring;
    const auto n = r.size();
    ElementSet s(n);
    std::vector<Elem> queue;
    auto push = [&](Elem e) {
        if (!s.contains(e)) {
            s.insert(e);
            queue.push_back(e);
        }
    };
    push(0);
    gens.for_each(push);
    const bool mul_left = kind == IdealKind::left || kind == IdealKind::twosided;
    const bool mul_right = kind == IdealKind::right || kind == IdealKind::twosided;
    std::vector<Elem> present;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Elem a = queue[head];
        present = s.members();
        for (auto t : present) {
            push(r.add(a, t));
        }
        for (std::size_t x = 0; x < n; ++x) {
            if (mul_left) {
                push(r.mul(Elem(x), a));
            }
            if (mul_right) {
                push(r.mul(a, Elem(x)));
            }
        }
    }
    return IdealSet{ring, std::move(s), kind};
}

std::vector<IdealSet> enumerate_ideals(const RingPtr &ring, IdealKind kind, std::size_t cap)
{
    if (ring->size() > cap) {
        fail(ErrorKind::size_cap_exceeded, "enumerate_ideals on " + std::to_string(ring->size()) +
                                               "-element ring (cap " + std::to_string(cap) + ")");
    }
    if (kind == IdealKind::subset) {
        fail(ErrorKind::malformed_spec, "enumerate_ideals needs a closure kind");
    }
    const auto n = ring->size();
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<ElementSet> found;
    auto add = [&](ElementSet s) {
        auto key = std::vector<std::uint64_t>(s.words().begin(), s.words().end());
        if (seen.insert(std::move(key)).second) {
            found.push_back(std::move(s));
        }
    };
    for (std::size_t x = 0; x < n; ++x) {
        ElementSet g(n);
        g.insert(Elem(x));
        add(ideal_closure(ring, g, kind).members);
    }
    // Pairwise joins to a fixpoint; the list grows while we scan it.
    for (std::size_t j = 1; j < found.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (found[i].subset_of(found[j]) || found[j].subset_of(found[i])) {
                continue;
            }
            add(ideal_closure(ring, found[i] | found[j], kind).members);
        }
    }
    std::sort(found.begin(), found.end(), size_lex_less);
    std::vector<IdealSet> out;
    out.reserve(found.size());
    for (auto &s : found) {
        out.push_back(IdealSet{ring, std::move(s), kind});
    }
    return out;
}

IdealSet quotient_ideal(const IdealSet &u, const ElementSet &v)
{
    const auto &r = *u.ring;
    if (v.universe() != r.size()) {
        fail(ErrorKind::ring_mismatch, "quotient_ideal: V is not a subset of U's ring");
    }
    auto out = ElementSet::full(r.size());
    v.for_each([&](Elem x) { out &= kernels::member_set(r.mul_row(x), u.members); });
    const auto kind = classify(r, out);
    return IdealSet{u.ring, std::move(out), kind};
}

IdealSet quotient_ideal(const IdealSet &u, const IdealSet &v)
{
    if (u.ring != v.ring) {
        fail(ErrorKind::ring_mismatch, "quotient_ideal: U and V live in different rings");
    }
    auto q = quotient_ideal(u, v.members);
    if (satisfies(u.kind, IdealKind::right) && satisfies(v.kind, IdealKind::right) &&
        q.kind != IdealKind::twosided) {
        throw std::logic_error("quotient of right ideals failed two-sided validation");
    }
    return q;
}

IdealSet annihilator(const RingPtr &ring, const ElementSet &x, Side side)
{
    const auto &r = *ring;
    auto out = ElementSet::full(r.size());
    x.for_each([&](Elem e) {
        out &= kernels::eq_set(side == Side::right ? r.mul_row(e) : r.mul_col(e), 0);
    });
    const auto kind = classify(r, out);
    return IdealSet{ring, std::move(out), kind};
}

ElementSet set_sum(const FiniteRing &ring, const ElementSet &a, const ElementSet &b)
{
    ElementSet out(ring.size());
    a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.insert(ring.add(x, y)); }); });
    return out;
}

SemiprimeResult is_semiprime_ideal(const IdealSet &u)
{
    const auto &r = *u.ring;
    const auto n = r.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (u.contains(Elem(a))) {
            continue;
        }
        ElementSet seen(n);
        Elem p = Elem(a);
        for (unsigned k = 1; !seen.contains(p); ++k) {
            if (u.contains(p)) {
                return {false, PowerWitness{Elem(a), k}};
            }
            seen.insert(p);
            p = r.mul(p, Elem(a));
        }
    }
    return {true, std::nullopt};
}

std::optional<unsigned> nilpotency_index(const FiniteRing &ring, Elem a)
{
    ElementSet seen(ring.size());
    Elem p = a;
    for (unsigned k = 1; !seen.contains(p); ++k) {
        if (p == 0) {
            return k;
        }
        seen.insert(p);
        p = ring.mul(p, a);
    }
    return std::nullopt;
}

NilRadical nil_radical(const FiniteRing &ring)
{
    NilRadical out{ElementSet(ring.size()), false};
    for (std::size_t a = 0; a < ring.size(); ++a) {
        if (nilpotency_index(ring, Elem(a))) {
            out.members.insert(Elem(a));
        }
    }
    out.is_ni = classify(ring, out.members) == IdealKind::twosided;
    return out;
}

ElementSet weak_annihilator(const FiniteRing &ring, const ElementSet &x)
{
    const auto nil = nil_radical(ring).members;
    auto out = ElementSet::full(ring.size());
    x.for_each([&](Elem e) { out &= kernels::member_set(ring.mul_row(e), nil); });
    return out;
}

SigmaCompatibility sigma_compatibility(const FiniteRing &ring, const ElementSet &u,
                                       std::span<const RingAutomorphism> family)
{
    const auto n = ring.size();
    SigmaCompatibility out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (bool inv : {false, true}) {
            const auto sigma = inv ? inverse(family[i]) : family[i];
            for (std::size_t a = 0; a < n && out.compatible; ++a) {
                const auto in_u = kernels::member_set(ring.mul_row(Elem(a)), u); // bit b: ab ∈ U
                for (std::size_t b = 0; b < n; ++b) {
                    const bool lhs = in_u.contains(Elem(b));
                    if (lhs != u.contains(ring.mul(Elem(a), sigma(Elem(b))))) {
                        out.compatible = false;
                        out.witness = CompatibilityWitness{Elem(a), Elem(b), i, inv};
                        break;
                    }
                }
            }
            if (!out.compatible) {
                return out;
            }
        }
    }
    // σ(a)b ∈ U ⇔ ab ∈ U follows from the defining condition; scan for a divergence anyway.
    for (std::size_t i = 0; i < family.size() && !out.lemma_divergence; ++i) {
        for (bool inv : {false, true}) {
            const auto sigma = inv ? inverse(family[i]) : family[i];
            for (std::size_t a = 0; a < n && !out.lemma_divergence; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    if (u.contains(ring.mul(sigma(Elem(a)), Elem(b))) != u.contains(ring.mul(Elem(a), Elem(b)))) {
                        out.lemma_divergence = CompatibilityWitness{Elem(a), Elem(b), i, inv};
                        break;
                    }
                }
            }
        }
    }
    return out;
}

SigmaCompatibility is_sigma_compatible_ideal(const IdealSet &u, std::span<const RingAutomorphism> family)
{
    for (const auto &s : family) {
        if (s.ring() != u.ring) {
            fail(ErrorKind::ring_mismatch, "sigma family acts on a different ring");
        }
    }
    return sigma_compatibility(*u.ring, u.members, family);
}

} // namespace mn
