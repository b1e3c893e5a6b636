#ifndef MN_IDEAL_HPP
#define MN_IDEAL_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <mn/element_set.hpp>
#include <mn/ring.hpp>

namespace mn
{

enum class IdealKind { subset, left, right, twosided };

std::string_view to_string(IdealKind kind) noexcept;
IdealKind ideal_kind_from_string(std::string_view s);

enum class Side { right, left };

// An explicit subset of a ring tagged with the closure it is known to satisfy.
struct IdealSet {
    RingPtr ring;
    ElementSet members;
    IdealKind kind = IdealKind::subset;

    bool contains(Elem e) const noexcept
    {
        return members.contains(e);
    }
    std::size_t size() const noexcept
    {
        return members.count();
    }

    // Serialized as {ring_label, kind, members}.
    nlohmann::json to_json() const;

    friend bool operator==(const IdealSet &a, const IdealSet &b)
    {
        return a.ring == b.ring && a.members == b.members && a.kind == b.kind;
    }
};

// Strongest closure kind the set satisfies.
IdealKind classify(const FiniteRing &ring, const ElementSet &s);
bool satisfies(IdealKind have, IdealKind want) noexcept;

IdealSet ideal_closure(const RingPtr &ring, const ElementSet &gens, IdealKind kind);

// Every ideal of the given kind once, ascending by size then member list.
std::vector<IdealSet> enumerate_ideals(const RingPtr &ring, IdealKind kind, std::size_t cap = default_ring_cap);

// (U:V) = {x | Vx ⊆ U}. An empty V gives the whole ring.
IdealSet quotient_ideal(const IdealSet &u, const ElementSet &v);
// Checks that the result is two-sided whenever U and V are both right ideals.
IdealSet quotient_ideal(const IdealSet &u, const IdealSet &v);

// Right: {a | Xa = 0}. Left: {a | aX = 0}.
IdealSet annihilator(const RingPtr &ring, const ElementSet &x, Side side);

// Element-set sum {a + b}.
ElementSet set_sum(const FiniteRing &ring, const ElementSet &a, const ElementSet &b);

struct PowerWitness {
    Elem element;
    unsigned exponent;
};

struct SemiprimeResult {
    bool semiprime = true;
    std::optional<PowerWitness> witness; // a ∉ U with a^n ∈ U
};

SemiprimeResult is_semiprime_ideal(const IdealSet &u);

// Smallest n >= 1 with a^n = 0.
std::optional<unsigned> nilpotency_index(const FiniteRing &ring, Elem a);

struct NilRadical {
    ElementSet members;
    bool is_ni = false;
};

NilRadical nil_radical(const FiniteRing &ring);

// N(X) = {a | xa ∈ nil(R) for each x ∈ X}.
ElementSet weak_annihilator(const FiniteRing &ring, const ElementSet &x);

struct CompatibilityWitness {
    Elem a;
    Elem b;
    std::size_t family_index; // index into the family
    bool inverse;             // the inverse of that family member was applied
};

struct SigmaCompatibility {
    bool compatible = true;
    std::optional<CompatibilityWitness> witness; // ab ∈ U xor aσ(b) ∈ U
    // σ(a)b ∈ U xor ab ∈ U while the defining condition holds. Never expected.
    std::optional<CompatibilityWitness> lemma_divergence;
};

// ab ∈ U ⇔ aσ(b) ∈ U for every σ in the family and every inverse.
SigmaCompatibility is_sigma_compatible_ideal(const IdealSet &u, std::span<const RingAutomorphism> family);
SigmaCompatibility sigma_compatibility(const FiniteRing &ring, const ElementSet &u,
                                       std::span<const RingAutomorphism> family);

} // namespace mn

#endif
