#ifndef MN_TRANSFER_HPP
#define MN_TRANSFER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <mn/props.hpp>

namespace mn
{

inline constexpr std::size_t universe_ring_cap = 16;
inline constexpr std::size_t universe_window_cap = 3;

// Every series whose support lies in a finite window, indexed by base-|R|
// digits: digit p of the index is the coefficient at window[p].
class TruncatedUniverse
{
public:
    // SizeCapExceeded beyond the caps; MalformedSpec for an empty or unsorted window.
    TruncatedUniverse(TwistPtr twist, std::vector<GroupElement> window, std::size_t ring_cap = universe_ring_cap,
                      std::size_t window_cap = universe_window_cap);

    const TwistPtr &twist() const noexcept
    {
        return m_twist;
    }
    const std::vector<GroupElement> &window() const noexcept
    {
        return m_window;
    }
    std::uint64_t count() const noexcept
    {
        return m_count;
    }
    Series at(std::uint64_t index) const;
    // Index of a series supported inside the window; MalformedSpec otherwise.
    std::uint64_t index_of(const Series &f) const;
    bool contains(const Series &f) const noexcept;

    const std::vector<Series> &all() const;
    // Indices of the series with every coefficient in s.
    std::vector<std::uint64_t> with_coefficients_in(const ElementSet &s) const;

    nlohmann::json window_json() const;

private:
    TwistPtr m_twist;
    std::vector<GroupElement> m_window;
    std::uint64_t m_count = 0;
    mutable std::vector<Series> m_all;
};

struct FusibleLift {
    Series g;
    Series h;
    PropertyReport report; // certificate for f = g + h, g·d = 0, h regular in the universe
};

// Splits f at its leading exponent s0 = π(f) along the first decomposition
// f(s0) = a + b. NotFusibleRing, NotSigmaCompatible, NotNormalized, ZeroSeries.
FusibleLift lift_fusible_decomposition(const Series &f, const TruncatedUniverse &universe);

// Identities, checked over the universe for the pair (I, J):
//   (1) C(u) ⊆ I and C(u) ⊆ J iff C(u) ⊆ I ∩ J
//   (2) u annihilates every I-coefficient (and J-coefficient) series on the given
//       side iff C(u) lies in the base annihilator of I (of J)
//   (3) base and universe agree on ℓ(I ∩ J) = ℓ(I) + ℓ(J)
PropertyReport lifted_annihilator_check(const IdealSet &i, const IdealSet &j, Side side,
                                        const TruncatedUniverse &universe);

// I0, J0 are the two-sided closures of the contents; K is the first two-sided
// ideal with r(K) = r(I0) + r(J0). PreconditionFail unless the base ring is SA
// and G-Armendariz on the universe bounds; NoK when no K exists.
PropertyReport sa_transfer_witness(const std::vector<Series> &i_gens, const std::vector<Series> &j_gens,
                                   const TruncatedUniverse &universe);

struct DerivationStep {
    GroupElement w;
    std::vector<std::pair<GroupElement, GroupElement>> pairs; // X_w(f,g), ascending by u
    std::pair<GroupElement, GroupElement> established;
    Elem multiplier = 0; // f(u_i)
};

struct DerivationTrace {
    std::vector<DerivationStep> steps;
    // Every (u, v) ∈ supp f × supp g shown to satisfy f(u)σ_u(g(v))τ(u,v) ∈ U, ascending.
    std::vector<std::pair<GroupElement, GroupElement>> conclusion;

    nlohmann::json to_json(const OrderedGroup &group) const;
};

// PreconditionFail unless U is semiprime, Σ-compatible and fg ∈ U((G;σ;τ)).
// TraceMismatch if any step fails direct evaluation or the conclusion differs
// from the direct oracle.
DerivationTrace coefficient_extraction(const Series &f, const Series &g, const IdealSet &u);

// The pairs (u, v) with f(u)σ_u(g(v))τ(u,v) ∈ U, by direct scan.
std::vector<std::pair<GroupElement, GroupElement>> extraction_oracle(const Series &f, const Series &g,
                                                                     const IdealSet &u);

// X0 built from the minimal content witness C_{X0} of (U:C_X) = U.
PropertyReport series_zip_witness(const std::vector<Series> &x, const IdealSet &u, const TruncatedUniverse &universe);

} // namespace mn

#endif
