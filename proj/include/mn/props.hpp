#ifndef MN_PROPS_HPP
#define MN_PROPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <mn/ideal.hpp>
#include <mn/report.hpp>
#include <mn/series.hpp>

namespace mn
{

struct ZeroDivisorSets {
    ElementSet left;          // Z_ℓ: a with ar = 0 for some r ≠ 0
    ElementSet left_regular;  // Z_ℓ*
    ElementSet right;         // Z_r
    ElementSet right_regular; // Z_r*
};

// 0 lands in Z_ℓ and Z_r for every nonzero ring.
ZeroDivisorSets zero_divisor_sets(const FiniteRing &ring);

// Every (z, r) with z ∈ Z_ℓ, r ∈ Z_ℓ*, z + r = a, ascending by z. ZeroElement for a = 0.
std::vector<std::pair<Elem, Elem>> fusible_decompositions(const FiniteRing &ring, Elem a);

// Every nonzero element decomposes. Witness: first a without a decomposition.
PropertyReport is_left_fusible(const FiniteRing &ring);

// ab = 0 ⇔ aσ(b) = 0 for every family member and its inverse.
PropertyReport is_sigma_compatible_ring(const FiniteRing &ring, std::span<const RingAutomorphism> family);

// Sing(R_R) = {x | r(x) essential} equals {0}. The Sing set is in stats either way.
PropertyReport is_right_nonsingular(const RingPtr &ring, std::size_t cap = default_ring_cap);

// ℓ(I ∩ J) = ℓ(I) + ℓ(J) for all right ideals I, J.
PropertyReport is_IN(const RingPtr &ring, std::size_t cap = default_ring_cap);

// For all two-sided I, J some two-sided K has r(I) + r(J) = r(K).
PropertyReport is_SA(const RingPtr &ring, std::size_t cap = default_ring_cap);

inline constexpr std::uint64_t default_pair_cap = 40'000'000;

// Enumerates every pair of series with support inside the window and at most
// max_support terms. BoundsTooLarge when the pair count exceeds pair_cap.
PropertyReport is_G_armendariz(const TwistPtr &twist, std::size_t max_support, const std::vector<GroupElement> &window,
                               std::uint64_t pair_cap = default_pair_cap);

// All series with support inside the window and at most max_support terms, in
// enumeration order: support subsets by size then index, coefficients as an odometer.
std::vector<Series> enumerate_bounded_series(const TwistPtr &twist, const std::vector<GroupElement> &window,
                                             std::size_t max_support, std::uint64_t cap);

// (U:Y) for an arbitrary set Y.
ElementSet quotient_set(const FiniteRing &ring, const ElementSet &u, const ElementSet &y);

// NotApplicable when X ⊆ U, HypothesisFails (with the quotient) when (U:X) ≠ U,
// otherwise holds with the first minimal Y ⊆ X (by size, then lexicographic) with (U:Y) = U.
PropertyReport sigma_u_zip_witness(const IdealSet &u, const ElementSet &x,
                                   std::span<const RingAutomorphism> family = {});

inline constexpr std::size_t zip_profile_cap = 16;

// Exhaustive run over every subset X of a ring with at most 16 elements. Entry
// X (a bitmask) holds the minimal witness mask when X is inside the hypothesis.
struct ZipProfile {
    std::size_t universe = 0;
    std::vector<std::optional<std::uint32_t>> witness;

    std::size_t applicable() const noexcept;
    friend bool operator==(const ZipProfile &, const ZipProfile &) = default;
};

ElementSet mask_to_set(std::uint32_t mask, std::size_t universe);
std::uint32_t set_to_mask(const ElementSet &s);

ZipProfile sigma_u_zip_profile(const IdealSet &u);
// Coded straight from the definitions: r(X) = 0 ⇒ finite Y with r(Y) = 0,
// and N(X) ⊆ nil(R) ⇒ finite Y with N(Y) ⊆ nil(R).
ZipProfile right_zip_profile(const RingPtr &ring);
ZipProfile weak_zip_profile(const RingPtr &ring);

// Summary over the whole profile, with the subsets X ⊄ U where (U:X) ≠ U listed
// as hypothesis divergences in the certificate.
PropertyReport is_sigma_u_zip(const IdealSet &u);

nlohmann::json set_json(const ElementSet &s);
ElementSet set_from_json(const nlohmann::json &j, std::size_t universe);

} // namespace mn

#endif
