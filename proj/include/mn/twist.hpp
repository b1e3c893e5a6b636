#ifndef MN_TWIST_HPP
#define MN_TWIST_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <mn/group.hpp>
#include <mn/ring.hpp>

namespace mn
{

// τ as an evaluable rule: constant one, or u^{e(x,y)} for a central unit u
// and bilinear e(x,y) = xᵀ M y, with optional pointwise overrides.
struct TauRule {
    enum class Kind { one, unit_power };

    Kind kind = Kind::one;
    Elem unit = 0;
    std::vector<std::vector<std::int64_t>> exponent_matrix;
    std::map<std::pair<GroupElement, GroupElement>, Elem> overrides;
};

// The pair (σ, τ) over a ring and an ordered group. σ is generated by one
// automorphism per group generator: σ_x = φ_1^{x_1} ∘ ... ∘ φ_k^{x_k}.
class TwistSystem
{
public:
    TwistSystem(RingPtr ring, OrderedGroup group, std::vector<RingAutomorphism> generators, TauRule tau_rule);

    static std::shared_ptr<const TwistSystem> trivial(RingPtr ring, OrderedGroup group);
    // {"sigma": {"generator": perm | "identity"} or {"generators": [...]},
    //  "tau": {"kind": "one" | "unit_power", "unit": i, "exponent_rule": "product" | matrix, "overrides": [[x,y,v],...]}}
    static std::shared_ptr<const TwistSystem> from_json(const nlohmann::json &doc, RingPtr ring, OrderedGroup group);
    nlohmann::json to_json() const;

    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const OrderedGroup &group() const noexcept
    {
        return m_group;
    }
    const std::vector<RingAutomorphism> &generators() const noexcept
    {
        return m_generators;
    }
    const TauRule &tau_rule() const noexcept
    {
        return m_tau;
    }

    Elem sigma(const GroupElement &x, Elem r) const;
    RingAutomorphism sigma_map(const GroupElement &x) const;
    Elem tau(const GroupElement &x, const GroupElement &y) const;

    // σ_1 = id and τ(1,x) = τ(x,1) = 1 on the validation window [-4,4]^k.
    bool normalized() const noexcept
    {
        return m_normalized;
    }
    bool trivial_sigma() const noexcept;
    bool trivial_tau() const noexcept
    {
        return m_tau.kind == TauRule::Kind::one && m_tau.overrides.empty();
    }

private:
    std::int64_t tau_exponent(const GroupElement &x, const GroupElement &y) const;

    RingPtr m_ring;
    OrderedGroup m_group;
    std::vector<RingAutomorphism> m_generators;
    std::vector<std::vector<std::vector<Elem>>> m_powers; // [generator][exponent mod order] -> map
    TauRule m_tau;
    std::vector<Elem> m_unit_powers; // u^0 .. u^{ord-1}
    bool m_normalized = false;
};

using TwistPtr = std::shared_ptr<const TwistSystem>;

struct TwistCondition {
    std::string name;
    bool pass = true;
    std::optional<std::vector<GroupElement>> witness; // (x,y,z) or (y,z)
    std::optional<Elem> element;                      // ring element r for the σ conditions
};

struct TwistReport {
    std::vector<TwistCondition> conditions;

    const TwistCondition &get(const std::string &name) const;
    nlohmann::json to_json(const OrderedGroup &group) const;
};

// Evaluates on all triples of the window:
//   literal_i         τ(xy,z)σ_x(τ(x,y)) = τ(x,yz)τ(y,z)
//   standard_cocycle  τ(x,y)τ(xy,z) = σ_x(τ(y,z))τ(x,yz)
//   ii_conj_u_r_uinv  σ_yσ_z = σ_{yz}∘η, η(r) = u r u⁻¹, u = τ(y,z)
//   ii_conj_uinv_r_u  σ_yσ_z = σ_{yz}∘η, η(r) = u⁻¹ r u
//   normalized        σ_1 = id, τ(1,x) = τ(x,1) = 1
TwistReport check_twist_conditions(const TwistSystem &twist, const std::vector<GroupElement> &window);

} // namespace mn

#endif
