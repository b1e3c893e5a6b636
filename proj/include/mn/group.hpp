#ifndef MN_GROUP_HPP
#define MN_GROUP_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mn
{

inline constexpr std::size_t max_group_rank = 4;

// Element of Z or Z^k. Unused trailing coordinates stay zero, so the
// lexicographic order on the full array is the group order for every kind.
struct GroupElement {
    std::array<std::int32_t, max_group_rank> coords{};

    friend auto operator<=>(const GroupElement &, const GroupElement &) = default;
    friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

// Bi-invariant totally ordered abelian group: Z (natural order) or Z^k (lex).
class OrderedGroup
{
public:
    enum class Kind { z, zk_lex };

    static OrderedGroup z();
    static OrderedGroup zk_lex(std::size_t k);
    // {"group": "Z"} or {"group": "Z^k_lex", "k": 2}
    static OrderedGroup from_json(const nlohmann::json &doc);
    nlohmann::json to_json() const;

    Kind kind() const noexcept
    {
        return m_kind;
    }
    std::size_t rank() const noexcept
    {
        return m_rank;
    }
    std::string name() const;

    GroupElement identity() const noexcept
    {
        return {};
    }
    GroupElement element(std::int64_t x) const; // rank 1 only
    GroupElement element(const std::vector<std::int64_t> &coords) const;

    // Componentwise sum; Overflow on coordinate overflow.
    GroupElement op(const GroupElement &x, const GroupElement &y) const;
    GroupElement inverse(const GroupElement &x) const;
    std::strong_ordering compare(const GroupElement &x, const GroupElement &y) const noexcept
    {
        return x <=> y;
    }

    // All elements with every coordinate in [lo, hi], ascending.
    std::vector<GroupElement> window(std::int32_t lo, std::int32_t hi) const;

    nlohmann::json element_to_json(const GroupElement &x) const;
    GroupElement element_from_json(const nlohmann::json &j) const;
    std::string format(const GroupElement &x) const;

    friend bool operator==(const OrderedGroup &, const OrderedGroup &) = default;

private:
    OrderedGroup(Kind kind, std::size_t rank) : m_kind(kind), m_rank(rank) {}

    Kind m_kind;
    std::size_t m_rank;
};

} // namespace mn

#endif
