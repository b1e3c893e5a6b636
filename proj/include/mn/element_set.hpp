#ifndef MN_ELEMENT_SET_HPP
#define MN_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mn
{

// Element ids of a finite ring are dense in [0, size); zero is always id 0.
using Elem = std::uint16_t;

// Fixed-universe bitset over element ids.
class ElementSet
{
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : m_universe(universe), m_words((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Elem> members);
    ElementSet(std::size_t universe, std::span<const Elem> members);

    static ElementSet full(std::size_t universe);

    std::size_t universe() const noexcept
    {
        return m_universe;
    }
    bool contains(Elem e) const noexcept
    {
        return e < m_universe && ((m_words[e >> 6] >> (e & 63)) & 1u) != 0;
    }
    void insert(Elem e) noexcept
    {
        m_words[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    void erase(Elem e) noexcept
    {
        m_words[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
    }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    bool is_full() const noexcept
    {
        return count() == m_universe;
    }
    bool subset_of(const ElementSet &other) const noexcept;
    bool intersects(const ElementSet &other) const noexcept;

    ElementSet &operator&=(const ElementSet &other) noexcept;
    ElementSet &operator|=(const ElementSet &other) noexcept;
    ElementSet operator~() const;

    friend ElementSet operator&(ElementSet a, const ElementSet &b) noexcept
    {
        return a &= b;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet &b) noexcept
    {
        return a |= b;
    }
    friend bool operator==(const ElementSet &, const ElementSet &) = default;

    // Ascending member ids.
    std::vector<Elem> members() const;

    // Smallest member, or universe() when empty.
    std::size_t first() const noexcept;

    std::span<std::uint64_t> words() noexcept
    {
        return m_words;
    }
    std::span<const std::uint64_t> words() const noexcept
    {
        return m_words;
    }

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t w = 0; w < m_words.size(); ++w) {
            auto bits = m_words[w];
            while (bits != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(static_cast<Elem>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

private:
    void trim() noexcept;

    std::size_t m_universe = 0;
    std::vector<std::uint64_t> m_words;
};

// Order used everywhere sets are listed: by size, then lexicographic on sorted members.
bool size_lex_less(const ElementSet &a, const ElementSet &b);

} // namespace mn

#endif
