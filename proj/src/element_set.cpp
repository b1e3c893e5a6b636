#include <mn/element_set.hpp>

#include <algorithm>

namespace mn
{

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Elem> members) : ElementSet(universe)
{
    for (auto e : members) {
        insert(e);
    }
}

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members) : ElementSet(universe)
{
    for (auto e : members) {
        insert(e);
    }
}

ElementSet ElementSet::full(std::size_t universe)
{
    ElementSet s(universe);
    std::fill(s.m_words.begin(), s.m_words.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

void ElementSet::trim() noexcept
{
    if (const auto rem = m_universe % 64; rem != 0 && !m_words.empty()) {
        m_words.back() &= (std::uint64_t{1} << rem) - 1;
    }
}

std::size_t ElementSet::count() const noexcept
{
    std::size_t n = 0;
    for (auto w : m_words) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

bool ElementSet::empty() const noexcept
{
    return std::all_of(m_words.begin(), m_words.end(), [](auto w) { return w == 0; });
}

bool ElementSet::subset_of(const ElementSet &other) const noexcept
{
    for (std::size_t i = 0; i < m_words.size(); ++i) {
        if ((m_words[i] & ~other.m_words[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool ElementSet::intersects(const ElementSet &other) const noexcept
{
    for (std::size_t i = 0; i < m_words.size(); ++i) {
        if ((m_words[i] & other.m_words[i]) != 0) {
            return true;
        }
    }
    return false;
}

ElementSet &ElementSet::operator&=(const ElementSet &other) noexcept
{
    for (std::size_t i = 0; i < m_words.size(); ++i) {
        m_words[i] &= other.m_words[i];
    }
    return *this;
}

ElementSet &ElementSet::operator|=(const ElementSet &other) noexcept
{
    for (std::size_t i = 0; i < m_words.size(); ++i) {
        m_words[i] |= other.m_words[i];
    }
    return *this;
}

ElementSet ElementSet::operator~() const
{
    ElementSet s(*this);
    for (auto &w : s.m_words) {
        w = ~w;
    }
    s.trim();
    return s;
}

std::vector<Elem> ElementSet::members() const
{
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
}

std::size_t ElementSet::first() const noexcept
{
    for (std::size_t w = 0; w < m_words.size(); ++w) {
        if (m_words[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(m_words[w]));
        }
    }
    return m_universe;
}

bool size_lex_less(const ElementSet &a, const ElementSet &b)
{
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) {
        return ca < cb;
    }
    return a.members() < b.members();
}

} // namespace mn
