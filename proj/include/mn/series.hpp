#ifndef MN_SERIES_HPP
#define MN_SERIES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include <mn/twist.hpp>

namespace mn
{

// Finitely supported series over a twist system. Terms are kept sorted
// ascending by the group order, with no zero coefficients.
class Series
{
public:
    using Term = std::pair<GroupElement, Elem>;

    explicit Series(TwistPtr twist) : m_twist(std::move(twist)) {}

    // Drops zero coefficients; DuplicateKey on repeated exponents.
    static Series make(TwistPtr twist, std::vector<Term> pairs);

    const TwistPtr &twist() const noexcept
    {
        return m_twist;
    }
    const std::vector<Term> &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    std::size_t support_size() const noexcept
    {
        return m_terms.size();
    }

    Elem coeff(const GroupElement &x) const noexcept;
    std::vector<GroupElement> support() const;
    ElementSet content() const;
    // Every coefficient lies in s (the series belongs to s((G;σ;τ))).
    bool coefficients_in(const ElementSet &s) const noexcept;

    // Sorted [[exponent, coefficient_index], ...].
    nlohmann::json to_json() const;
    static Series from_json(TwistPtr twist, const nlohmann::json &j);
    std::string format() const;

    friend bool operator==(const Series &a, const Series &b)
    {
        return a.m_twist == b.m_twist && a.m_terms == b.m_terms;
    }

private:
    TwistPtr m_twist;
    std::vector<Term> m_terms;

    friend Series series_add(const Series &, const Series &);
    friend Series series_neg(const Series &);
    friend Series series_mul(const Series &, const Series &);
    friend Series single_term(TwistPtr, const GroupElement &, Elem);
};

Series single_term(TwistPtr twist, const GroupElement &x, Elem r);
// r·1̄; NotNormalized unless σ_1 = id and τ(1,·) = τ(·,1) = 1.
Series embed_scalar(TwistPtr twist, Elem r);

Series series_add(const Series &f, const Series &g);
Series series_neg(const Series &f);
Series series_sub(const Series &f, const Series &g);
// (Σ a_x x̄)(Σ b_y ȳ) = Σ_z (Σ_{xy=z} a_x σ_x(b_y) τ(x,y)) z̄
Series series_mul(const Series &f, const Series &g);

inline Series operator+(const Series &f, const Series &g)
{
    return series_add(f, g);
}
inline Series operator-(const Series &f, const Series &g)
{
    return series_sub(f, g);
}
inline Series operator*(const Series &f, const Series &g)
{
    return series_mul(f, g);
}

// X_w(f,g): pairs (x, y) with x ∈ supp f, y ∈ supp g, xy = w; ascending by x.
std::vector<std::pair<GroupElement, GroupElement>> x_w_pairs(const Series &f, const Series &g,
                                                             const GroupElement &w);

struct SupportStats {
    std::vector<GroupElement> support;
    GroupElement pi;  // ⪯-minimal support element
    Elem leading = 0; // f(pi)
    ElementSet content;
};

// ZeroSeries for the zero series.
SupportStats support_stats(const Series &f);

struct AssociativityReport {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::array<Series, 3>> witness;
};

AssociativityReport check_associativity(const std::vector<std::array<Series, 3>> &triples);
// Every triple of single-term series with exponents in the window and all nonzero coefficients.
AssociativityReport check_associativity_exhaustive(const TwistPtr &twist, const std::vector<GroupElement> &window);
// Seeded random triples, each support of size 1..max_support inside the window.
AssociativityReport check_associativity_sampled(const TwistPtr &twist, const std::vector<GroupElement> &window,
                                                std::size_t max_support, std::size_t count, std::uint64_t seed);

// Uniformly sized random series: support size in [min_support, max_support] drawn from the window,
// nonzero coefficients.
Series random_series(const TwistPtr &twist, const std::vector<GroupElement> &window, std::size_t min_support,
                     std::size_t max_support, std::mt19937_64 &rng);

} // namespace mn

#endif
