#ifndef MN_RING_HPP
#define MN_RING_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <mn/element_set.hpp>

namespace mn
{

inline constexpr std::size_t default_ring_cap = 256;

// A finite associative unital ring given by explicit operation tables over
// dense element ids. Construction does not check the axioms; use ring_make or
// check_ring_axioms for that.
class FiniteRing
{
public:
    FiniteRing(std::string label, std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
               std::vector<std::string> names = {});

    const std::string &label() const noexcept
    {
        return m_label;
    }
    std::size_t size() const noexcept
    {
        return m_size;
    }
    static constexpr Elem zero() noexcept
    {
        return 0;
    }
    Elem one() const noexcept
    {
        return m_one;
    }

    Elem add(Elem a, Elem b) const noexcept
    {
        return m_add[std::size_t{a} * m_size + b];
    }
    Elem mul(Elem a, Elem b) const noexcept
    {
        return m_mul[std::size_t{a} * m_size + b];
    }
    Elem neg(Elem a) const noexcept
    {
        return m_neg[a];
    }
    Elem sub(Elem a, Elem b) const noexcept
    {
        return add(a, neg(b));
    }
    Elem pow(Elem a, std::uint64_t n) const noexcept;

    // a*x for x = 0..size-1.
    std::span<const Elem> mul_row(Elem a) const noexcept
    {
        return {m_mul.data() + std::size_t{a} * m_size, m_size};
    }
    // x*b for x = 0..size-1.
    std::span<const Elem> mul_col(Elem b) const noexcept
    {
        return {m_mul_t.data() + std::size_t{b} * m_size, m_size};
    }
    std::span<const Elem> add_table() const noexcept
    {
        return m_add;
    }
    std::span<const Elem> mul_table() const noexcept
    {
        return m_mul;
    }

    const std::string &name(Elem e) const
    {
        return m_names.at(e);
    }
    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }
    std::optional<Elem> find(std::string_view name) const;

    // Ring with one table entry replaced; used for mutation testing.
    FiniteRing with_entry(bool mul_table, Elem a, Elem b, Elem value) const;

private:
    std::string m_label;
    std::size_t m_size;
    std::vector<Elem> m_add, m_mul, m_mul_t, m_neg;
    Elem m_one;
    std::vector<std::string> m_names;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingSpec {
    enum class Kind { zn, table, product, trivial_extension };

    Kind kind = Kind::zn;
    unsigned n = 0;                 // zn
    std::shared_ptr<const nlohmann::json> table; // table (the ring table document)
    std::vector<RingSpec> parts;    // product: two; trivial_extension: one

    static RingSpec zn(unsigned n);
    static RingSpec from_table(const nlohmann::json &doc);
    static RingSpec product(RingSpec a, RingSpec b);
    static RingSpec trivial_extension(RingSpec base);

    // {"kind": "Zn", "n": 4} | {"kind": "table", "path": ...} | inline table |
    // {"kind": "product", "left": .., "right": ..} | {"kind": "trivial_extension", "base": ..}
    static RingSpec from_json(const nlohmann::json &doc, const std::filesystem::path &base_dir = {});
};

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<Elem> witness; // failing tuple, empty on pass
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool ok() const noexcept;
    const AxiomCheck *first_failure() const noexcept;
};

// Exhaustive pair/triple scan of every ring axiom.
AxiomReport check_ring_axioms(const FiniteRing &ring);

// Builds and validates (AxiomViolation on failure, SizeCapExceeded beyond cap).
RingPtr ring_make(const RingSpec &spec, std::size_t cap = default_ring_cap);

RingPtr ring_zn(unsigned n);
RingPtr ring_product(const FiniteRing &a, const FiniteRing &b);
RingPtr ring_trivial_extension(const FiniteRing &base);
// Ring table file: {label, size, add, mul, one, names?}; zero is index 0.
RingPtr ring_from_table(const nlohmann::json &doc);
nlohmann::json ring_to_table(const FiniteRing &ring);

// Pair id for product and trivial-extension rings built from rings of size m.
inline Elem pair_id(Elem a, Elem b, std::size_t m) noexcept
{
    return static_cast<Elem>(std::size_t{a} * m + b);
}

ElementSet units(const FiniteRing &ring);
std::optional<Elem> inverse(const FiniteRing &ring, Elem u);
bool is_central(const FiniteRing &ring, Elem a);

// An automorphism as a permutation of element ids.
class RingAutomorphism
{
public:
    RingAutomorphism(RingPtr ring, std::vector<Elem> map) : m_ring(std::move(ring)), m_map(std::move(map)) {}

    static RingAutomorphism identity(RingPtr ring);

    Elem operator()(Elem e) const noexcept
    {
        return m_map[e];
    }
    const RingPtr &ring() const noexcept
    {
        return m_ring;
    }
    const std::vector<Elem> &map() const noexcept
    {
        return m_map;
    }
    bool is_identity() const noexcept;

    friend bool operator==(const RingAutomorphism &a, const RingAutomorphism &b)
    {
        return a.m_ring == b.m_ring && a.m_map == b.m_map;
    }

private:
    RingPtr m_ring;
    std::vector<Elem> m_map;
};

struct AutomorphismDefect {
    std::string reason; // "not_bijective", "additive", "multiplicative", "zero", "one"
    Elem a = 0;
    Elem b = 0;
};

std::optional<AutomorphismDefect> find_automorphism_defect(const FiniteRing &ring, std::span<const Elem> map);

// NotAutomorphism (with the witnessing pair in the message) on failure.
RingAutomorphism check_automorphism(RingPtr ring, std::vector<Elem> map);

// (a ∘ b)(x) = a(b(x)). RingMismatch for different rings.
RingAutomorphism compose(const RingAutomorphism &a, const RingAutomorphism &b);
RingAutomorphism inverse(const RingAutomorphism &a);
RingAutomorphism power(const RingAutomorphism &a, std::int64_t n);
std::size_t order(const RingAutomorphism &a);

} // namespace mn

#endif
