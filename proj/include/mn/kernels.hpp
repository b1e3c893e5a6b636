#ifndef MN_KERNELS_HPP
#define MN_KERNELS_HPP

// Row-scan kernels over operation-table rows. Every table-driven set
// computation (annihilators, quotients, zero-divisor scans) bottoms out in
// one of these. A scalar reference implementation is always present; an
// AVX2 variant is selected at runtime when the CPU supports it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include <mn/element_set.hpp>

namespace mn::kernels
{

enum class Backend { scalar, avx2 };

struct KernelTable {
    // out[i/64] bit i%64 = (row[i] == value). Overwrites ceil(n/64) words.
    void (*eq_mask)(const Elem *row, std::size_t n, Elem value, std::uint64_t *out);
    // out bit i = set contains row[i]. `set` must cover every value in row.
    void (*member_mask)(const Elem *row, std::size_t n, const std::uint64_t *set, std::uint64_t *out);
    std::size_t (*count_eq)(const Elem *row, std::size_t n, Elem value);
};

const KernelTable &scalar_table() noexcept;
// nullptr when the AVX2 variant was not compiled in.
const KernelTable *avx2_table() noexcept;

bool avx2_supported() noexcept;

// Active backend; defaults to AVX2 when supported, unless MN_FORCE_SCALAR is set.
Backend active_backend() noexcept;
// Falls back to scalar when AVX2 is requested but unavailable; returns the backend in force.
Backend set_backend(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

const KernelTable &active() noexcept;

// Set-valued wrappers.
ElementSet eq_set(std::span<const Elem> row, Elem value);
ElementSet member_set(std::span<const Elem> row, const ElementSet &set);
std::size_t count_eq(std::span<const Elem> row, Elem value);

} // namespace mn::kernels

#endif
