#include <algorithm>

#include <mn/kernels.hpp>

namespace mn::kernels
{

namespace
{

void eq_mask_scalar(const Elem *row, std::size_t n, Elem value, std::uint64_t *out)
{
    std::fill(out, out + (n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (row[i] == value) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

void member_mask_scalar(const Elem *row, std::size_t n, const std::uint64_t *set, std::uint64_t *out)
{
    std::fill(out, out + (n + 63) / 64, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem e = row[i];
        if ((set[e >> 6] >> (e & 63)) & 1u) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

std::size_t count_eq_scalar(const Elem *row, std::size_t n, Elem value)
{
    return static_cast<std::size_t>(std::count(row, row + n, value));
}

} // namespace

const KernelTable &scalar_table() noexcept
{
    static const KernelTable table{eq_mask_scalar, member_mask_scalar, count_eq_scalar};
    return table;
}

} // namespace mn::kernels
