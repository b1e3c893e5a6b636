// Compiled with -mavx2; only reached after a runtime CPU check.

#include <algorithm>
#include <bit>

#include <immintrin.h>

#include <mn/kernels.hpp>

namespace mn::kernels
{

namespace
{

inline void set_bits(std::uint64_t *out, std::size_t pos, std::uint64_t bits)
{
    // Chunks are 8 or 32 wide and start at multiples of their width, so they never straddle a word.
    out[pos >> 6] |= bits << (pos & 63);
}

void eq_mask_avx2(const Elem *row, std::size_t n, Elem value, std::uint64_t *out)
{
    std::fill(out, out + (n + 63) / 64, 0);
    const __m256i needle = _mm256_set1_epi16(static_cast<short>(value));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + i + 16));
        const __m256i ca = _mm256_cmpeq_epi16(a, needle);
        const __m256i cb = _mm256_cmpeq_epi16(b, needle);
        // packs interleaves 128-bit lanes; permute restores element order.
        const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(ca, cb), 0xD8);
        const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
        set_bits(out, i, bits);
    }
    for (; i < n; ++i) {
        if (row[i] == value) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

void member_mask_avx2(const Elem *row, std::size_t n, const std::uint64_t *set, std::uint64_t *out)
{
    std::fill(out, out + (n + 63) / 64, 0);
    const auto *words32 = reinterpret_cast<const int *>(set);
    const __m256i low5 = _mm256_set1_epi32(31);
    const __m256i one = _mm256_set1_epi32(1);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i *>(row + i));
        const __m256i idx = _mm256_cvtepu16_epi32(raw);
        const __m256i word = _mm256_srli_epi32(idx, 5);
        const __m256i gathered = _mm256_i32gather_epi32(words32, word, 4);
        const __m256i bit = _mm256_and_si256(_mm256_srlv_epi32(gathered, _mm256_and_si256(idx, low5)), one);
        const auto bits = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_slli_epi32(bit, 31))));
        set_bits(out, i, bits);
    }
    for (; i < n; ++i) {
        const Elem e = row[i];
        if ((set[e >> 6] >> (e & 63)) & 1u) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

std::size_t count_eq_avx2(const Elem *row, std::size_t n, Elem value)
{
    const __m256i needle = _mm256_set1_epi16(static_cast<short>(value));
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(row + i));
        const auto bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(a, needle)));
        total += static_cast<std::size_t>(std::popcount(bits)) / 2;
    }
    for (; i < n; ++i) {
        total += row[i] == value;
    }
    return total;
}

} // namespace

const KernelTable *avx2_table() noexcept
{
    static const KernelTable table{eq_mask_avx2, member_mask_avx2, count_eq_avx2};
    return &table;
}

} // namespace mn::kernels
