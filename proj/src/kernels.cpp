#include <atomic>
#include <cstdlib>

#include <mn/kernels.hpp>

namespace mn::kernels
{

#if !defined(MN_HAVE_AVX2)
const KernelTable *avx2_table() noexcept
{
    return nullptr;
}
#endif

bool avx2_supported() noexcept
{
#if defined(MN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace
{

Backend initial_backend() noexcept
{
    if (std::getenv("MN_FORCE_SCALAR") != nullptr) {
        return Backend::scalar;
    }
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend> &backend_slot() noexcept
{
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

} // namespace

Backend active_backend() noexcept
{
    return backend_slot().load(std::memory_order_relaxed);
}

Backend set_backend(Backend b) noexcept
{
    if (b == Backend::avx2 && !avx2_supported()) {
        b = Backend::scalar;
    }
    backend_slot().store(b, std::memory_order_relaxed);
    return b;
}

std::string_view backend_name(Backend b) noexcept
{
    return b == Backend::avx2 ? "avx2" : "scalar";
}

const KernelTable &active() noexcept
{
    if (active_backend() == Backend::avx2) {
        return *avx2_table();
    }
    return scalar_table();
}

ElementSet eq_set(std::span<const Elem> row, Elem value)
{
    ElementSet out(row.size());
    active().eq_mask(row.data(), row.size(), value, out.words().data());
    return out;
}

ElementSet member_set(std::span<const Elem> row, const ElementSet &set)
{
    ElementSet out(row.size());
    active().member_mask(row.data(), row.size(), set.words().data(), out.words().data());
    return out;
}

std::size_t count_eq(std::span<const Elem> row, Elem value)
{
    return active().count_eq(row.data(), row.size(), value);
}

} // namespace mn::kernels
