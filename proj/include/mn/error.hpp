#ifndef MN_ERROR_HPP
#define MN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mn
{

enum class ErrorKind {
    malformed_spec,
    axiom_violation,
    not_automorphism,
    ring_mismatch,
    size_cap_exceeded,
    duplicate_key,
    not_normalized,
    twist_mismatch,
    zero_series,
    zero_element,
    bounds_too_large,
    not_fusible_ring,
    not_sigma_compatible,
    no_k,
    precondition_fail,
    trace_mismatch,
    parse_error,
    validation_error,
    suite_unknown,
    overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), m_kind(kind) {}

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what)
{
    throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

} // namespace mn

#endif
