#ifndef MN_TESTS_SUPPORT_HPP
#define MN_TESTS_SUPPORT_HPP

#include <string>

#include <mn/fixture.hpp>

#include "oracle.hpp"

namespace support
{

inline mn::Fixture fixture(const std::string &name)
{
    return mn::load_fixture(std::string(MN_FIXTURE_DIR) + "/" + name + ".json");
}

inline oracle::Set to_set(const mn::ElementSet &s)
{
    oracle::Set out;
    s.for_each([&](mn::Elem e) { out.insert(e); });
    return out;
}

inline mn::ElementSet from_set(const oracle::Set &s, std::size_t universe)
{
    mn::ElementSet out(universe);
    for (int e : s) {
        out.insert(static_cast<mn::Elem>(e));
    }
    return out;
}

inline oracle::Series to_series(const mn::Series &f)
{
    oracle::Series out;
    for (const auto &[x, a] : f.terms()) {
        out[x.coords[0]] = a;
    }
    return out;
}

} // namespace support

#endif
