#include <mn/group.hpp>

#include <limits>

#include <mn/error.hpp>

namespace mn
{

OrderedGroup OrderedGroup::z()
{
    return OrderedGroup(Kind::z, 1);
}

OrderedGroup OrderedGroup::zk_lex(std::size_t k)
{
    if (k < 1 || k > max_group_rank) {
        fail(ErrorKind::malformed_spec, "Z^k_lex needs 1 <= k <= " + std::to_string(max_group_rank));
    }
    return OrderedGroup(Kind::zk_lex, k);
}

OrderedGroup OrderedGroup::from_json(const nlohmann::json &doc)
{
    if (!doc.is_object() || !doc.contains("group") || !doc.at("group").is_string()) {
        fail(ErrorKind::malformed_spec, "group spec needs a \"group\" string");
    }
    const auto g = doc.at("group").get<std::string>();
    if (g == "Z") {
        return z();
    }
    if (g == "Z^k_lex") {
        if (!doc.contains("k") || !doc.at("k").is_number_integer()) {
            fail(ErrorKind::malformed_spec, "Z^k_lex needs integer k");
        }
        const auto k = doc.at("k").get<long long>();
        if (k < 1) {
            fail(ErrorKind::malformed_spec, "Z^k_lex needs k >= 1");
        }
        return zk_lex(static_cast<std::size_t>(k));
    }
    fail(ErrorKind::malformed_spec, "unknown group '" + g + "'");
}

nlohmann::json OrderedGroup::to_json() const
{
    if (m_kind == Kind::z) {
        return {{"group", "Z"}};
    }
    return {{"group", "Z^k_lex"}, {"k", m_rank}};
}

std::string OrderedGroup::name() const
{
    return m_kind == Kind::z ? "Z" : "Z^" + std::to_string(m_rank) + "_lex";
}

namespace
{

std::int32_t narrow(std::int64_t v)
{
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max()) {
        fail(ErrorKind::overflow, "group coordinate " + std::to_string(v) + " out of range");
    }
    return static_cast<std::int32_t>(v);
}

} // namespace

GroupElement OrderedGroup::element(std::int64_t x) const
{
    if (m_rank != 1) {
        fail(ErrorKind::malformed_spec, "scalar element for a rank-" + std::to_string(m_rank) + " group");
    }
    GroupElement e;
    e.coords[0] = narrow(x);
    return e;
}

GroupElement OrderedGroup::element(const std::vector<std::int64_t> &coords) const
{
    if (coords.size() != m_rank) {
        fail(ErrorKind::malformed_spec, "element needs " + std::to_string(m_rank) + " coordinates");
    }
    GroupElement e;
    for (std::size_t i = 0; i < m_rank; ++i) {
        e.coords[i] = narrow(coords[i]);
    }
    return e;
}

GroupElement OrderedGroup::op(const GroupElement &x, const GroupElement &y) const
{
    GroupElement out;
    for (std::size_t i = 0; i < m_rank; ++i) {
        if (__builtin_add_overflow(x.coords[i], y.coords[i], &out.coords[i])) {
            fail(ErrorKind::overflow, "group operation overflow");
        }
    }
    return out;
}

GroupElement OrderedGroup::inverse(const GroupElement &x) const
{
    GroupElement out;
    for (std::size_t i = 0; i < m_rank; ++i) {
        if (x.coords[i] == std::numeric_limits<std::int32_t>::min()) {
            fail(ErrorKind::overflow, "group inverse overflow");
        }
        out.coords[i] = -x.coords[i];
    }
    return out;
}

std::vector<GroupElement> OrderedGroup::window(std::int32_t lo, std::int32_t hi) const
{
    std::vector<GroupElement> out;
    if (lo > hi) {
        return out;
    }
    GroupElement cur;
    for (std::size_t i = 0; i < m_rank; ++i) {
        cur.coords[i] = lo;
    }
    // Odometer in lexicographic order, last coordinate fastest.
    while (true) {
        out.push_back(cur);
        std::size_t i = m_rank;
        while (i > 0) {
            --i;
            if (cur.coords[i] < hi) {
                ++cur.coords[i];
                break;
            }
            cur.coords[i] = lo;
            if (i == 0) {
                return out;
            }
        }
    }
}

nlohmann::json OrderedGroup::element_to_json(const GroupElement &x) const
{
    if (m_kind == Kind::z) {
        return x.coords[0];
    }
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < m_rank; ++i) {
        arr.push_back(x.coords[i]);
    }
    return arr;
}

GroupElement OrderedGroup::element_from_json(const nlohmann::json &j) const
{
    if (j.is_number_integer()) {
        return element(j.get<std::int64_t>());
    }
    if (j.is_array()) {
        return element(j.get<std::vector<std::int64_t>>());
    }
    fail(ErrorKind::malformed_spec, "group element must be an integer or integer array");
}

std::string OrderedGroup::format(const GroupElement &x) const
{
    if (m_rank == 1) {
        return std::to_string(x.coords[0]);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < m_rank; ++i) {
        s += (i ? "," : "") + std::to_string(x.coords[i]);
    }
    return s + ")";
}

} // namespace mn
