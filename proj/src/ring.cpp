#include <mn/ring.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <mn/error.hpp>

namespace mn
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::malformed_spec:
            return "MalformedSpec";
        case ErrorKind::axiom_violation:
            return "AxiomViolation";
        case ErrorKind::not_automorphism:
            return "NotAutomorphism";
        case ErrorKind::ring_mismatch:
            return "RingMismatch";
        case ErrorKind::size_cap_exceeded:
            return "SizeCapExceeded";
        case ErrorKind::duplicate_key:
            return "DuplicateKey";
        case ErrorKind::not_normalized:
            return "NotNormalized";
        case ErrorKind::twist_mismatch:
            return "TwistMismatch";
        case ErrorKind::zero_series:
            return "ZeroSeries";
        case ErrorKind::zero_element:
            return "ZeroElement";
        case ErrorKind::bounds_too_large:
            return "BoundsTooLarge";
        case ErrorKind::not_fusible_ring:
            return "NotFusibleRing";
        case ErrorKind::not_sigma_compatible:
            return "NotSigmaCompatible";
        case ErrorKind::no_k:
            return "NoK";
        case ErrorKind::precondition_fail:
            return "PreconditionFail";
        case ErrorKind::trace_mismatch:
            return "TraceMismatch";
        case ErrorKind::parse_error:
            return "ParseError";
        case ErrorKind::validation_error:
            return "ValidationError";
        case ErrorKind::suite_unknown:
            return "SuiteUnknown";
        case ErrorKind::overflow:
            return "Overflow";
    }
    return "Error";
}

FiniteRing::FiniteRing(std::string label, std::size_t size, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
                       std::vector<std::string> names)
    : m_label(std::move(label)), m_size(size), m_add(std::move(add)), m_mul(std::move(mul)), m_one(one),
      m_names(std::move(names))
{
    if (m_size == 0 || m_add.size() != m_size * m_size || m_mul.size() != m_size * m_size) {
        fail(ErrorKind::malformed_spec, "ring '" + m_label + "': tables must be size x size");
    }
    if (m_size > std::size_t{1} << 16) {
        fail(ErrorKind::size_cap_exceeded, "ring '" + m_label + "': element ids are 16-bit");
    }
    for (auto v : m_add) {
        if (v >= m_size) {
            fail(ErrorKind::malformed_spec, "ring '" + m_label + "': add table entry out of range");
        }
    }
    for (auto v : m_mul) {
        if (v >= m_size) {
            fail(ErrorKind::malformed_spec, "ring '" + m_label + "': mul table entry out of range");
        }
    }
    if (m_one >= m_size) {
        fail(ErrorKind::malformed_spec, "ring '" + m_label + "': one out of range");
    }
    m_mul_t.resize(m_mul.size());
    for (std::size_t a = 0; a < m_size; ++a) {
        for (std::size_t b = 0; b < m_size; ++b) {
            m_mul_t[b * m_size + a] = m_mul[a * m_size + b];
        }
    }
    // neg(a) is the first b with a + b = 0; stays 0 when the add table has no inverse.
    m_neg.assign(m_size, 0);
    for (std::size_t a = 0; a < m_size; ++a) {
        for (std::size_t b = 0; b < m_size; ++b) {
            if (m_add[a * m_size + b] == 0) {
                m_neg[a] = static_cast<Elem>(b);
                break;
            }
        }
    }
    if (m_names.empty()) {
        m_names.reserve(m_size);
        for (std::size_t i = 0; i < m_size; ++i) {
            m_names.push_back(std::to_string(i));
        }
    } else if (m_names.size() != m_size) {
        fail(ErrorKind::malformed_spec, "ring '" + m_label + "': names must list every element");
    }
}

Elem FiniteRing::pow(Elem a, std::uint64_t n) const noexcept
{
    Elem result = m_one;
    Elem base = a;
    while (n != 0) {
        if (n & 1u) {
            result = mul(result, base);
        }
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

std::optional<Elem> FiniteRing::find(std::string_view name) const
{
    const auto it = std::find(m_names.begin(), m_names.end(), name);
    if (it == m_names.end()) {
        return std::nullopt;
    }
    return static_cast<Elem>(it - m_names.begin());
}

FiniteRing FiniteRing::with_entry(bool mul_table, Elem a, Elem b, Elem value) const
{
    auto add = m_add;
    auto mul = m_mul;
    (mul_table ? mul : add)[std::size_t{a} * m_size + b] = value;
    return FiniteRing(m_label + "~mutated", m_size, std::move(add), std::move(mul), m_one, m_names);
}

bool AxiomReport::ok() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.pass; });
}

const AxiomCheck *AxiomReport::first_failure() const noexcept
{
    for (const auto &c : checks) {
        if (!c.pass) {
            return &c;
        }
    }
    return nullptr;
}

namespace
{

// Runs pred over all tuples of the given arity in lexicographic order and
// records the first failing tuple.
template <std::size_t Arity, typename Pred>
AxiomCheck scan(std::string name, std::size_t n, Pred pred)
{
    AxiomCheck check{std::move(name), true, {}};
    if constexpr (Arity == 1) {
        for (std::size_t a = 0; a < n; ++a) {
            if (!pred(Elem(a))) {
                check.pass = false;
                check.witness = {Elem(a)};
                return check;
            }
        }
    } else if constexpr (Arity == 2) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (!pred(Elem(a), Elem(b))) {
                    check.pass = false;
                    check.witness = {Elem(a), Elem(b)};
                    return check;
                }
            }
        }
    } else {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (!pred(Elem(a), Elem(b), Elem(c))) {
                        check.pass = false;
                        check.witness = {Elem(a), Elem(b), Elem(c)};
                        return check;
                    }
                }
            }
        }
    }
    return check;
}

} // namespace

AxiomReport check_ring_axioms(const FiniteRing &r)
{
    const auto n = r.size();
    AxiomReport report;
    auto &out = report.checks;
    out.push_back(AxiomCheck{"one_nonzero", r.one() != r.zero(), {}});
    out.push_back(scan<3>("add_associative", n, [&](Elem a, Elem b, Elem c) {
        return r.add(r.add(a, b), c) == r.add(a, r.add(b, c));
    }));
    out.push_back(scan<2>("add_commutative", n, [&](Elem a, Elem b) { return r.add(a, b) == r.add(b, a); }));
    out.push_back(scan<1>("add_identity", n, [&](Elem a) { return r.add(a, 0) == a && r.add(0, a) == a; }));
    out.push_back(scan<1>("add_inverse", n, [&](Elem a) { return r.add(a, r.neg(a)) == 0; }));
    out.push_back(scan<3>("mul_associative", n, [&](Elem a, Elem b, Elem c) {
        return r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c));
    }));
    out.push_back(
        scan<1>("mul_identity", n, [&](Elem a) { return r.mul(a, r.one()) == a && r.mul(r.one(), a) == a; }));
    out.push_back(scan<3>("left_distributive", n, [&](Elem a, Elem b, Elem c) {
        return r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c));
    }));
    out.push_back(scan<3>("right_distributive", n, [&](Elem a, Elem b, Elem c) {
        return r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
    }));
    return report;
}

RingPtr ring_zn(unsigned n)
{
    if (n < 2) {
        fail(ErrorKind::malformed_spec, "Zn requires n >= 2");
    }
    std::vector<Elem> add(std::size_t{n} * n), mul(std::size_t{n} * n);
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    }
    return std::make_shared<FiniteRing>("Z" + std::to_string(n), n, std::move(add), std::move(mul), static_cast<Elem>(1 % n));
}

namespace
{

std::string pair_name(const FiniteRing &a, Elem x, const FiniteRing &b, Elem y)
{
    return "(" + a.name(x) + "," + b.name(y) + ")";
}

} // namespace

RingPtr ring_product(const FiniteRing &a, const FiniteRing &b)
{
    const auto na = a.size(), nb = b.size(), n = na * nb;
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto xa = Elem(x / nb), xb = Elem(x % nb);
        names[x] = pair_name(a, xa, b, xb);
        for (std::size_t y = 0; y < n; ++y) {
            const auto ya = Elem(y / nb), yb = Elem(y % nb);
            add[x * n + y] = pair_id(a.add(xa, ya), b.add(xb, yb), nb);
            mul[x * n + y] = pair_id(a.mul(xa, ya), b.mul(xb, yb), nb);
        }
    }
    return std::make_shared<FiniteRing>(a.label() + "x" + b.label(), n, std::move(add), std::move(mul),
                                        pair_id(a.one(), b.one(), nb), std::move(names));
}

RingPtr ring_trivial_extension(const FiniteRing &r)
{
    const auto m = r.size(), n = m * m;
    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto a = Elem(x / m), b = Elem(x % m);
        names[x] = pair_name(r, a, r, b);
        for (std::size_t y = 0; y < n; ++y) {
            const auto c = Elem(y / m), d = Elem(y % m);
            add[x * n + y] = pair_id(r.add(a, c), r.add(b, d), m);
            // (a,b)(c,d) = (ac, ad + bc)
            mul[x * n + y] = pair_id(r.mul(a, c), r.add(r.mul(a, d), r.mul(b, c)), m);
        }
    }
    return std::make_shared<FiniteRing>("T(" + r.label() + ")", n, std::move(add), std::move(mul),
                                        pair_id(r.one(), 0, m), std::move(names));
}

RingPtr ring_from_table(const nlohmann::json &doc)
{
    try {
        const auto size = doc.at("size").get<std::size_t>();
        const auto label = doc.value("label", std::string("table"));
        auto flatten = [&](const char *key) {
            const auto &rows = doc.at(key);
            if (!rows.is_array() || rows.size() != size) {
                fail(ErrorKind::malformed_spec, std::string("table '") + label + "': " + key + " needs " +
                                                    std::to_string(size) + " rows");
            }
            std::vector<Elem> flat;
            flat.reserve(size * size);
            for (const auto &row : rows) {
                if (!row.is_array() || row.size() != size) {
                    fail(ErrorKind::malformed_spec, std::string("table '") + label + "': short row in " + key);
                }
                for (const auto &v : row) {
                    flat.push_back(v.get<Elem>());
                }
            }
            return flat;
        };
        auto add = flatten("add");
        auto mul = flatten("mul");
        std::vector<std::string> names;
        if (doc.contains("names")) {
            names = doc.at("names").get<std::vector<std::string>>();
        }
        return std::make_shared<FiniteRing>(label, size, std::move(add), std::move(mul), doc.at("one").get<Elem>(),
                                            std::move(names));
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::malformed_spec, std::string("ring table: ") + e.what());
    }
}

nlohmann::json ring_to_table(const FiniteRing &ring)
{
    const auto n = ring.size();
    nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
    for (std::size_t a = 0; a < n; ++a) {
        nlohmann::json ar = nlohmann::json::array(), mr = nlohmann::json::array();
        for (std::size_t b = 0; b < n; ++b) {
            ar.push_back(ring.add(Elem(a), Elem(b)));
            mr.push_back(ring.mul(Elem(a), Elem(b)));
        }
        add.push_back(std::move(ar));
        mul.push_back(std::move(mr));
    }
    return {{"label", ring.label()}, {"size", n}, {"add", add}, {"mul", mul}, {"one", ring.one()},
            {"names", ring.names()}};
}

RingSpec RingSpec::zn(unsigned n)
{
    RingSpec s;
    s.kind = Kind::zn;
    s.n = n;
    return s;
}

RingSpec RingSpec::from_table(const nlohmann::json &doc)
{
    RingSpec s;
    s.kind = Kind::table;
    s.table = std::make_shared<const nlohmann::json>(doc);
    return s;
}

RingSpec RingSpec::product(RingSpec a, RingSpec b)
{
    RingSpec s;
    s.kind = Kind::product;
    s.parts = {std::move(a), std::move(b)};
    return s;
}

RingSpec RingSpec::trivial_extension(RingSpec base)
{
    RingSpec s;
    s.kind = Kind::trivial_extension;
    s.parts = {std::move(base)};
    return s;
}

RingSpec RingSpec::from_json(const nlohmann::json &doc, const std::filesystem::path &base_dir)
{
    if (!doc.is_object()) {
        fail(ErrorKind::malformed_spec, "ring spec must be an object");
    }
    const auto kind = doc.value("kind", std::string(doc.contains("add") ? "table" : ""));
    if (kind == "Zn") {
        if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
            fail(ErrorKind::malformed_spec, "Zn needs integer n");
        }
        const auto n = doc.at("n").get<long long>();
        if (n < 2) {
            fail(ErrorKind::malformed_spec, "Zn requires n >= 2");
        }
        return zn(static_cast<unsigned>(n));
    }
    if (kind == "table") {
        if (doc.contains("path")) {
            const auto path = base_dir / doc.at("path").get<std::string>();
            std::ifstream in(path);
            if (!in) {
                fail(ErrorKind::malformed_spec, "cannot open ring table " + path.string());
            }
            try {
                return from_table(nlohmann::json::parse(in));
            } catch (const nlohmann::json::parse_error &e) {
                fail(ErrorKind::malformed_spec, "ring table " + path.string() + ": " + e.what());
            }
        }
        return from_table(doc);
    }
    if (kind == "product") {
        if (!doc.contains("left") || !doc.contains("right")) {
            fail(ErrorKind::malformed_spec, "product needs left and right");
        }
        return product(from_json(doc.at("left"), base_dir), from_json(doc.at("right"), base_dir));
    }
    if (kind == "trivial_extension") {
        if (!doc.contains("base")) {
            fail(ErrorKind::malformed_spec, "trivial_extension needs base");
        }
        return trivial_extension(from_json(doc.at("base"), base_dir));
    }
    fail(ErrorKind::malformed_spec, "unknown ring kind '" + kind + "'");
}

namespace
{

RingPtr build(const RingSpec &spec)
{
    switch (spec.kind) {
        case RingSpec::Kind::zn:
            return ring_zn(spec.n);
        case RingSpec::Kind::table:
            if (!spec.table) {
                fail(ErrorKind::malformed_spec, "table spec without table");
            }
            return ring_from_table(*spec.table);
        case RingSpec::Kind::product:
            if (spec.parts.size() != 2) {
                fail(ErrorKind::malformed_spec, "product needs two parts");
            }
            return ring_product(*build(spec.parts[0]), *build(spec.parts[1]));
        case RingSpec::Kind::trivial_extension:
            if (spec.parts.size() != 1) {
                fail(ErrorKind::malformed_spec, "trivial_extension needs one part");
            }
            return ring_trivial_extension(*build(spec.parts[0]));
    }
    fail(ErrorKind::malformed_spec, "bad ring kind");
}

std::string tuple_text(const std::vector<Elem> &w)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? "," : "") << w[i];
    }
    os << ')';
    return os.str();
}

} // namespace

RingPtr ring_make(const RingSpec &spec, std::size_t cap)
{
    auto ring = build(spec);
    if (ring->size() > cap) {
        fail(ErrorKind::size_cap_exceeded,
             "ring '" + ring->label() + "' has " + std::to_string(ring->size()) + " elements (cap " +
                 std::to_string(cap) + ")");
    }
    const auto report = check_ring_axioms(*ring);
    if (const auto *bad = report.first_failure()) {
        fail(ErrorKind::axiom_violation, "ring '" + ring->label() + "' fails " + bad->axiom + " at " +
                                             tuple_text(bad->witness));
    }
    return ring;
}

std::optional<Elem> inverse(const FiniteRing &ring, Elem u)
{
    for (std::size_t v = 0; v < ring.size(); ++v) {
        if (ring.mul(u, Elem(v)) == ring.one() && ring.mul(Elem(v), u) == ring.one()) {
            return Elem(v);
        }
    }
    return std::nullopt;
}

ElementSet units(const FiniteRing &ring)
{
    ElementSet out(ring.size());
    for (std::size_t u = 0; u < ring.size(); ++u) {
        if (inverse(ring, Elem(u))) {
            out.insert(Elem(u));
        }
    }
    return out;
}

bool is_central(const FiniteRing &ring, Elem a)
{
    for (std::size_t x = 0; x < ring.size(); ++x) {
        if (ring.mul(a, Elem(x)) != ring.mul(Elem(x), a)) {
            return false;
        }
    }
    return true;
}

RingAutomorphism RingAutomorphism::identity(RingPtr ring)
{
    std::vector<Elem> map(ring->size());
    std::iota(map.begin(), map.end(), Elem{0});
    return RingAutomorphism(std::move(ring), std::move(map));
}

bool RingAutomorphism::is_identity() const noexcept
{
    for (std::size_t i = 0; i < m_map.size(); ++i) {
        if (m_map[i] != i) {
            return false;
        }
    }
    return true;
}

std::optional<AutomorphismDefect> find_automorphism_defect(const FiniteRing &ring, std::span<const Elem> map)
{
    const auto n = ring.size();
    if (map.size() != n) {
        return AutomorphismDefect{"not_bijective", 0, 0};
    }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (map[x] >= n || hit[map[x]]) {
            return AutomorphismDefect{"not_bijective", Elem(x), 0};
        }
        hit[map[x]] = true;
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto x = Elem(a), y = Elem(b);
            if (map[ring.add(x, y)] != ring.add(map[x], map[y])) {
                return AutomorphismDefect{"additive", x, y};
            }
            if (map[ring.mul(x, y)] != ring.mul(map[x], map[y])) {
                return AutomorphismDefect{"multiplicative", x, y};
            }
        }
    }
    if (map[0] != 0) {
        return AutomorphismDefect{"zero", 0, 0};
    }
    if (map[ring.one()] != ring.one()) {
        return AutomorphismDefect{"one", ring.one(), 0};
    }
    return std::nullopt;
}

RingAutomorphism check_automorphism(RingPtr ring, std::vector<Elem> map)
{
    if (auto d = find_automorphism_defect(*ring, map)) {
        fail(ErrorKind::not_automorphism, "on " + ring->label() + ": " + d->reason + " failure at (" +
                                              std::to_string(d->a) + "," + std::to_string(d->b) + ")");
    }
    return RingAutomorphism(std::move(ring), std::move(map));
}

RingAutomorphism compose(const RingAutomorphism &a, const RingAutomorphism &b)
{
    if (a.ring() != b.ring()) {
        fail(ErrorKind::ring_mismatch, "cannot compose automorphisms of different rings");
    }
    std::vector<Elem> map(b.map().size());
    for (std::size_t x = 0; x < map.size(); ++x) {
        map[x] = a(b(Elem(x)));
    }
    return RingAutomorphism(a.ring(), std::move(map));
}

RingAutomorphism inverse(const RingAutomorphism &a)
{
    std::vector<Elem> map(a.map().size());
    for (std::size_t x = 0; x < map.size(); ++x) {
        map[a(Elem(x))] = Elem(x);
    }
    return RingAutomorphism(a.ring(), std::move(map));
}

RingAutomorphism power(const RingAutomorphism &a, std::int64_t n)
{
    auto base = n < 0 ? inverse(a) : a;
    auto e = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    auto result = RingAutomorphism::identity(a.ring());
    while (e != 0) {
        if (e & 1u) {
            result = compose(result, base);
        }
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

std::size_t order(const RingAutomorphism &a)
{
    std::size_t k = 1;
    auto p = a;
    while (!p.is_identity()) {
        p = compose(a, p);
        ++k;
    }
    return k;
}

} // namespace mn
