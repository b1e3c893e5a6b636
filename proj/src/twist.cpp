#include <mn/twist.hpp>

#include <mn/error.hpp>

namespace mn
{

TwistSystem::TwistSystem(RingPtr ring, OrderedGroup group, std::vector<RingAutomorphism> generators, TauRule tau_rule)
    : m_ring(std::move(ring)), m_group(group), m_generators(std::move(generators)), m_tau(std::move(tau_rule))
{
    const auto &r = *m_ring;
    if (m_generators.size() != m_group.rank()) {
        fail(ErrorKind::malformed_spec, "sigma needs one automorphism per group generator (" +
                                            std::to_string(m_group.rank()) + ")");
    }
    for (const auto &g : m_generators) {
        if (g.ring() != m_ring) {
            fail(ErrorKind::ring_mismatch, "sigma generator acts on a different ring");
        }
        if (auto d = find_automorphism_defect(r, g.map())) {
            fail(ErrorKind::not_automorphism, "sigma generator: " + d->reason + " failure at (" +
                                                  std::to_string(d->a) + "," + std::to_string(d->b) + ")");
        }
    }
    for (std::size_t i = 0; i < m_generators.size(); ++i) {
        for (std::size_t j = i + 1; j < m_generators.size(); ++j) {
            if (compose(m_generators[i], m_generators[j]) != compose(m_generators[j], m_generators[i])) {
                fail(ErrorKind::malformed_spec, "sigma generators must commute");
            }
        }
    }
    for (const auto &g : m_generators) {
        std::vector<std::vector<Elem>> pw;
        auto p = RingAutomorphism::identity(m_ring);
        do {
            pw.push_back(p.map());
            p = compose(g, p);
        } while (!p.is_identity());
        m_powers.push_back(std::move(pw));
    }

    if (m_tau.kind == TauRule::Kind::unit_power) {
        if (m_tau.unit >= r.size() || !inverse(r, m_tau.unit)) {
            fail(ErrorKind::malformed_spec, "tau unit must be a unit of the ring");
        }
        if (!is_central(r, m_tau.unit)) {
            fail(ErrorKind::malformed_spec, "tau unit must be central");
        }
        const auto k = m_group.rank();
        if (m_tau.exponent_matrix.size() != k) {
            fail(ErrorKind::malformed_spec, "tau exponent matrix must be rank x rank");
        }
        for (const auto &row : m_tau.exponent_matrix) {
            if (row.size() != k) {
                fail(ErrorKind::malformed_spec, "tau exponent matrix must be rank x rank");
            }
        }
        Elem p = r.one();
        do {
            m_unit_powers.push_back(p);
            p = r.mul(p, m_tau.unit);
        } while (p != r.one());
    }
    for (const auto &[key, v] : m_tau.overrides) {
        if (v >= r.size() || !inverse(r, v)) {
            fail(ErrorKind::malformed_spec, "tau override value must be a unit");
        }
    }

    m_normalized = true;
    const auto id = m_group.identity();
    for (const auto &x : m_group.window(-4, 4)) {
        if (tau(id, x) != r.one() || tau(x, id) != r.one()) {
            m_normalized = false;
            break;
        }
    }
    if (!sigma_map(id).is_identity()) {
        m_normalized = false;
    }
}

std::shared_ptr<const TwistSystem> TwistSystem::trivial(RingPtr ring, OrderedGroup group)
{
    std::vector<RingAutomorphism> gens(group.rank(), RingAutomorphism::identity(ring));
    return std::make_shared<const TwistSystem>(std::move(ring), group, std::move(gens), TauRule{});
}

namespace
{

RingAutomorphism parse_automorphism(const nlohmann::json &j, const RingPtr &ring)
{
    if (j.is_string() && j.get<std::string>() == "identity") {
        return RingAutomorphism::identity(ring);
    }
    if (j.is_array()) {
        auto map = j.get<std::vector<Elem>>();
        return check_automorphism(ring, std::move(map));
    }
    fail(ErrorKind::malformed_spec, "sigma generator must be \"identity\" or a permutation array");
}

} // namespace

std::shared_ptr<const TwistSystem> TwistSystem::from_json(const nlohmann::json &doc, RingPtr ring,
                                                          OrderedGroup group)
{
    std::vector<RingAutomorphism> gens;
    try {
        const auto sigma = doc.value("sigma", nlohmann::json::object());
        if (sigma.contains("generators")) {
            for (const auto &g : sigma.at("generators")) {
                gens.push_back(parse_automorphism(g, ring));
            }
        } else if (sigma.contains("generator")) {
            gens.push_back(parse_automorphism(sigma.at("generator"), ring));
        } else {
            gens.assign(group.rank(), RingAutomorphism::identity(ring));
        }

        TauRule tau;
        const auto tj = doc.value("tau", nlohmann::json{{"kind", "one"}});
        const auto kind = tj.value("kind", std::string("one"));
        if (kind == "unit_power") {
            tau.kind = TauRule::Kind::unit_power;
            tau.unit = tj.at("unit").get<Elem>();
            const auto &rule = tj.contains("exponent_rule") ? tj.at("exponent_rule") : nlohmann::json("product");
            if (rule.is_string()) {
                if (rule.get<std::string>() != "product") {
                    fail(ErrorKind::malformed_spec, "unknown exponent_rule '" + rule.get<std::string>() + "'");
                }
                const auto k = group.rank();
                tau.exponent_matrix.assign(k, std::vector<std::int64_t>(k, 0));
                for (std::size_t i = 0; i < k; ++i) {
                    tau.exponent_matrix[i][i] = 1;
                }
            } else {
                tau.exponent_matrix = rule.get<std::vector<std::vector<std::int64_t>>>();
            }
        } else if (kind != "one") {
            fail(ErrorKind::malformed_spec, "unknown tau kind '" + kind + "'");
        }
        if (tj.contains("overrides")) {
            for (const auto &o : tj.at("overrides")) {
                if (!o.is_array() || o.size() != 3) {
                    fail(ErrorKind::malformed_spec, "tau override must be [x, y, value]");
                }
                tau.overrides[{group.element_from_json(o[0]), group.element_from_json(o[1])}] = o[2].get<Elem>();
            }
        }
        return std::make_shared<const TwistSystem>(std::move(ring), group, std::move(gens), std::move(tau));
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::malformed_spec, std::string("twist spec: ") + e.what());
    }
}

nlohmann::json TwistSystem::to_json() const
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : m_generators) {
        gens.push_back(g.is_identity() ? nlohmann::json("identity") : nlohmann::json(g.map()));
    }
    nlohmann::json tau;
    if (m_tau.kind == TauRule::Kind::one) {
        tau = {{"kind", "one"}};
    } else {
        tau = {{"kind", "unit_power"}, {"unit", m_tau.unit}, {"exponent_rule", m_tau.exponent_matrix}};
    }
    if (!m_tau.overrides.empty()) {
        auto ov = nlohmann::json::array();
        for (const auto &[key, v] : m_tau.overrides) {
            ov.push_back({m_group.element_to_json(key.first), m_group.element_to_json(key.second), v});
        }
        tau["overrides"] = ov;
    }
    return {{"sigma", {{"generators", gens}}}, {"tau", tau}};
}

bool TwistSystem::trivial_sigma() const noexcept
{
    for (const auto &g : m_generators) {
        if (!g.is_identity()) {
            return false;
        }
    }
    return true;
}

namespace
{

std::size_t floor_mod(std::int64_t e, std::size_t m)
{
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::size_t>(((e % mm) + mm) % mm);
}

} // namespace

Elem TwistSystem::sigma(const GroupElement &x, Elem r) const
{
    for (std::size_t i = 0; i < m_powers.size(); ++i) {
        const auto &pw = m_powers[i];
        r = pw[floor_mod(x.coords[i], pw.size())][r];
    }
    return r;
}

RingAutomorphism TwistSystem::sigma_map(const GroupElement &x) const
{
    std::vector<Elem> map(m_ring->size());
    for (std::size_t r = 0; r < map.size(); ++r) {
        map[r] = sigma(x, Elem(r));
    }
    return RingAutomorphism(m_ring, std::move(map));
}

std::int64_t TwistSystem::tau_exponent(const GroupElement &x, const GroupElement &y) const
{
    std::int64_t e = 0;
    const auto k = m_group.rank();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            e += m_tau.exponent_matrix[i][j] * std::int64_t{x.coords[i]} * std::int64_t{y.coords[j]};
        }
    }
    return e;
}

Elem TwistSystem::tau(const GroupElement &x, const GroupElement &y) const
{
    if (!m_tau.overrides.empty()) {
        if (auto it = m_tau.overrides.find({x, y}); it != m_tau.overrides.end()) {
            return it->second;
        }
    }
    if (m_tau.kind == TauRule::Kind::one) {
        return m_ring->one();
    }
    return m_unit_powers[floor_mod(tau_exponent(x, y), m_unit_powers.size())];
}

const TwistCondition &TwistReport::get(const std::string &name) const
{
    for (const auto &c : conditions) {
        if (c.name == name) {
            return c;
        }
    }
    throw std::out_of_range("no twist condition named " + name);
}

nlohmann::json TwistReport::to_json(const OrderedGroup &group) const
{
    auto arr = nlohmann::json::array();
    for (const auto &c : conditions) {
        nlohmann::json j{{"condition", c.name}, {"pass", c.pass}};
        if (c.witness) {
            auto w = nlohmann::json::array();
            for (const auto &g : *c.witness) {
                w.push_back(group.element_to_json(g));
            }
            j["witness"] = w;
        }
        if (c.element) {
            j["element"] = *c.element;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

namespace
{

TwistCondition named(std::string name)
{
    TwistCondition c;
    c.name = std::move(name);
    return c;
}

} // namespace

TwistReport check_twist_conditions(const TwistSystem &t, const std::vector<GroupElement> &window)
{
    const auto &r = *t.ring();
    const auto &g = t.group();
    TwistReport report;
    auto literal = named("literal_i"), standard = named("standard_cocycle");
    for (const auto &x : window) {
        for (const auto &y : window) {
            const auto xy = g.op(x, y);
            for (const auto &z : window) {
                const auto yz = g.op(y, z);
                if (literal.pass) {
                    const auto lhs = r.mul(t.tau(xy, z), t.sigma(x, t.tau(x, y)));
                    const auto rhs = r.mul(t.tau(x, yz), t.tau(y, z));
                    if (lhs != rhs) {
                        literal.pass = false;
                        literal.witness = std::vector<GroupElement>{x, y, z};
                    }
                }
                if (standard.pass) {
                    const auto lhs = r.mul(t.tau(x, y), t.tau(xy, z));
                    const auto rhs = r.mul(t.sigma(x, t.tau(y, z)), t.tau(x, yz));
                    if (lhs != rhs) {
                        standard.pass = false;
                        standard.witness = std::vector<GroupElement>{x, y, z};
                    }
                }
            }
        }
    }
    report.conditions.push_back(std::move(literal));
    report.conditions.push_back(std::move(standard));

    auto conj_a = named("ii_conj_u_r_uinv"), conj_b = named("ii_conj_uinv_r_u");
    for (const auto &y : window) {
        for (const auto &z : window) {
            const auto u = t.tau(y, z);
            const auto uinv = *inverse(r, u);
            const auto yz = g.op(y, z);
            for (std::size_t e = 0; e < r.size(); ++e) {
                const auto x = Elem(e);
                const auto lhs = t.sigma(y, t.sigma(z, x));
                if (conj_a.pass && lhs != t.sigma(yz, r.mul(r.mul(u, x), uinv))) {
                    conj_a.pass = false;
                    conj_a.witness = std::vector<GroupElement>{y, z};
                    conj_a.element = x;
                }
                if (conj_b.pass && lhs != t.sigma(yz, r.mul(r.mul(uinv, x), u))) {
                    conj_b.pass = false;
                    conj_b.witness = std::vector<GroupElement>{y, z};
                    conj_b.element = x;
                }
            }
        }
    }
    report.conditions.push_back(std::move(conj_a));
    report.conditions.push_back(std::move(conj_b));

    auto norm = named("normalized");
    const auto id = g.identity();
    if (!t.sigma_map(id).is_identity()) {
        norm.pass = false;
        norm.witness = std::vector<GroupElement>{id};
    }
    for (const auto &x : window) {
        if (!norm.pass) {
            break;
        }
        if (t.tau(id, x) != r.one() || t.tau(x, id) != r.one()) {
            norm.pass = false;
            norm.witness = std::vector<GroupElement>{x};
        }
    }
    report.conditions.push_back(std::move(norm));
    return report;
}

} // namespace mn
