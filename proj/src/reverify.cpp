#include <mn/reverify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <mn/error.hpp>
#include <mn/series.hpp>

namespace mn
{

namespace
{

using json = nlohmann::json;
using Set = std::set<Elem>;
using Terms = std::map<GroupElement, Elem>;

struct Naive {
    const TwistSystem &twist;
    const FiniteRing &r;
    const OrderedGroup &g;

    std::size_t n() const
    {
        return r.size();
    }

    Set set(const json &j) const
    {
        Set s;
        for (const auto &e : j) {
            const auto v = e.get<std::int64_t>();
            if (v < 0 || static_cast<std::size_t>(v) >= n()) {
                throw std::runtime_error("element id out of range");
            }
            s.insert(Elem(v));
        }
        return s;
    }
    Set all() const
    {
        Set s;
        for (std::size_t a = 0; a < n(); ++a) {
            s.insert(Elem(a));
        }
        return s;
    }

    bool left_zero_divisor(Elem a) const
    {
        for (std::size_t x = 1; x < n(); ++x) {
            if (r.mul(a, Elem(x)) == 0) {
                return true;
            }
        }
        return false;
    }

    Set sum(const Set &a, const Set &b) const
    {
        Set s;
        for (auto x : a) {
            for (auto y : b) {
                s.insert(r.add(x, y));
            }
        }
        return s;
    }
    Set meet(const Set &a, const Set &b) const
    {
        Set s;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(s, s.end()));
        return s;
    }
    // {a | Xa = 0}
    Set right_ann(const Set &x) const
    {
        Set s;
        for (std::size_t a = 0; a < n(); ++a) {
            if (std::all_of(x.begin(), x.end(), [&](Elem v) { return r.mul(v, Elem(a)) == 0; })) {
                s.insert(Elem(a));
            }
        }
        return s;
    }
    // {a | aX = 0}
    Set left_ann(const Set &x) const
    {
        Set s;
        for (std::size_t a = 0; a < n(); ++a) {
            if (std::all_of(x.begin(), x.end(), [&](Elem v) { return r.mul(Elem(a), v) == 0; })) {
                s.insert(Elem(a));
            }
        }
        return s;
    }
    // (U:Y) = {a | Ya ⊆ U}
    Set quotient(const Set &u, const Set &y) const
    {
        Set s;
        for (std::size_t a = 0; a < n(); ++a) {
            if (std::all_of(y.begin(), y.end(), [&](Elem v) { return u.count(r.mul(v, Elem(a))) != 0; })) {
                s.insert(Elem(a));
            }
        }
        return s;
    }
    bool additive_subgroup(const Set &s) const
    {
        if (!s.count(0)) {
            return false;
        }
        for (auto a : s) {
            for (auto b : s) {
                if (!s.count(r.sub(a, b))) {
                    return false;
                }
            }
        }
        return true;
    }
    bool right_ideal(const Set &s) const
    {
        if (!additive_subgroup(s)) {
            return false;
        }
        for (auto a : s) {
            for (std::size_t x = 0; x < n(); ++x) {
                if (!s.count(r.mul(a, Elem(x)))) {
                    return false;
                }
            }
        }
        return true;
    }
    bool left_ideal(const Set &s) const
    {
        if (!additive_subgroup(s)) {
            return false;
        }
        for (auto a : s) {
            for (std::size_t x = 0; x < n(); ++x) {
                if (!s.count(r.mul(Elem(x), a))) {
                    return false;
                }
            }
        }
        return true;
    }
    bool twosided(const Set &s) const
    {
        return right_ideal(s) && left_ideal(s);
    }
    bool is_nilpotent(Elem a) const
    {
        Elem p = a;
        for (std::size_t i = 0; i <= n(); ++i) {
            if (p == 0) {
                return true;
            }
            p = r.mul(p, a);
        }
        return false;
    }
    // Smallest set containing s closed under +, and under the requested multiplications.
    Set closure(Set s, bool right, bool left) const
    {
        s.insert(0);
        bool grew = true;
        while (grew) {
            grew = false;
            Set next = s;
            for (auto a : s) {
                for (auto b : s) {
                    next.insert(r.add(a, b));
                }
                for (std::size_t x = 0; x < n(); ++x) {
                    if (right) {
                        next.insert(r.mul(a, Elem(x)));
                    }
                    if (left) {
                        next.insert(r.mul(Elem(x), a));
                    }
                }
            }
            grew = next.size() != s.size();
            s = std::move(next);
        }
        return s;
    }
    // Every ideal of the kind appears: principal ideals are listed and the list is closed under sums.
    std::string lattice_defect(const std::vector<Set> &list, bool right, bool left) const
    {
        std::set<Set> have(list.begin(), list.end());
        for (const auto &s : list) {
            if ((right && !right_ideal(s)) || (left && !left_ideal(s)) || (!right && !left && !additive_subgroup(s))) {
                return "listed set is not an ideal of the claimed kind";
            }
        }
        for (std::size_t a = 0; a < n(); ++a) {
            if (!have.count(closure({Elem(a)}, right, left))) {
                return "principal ideal of " + std::to_string(a) + " missing from the list";
            }
        }
        for (const auto &a : list) {
            for (const auto &b : list) {
                if (!have.count(sum(a, b))) {
                    return "list not closed under sums";
                }
            }
        }
        return {};
    }

    Terms terms(const json &j) const
    {
        Terms t;
        for (const auto &p : j) {
            const auto x = g.element_from_json(p.at(0));
            const auto c = p.at(1).get<std::int64_t>();
            if (c < 0 || static_cast<std::size_t>(c) >= n()) {
                throw std::runtime_error("coefficient out of range");
            }
            if (c != 0) {
                t[x] = Elem(c);
            }
        }
        return t;
    }
    Terms add(const Terms &a, const Terms &b) const
    {
        Terms out = a;
        for (const auto &[x, c] : b) {
            out[x] = r.add(out.count(x) ? out[x] : Elem{0}, c);
        }
        std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
        return out;
    }
    Terms mul(const Terms &a, const Terms &b) const
    {
        Terms out;
        for (const auto &[x, ax] : a) {
            for (const auto &[y, by] : b) {
                const auto z = g.op(x, y);
                const auto t = r.mul(r.mul(ax, twist.sigma(x, by)), twist.tau(x, y));
                out[z] = r.add(out.count(z) ? out[z] : Elem{0}, t);
            }
        }
        std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
        return out;
    }
    bool coefficients_in(const Terms &t, const Set &s) const
    {
        return std::all_of(t.begin(), t.end(), [&](const auto &kv) { return s.count(kv.second) != 0; });
    }
    // Every series supported in the window.
    std::vector<Terms> universe(const std::vector<GroupElement> &window) const
    {
        std::vector<Terms> out(1);
        for (const auto &x : window) {
            std::vector<Terms> next;
            for (const auto &t : out) {
                for (std::size_t c = 0; c < n(); ++c) {
                    auto u = t;
                    if (c != 0) {
                        u[x] = Elem(c);
                    }
                    next.push_back(std::move(u));
                }
            }
            out = std::move(next);
        }
        return out;
    }
    std::vector<GroupElement> window(const json &j) const
    {
        std::vector<GroupElement> w;
        for (const auto &e : j) {
            w.push_back(g.element_from_json(e));
        }
        return w;
    }
    Elem sigma_inverse(const std::vector<Elem> &map, Elem b) const
    {
        for (std::size_t a = 0; a < n(); ++a) {
            if (map[a] == b) {
                return Elem(a);
            }
        }
        throw std::runtime_error("generator is not a bijection");
    }
};

struct Checker {
    Naive nv;
    std::string detail;
    bool ok = true;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool axiom_holds(const FiniteRing &r, const std::string &axiom, const std::vector<Elem> &t)
{
    auto at = [&](std::size_t i) { return t.at(i); };
    if (axiom == "one_nonzero") {
        return r.one() != 0;
    }
    if (axiom == "add_associative") {
        return r.add(r.add(at(0), at(1)), at(2)) == r.add(at(0), r.add(at(1), at(2)));
    }
    if (axiom == "add_commutative") {
        return r.add(at(0), at(1)) == r.add(at(1), at(0));
    }
    if (axiom == "add_identity") {
        return r.add(at(0), 0) == at(0) && r.add(0, at(0)) == at(0);
    }
    if (axiom == "add_inverse") {
        for (std::size_t b = 0; b < r.size(); ++b) {
            if (r.add(at(0), Elem(b)) == 0 && r.add(Elem(b), at(0)) == 0) {
                return true;
            }
        }
        return false;
    }
    if (axiom == "mul_associative") {
        return r.mul(r.mul(at(0), at(1)), at(2)) == r.mul(at(0), r.mul(at(1), at(2)));
    }
    if (axiom == "mul_identity") {
        return r.mul(at(0), r.one()) == at(0) && r.mul(r.one(), at(0)) == at(0);
    }
    if (axiom == "left_distributive") {
        return r.mul(at(0), r.add(at(1), at(2))) == r.add(r.mul(at(0), at(1)), r.mul(at(0), at(2)));
    }
    if (axiom == "right_distributive") {
        return r.mul(r.add(at(0), at(1)), at(2)) == r.add(r.mul(at(0), at(2)), r.mul(at(1), at(2)));
    }
    throw std::runtime_error("unknown axiom " + axiom);
}

bool twist_condition_holds(const Naive &nv, const std::string &name, const std::vector<GroupElement> &w,
                           std::optional<Elem> element)
{
    const auto &t = nv.twist;
    const auto &r = nv.r;
    const auto &g = nv.g;
    if (name == "literal_i" || name == "standard_cocycle") {
        const auto &x = w.at(0), &y = w.at(1), &z = w.at(2);
        if (name == "literal_i") {
            return r.mul(t.tau(g.op(x, y), z), t.sigma(x, t.tau(x, y))) == r.mul(t.tau(x, g.op(y, z)), t.tau(y, z));
        }
        return r.mul(t.tau(x, y), t.tau(g.op(x, y), z)) == r.mul(t.sigma(x, t.tau(y, z)), t.tau(x, g.op(y, z)));
    }
    if (name == "ii_conj_u_r_uinv" || name == "ii_conj_uinv_r_u") {
        const auto &y = w.at(0), &z = w.at(1);
        const auto u = t.tau(y, z);
        Elem uinv = 0;
        for (std::size_t v = 0; v < r.size(); ++v) {
            if (r.mul(u, Elem(v)) == r.one() && r.mul(Elem(v), u) == r.one()) {
                uinv = Elem(v);
            }
        }
        const auto x = element.value();
        const auto eta = name == "ii_conj_u_r_uinv" ? r.mul(r.mul(u, x), uinv) : r.mul(r.mul(uinv, x), u);
        return t.sigma(y, t.sigma(z, x)) == t.sigma(g.op(y, z), eta);
    }
    if (name == "normalized") {
        const auto id = g.identity();
        for (std::size_t a = 0; a < r.size(); ++a) {
            if (t.sigma(id, Elem(a)) != Elem(a)) {
                return false;
            }
        }
        const auto &x = w.at(0);
        return t.tau(id, x) == r.one() && t.tau(x, id) == r.one();
    }
    throw std::runtime_error("unknown twist condition " + name);
}

// Minimal Y ⊆ X (size, then lexicographic) with good(Y), by plain subset enumeration.
std::optional<Set> naive_minimal(const Set &x, const std::function<bool(const Set &)> &good)
{
    const std::vector<Elem> xs(x.begin(), x.end());
    std::vector<Set> subsets;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << xs.size()); ++m) {
        Set s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if ((m >> i) & 1u) {
                s.insert(xs[i]);
            }
        }
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const Set &a, const Set &b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (const auto &s : subsets) {
        if (good(s)) {
            return s;
        }
    }
    return std::nullopt;
}

void check_zip_witness(Checker &c, const PropertyReport &rep)
{
    auto &nv = c.nv;
    const auto &src = rep.status == Status::holds ? rep.certificate : rep.witness;
    const auto u = nv.set(src.at("u"));
    const auto x = nv.set(src.at("x"));
    const bool inside = std::includes(u.begin(), u.end(), x.begin(), x.end());
    if (rep.status == Status::not_applicable) {
        c.require(inside, "X is not contained in U");
        return;
    }
    c.require(!inside, "X is contained in U");
    const auto q = nv.quotient(u, x);
    if (rep.status == Status::hypothesis_fails) {
        c.require(q == nv.set(src.at("quotient")), "reported quotient differs from (U:X)");
        c.require(q != u, "(U:X) = U, hypothesis holds");
        return;
    }
    c.require(q == u, "(U:X) != U");
    const auto y = nv.set(src.at("y"));
    c.require(std::includes(x.begin(), x.end(), y.begin(), y.end()), "Y is not a subset of X");
    c.require(nv.quotient(u, y) == u, "(U:Y) != U");
    if (x.size() <= 20) {
        const auto min = naive_minimal(x, [&](const Set &s) { return nv.quotient(u, s) == u; });
        c.require(min && *min == y, "Y is not the first minimal witness");
    }
}

void check_fusible_lift(Checker &c, const json &cert, const json &bounds)
{
    auto &nv = c.nv;
    const auto f = nv.terms(cert.at("f"));
    const auto g = nv.terms(cert.at("g"));
    const auto h = nv.terms(cert.at("h"));
    c.require(nv.add(g, h) == f, "f != g + h");
    const auto a = Elem(cert.at("a").get<int>());
    const auto b = Elem(cert.at("b").get<int>());
    const auto d = Elem(cert.at("d").get<int>());
    const auto s0 = nv.g.element_from_json(cert.at("s0"));
    c.require(!f.empty() && f.begin()->first == s0, "s0 is not the leading exponent of f");
    c.require(nv.r.add(a, b) == f.at(s0), "a + b != f(s0)");
    c.require(nv.left_zero_divisor(a), "a is not a left zero-divisor");
    c.require(!nv.left_zero_divisor(b), "b is a left zero-divisor");
    c.require(d != 0 && nv.r.mul(a, d) == 0, "d does not witness a as a zero-divisor");
    c.require(nv.mul(g, Terms{{nv.g.identity(), d}}).empty(), "g * d != 0");
    c.require(!h.empty() && h.begin()->second == b, "leading coefficient of h is not b");
    const auto window = nv.window(bounds.at("window"));
    std::size_t nonzero = 0;
    for (const auto &k : nv.universe(window)) {
        if (k.empty()) {
            continue;
        }
        ++nonzero;
        c.require(!nv.mul(h, k).empty(), "h * k = 0 for a nonzero universe series k");
    }
    c.require(nonzero == cert.at("k_checked").get<std::size_t>(), "universe size mismatch");
}

void check_extraction_trace(Checker &c, const Set &u, const json &f_json, const json &g_json, const json &trace)
{
    auto &nv = c.nv;
    const auto f = nv.terms(f_json);
    const auto g = nv.terms(g_json);
    c.require(nv.coefficients_in(nv.mul(f, g), u), "fg is not a U-series");
    auto term = [&](const GroupElement &x, const GroupElement &y) {
        return nv.r.mul(nv.r.mul(f.at(x), nv.twist.sigma(x, g.at(y))), nv.twist.tau(x, y));
    };
    std::set<std::pair<GroupElement, GroupElement>> established;
    for (const auto &step : trace.at("steps")) {
        const auto w = nv.g.element_from_json(step.at("w"));
        Elem a1 = 0;
        for (const auto &p : step.at("pairs")) {
            const auto x = nv.g.element_from_json(p.at(0)), y = nv.g.element_from_json(p.at(1));
            c.require(nv.g.op(x, y) == w, "pair does not multiply to w");
            a1 = nv.r.add(a1, term(x, y));
        }
        c.require(u.count(a1) != 0, "(fg)(w) not in U");
        for (const auto &p : step.at("established")) {
            const auto x = nv.g.element_from_json(p.at(0)), y = nv.g.element_from_json(p.at(1));
            const auto t = term(x, y);
            const auto m = Elem(step.at("multiplier").get<int>());
            c.require(m == f.at(x), "multiplier is not f(u_i)");
            c.require(u.count(nv.r.mul(t, m)) != 0, "t_i f(u_i) not in U");
            c.require(u.count(t) != 0, "established term not in U");
            established.insert({x, y});
        }
    }
    std::size_t all_pairs = 0;
    for (const auto &[x, a] : f) {
        for (const auto &[y, b] : g) {
            ++all_pairs;
            c.require(u.count(term(x, y)) != 0, "a pair's term lies outside U");
            c.require(established.count({x, y}) != 0, "a pair is missing from the trace");
        }
    }
    c.require(trace.at("conclusion").size() == all_pairs, "conclusion does not list every pair");
}

void check_universe_quotient(Checker &c, const Set &u, const std::vector<Terms> &x0, const json &bounds)
{
    auto &nv = c.nv;
    for (const auto &v : nv.universe(nv.window(bounds.at("window")))) {
        const bool in_q =
            std::all_of(x0.begin(), x0.end(), [&](const Terms &f) { return nv.coefficients_in(nv.mul(f, v), u); });
        c.require(in_q == nv.coefficients_in(v, u), "universe quotient by X0 differs from the U-series");
    }
}

void dispatch(Checker &c, const PropertyReport &rep)
{
    auto &nv = c.nv;
    const auto &p = rep.property;
    const auto &w = rep.witness;
    const auto &cert = rep.certificate;
    const bool holds = rep.status == Status::holds;

    if (p == "ring_axioms") {
        if (holds) {
            for (const char *ax : {"add_associative", "mul_associative", "left_distributive", "right_distributive"}) {
                for (std::size_t a = 0; a < nv.n() && c.ok; ++a) {
                    for (std::size_t b = 0; b < nv.n(); ++b) {
                        for (std::size_t e = 0; e < nv.n(); ++e) {
                            c.require(axiom_holds(nv.r, ax, {Elem(a), Elem(b), Elem(e)}), std::string(ax) + " fails");
                        }
                    }
                }
            }
            c.detail = c.ok ? "full axiom rescan" : c.detail;
        } else {
            std::vector<Elem> t;
            for (const auto &e : w.at("tuple")) {
                t.push_back(Elem(e.get<int>()));
            }
            c.require(!axiom_holds(nv.r, w.at("axiom").get<std::string>(), t), "witness tuple satisfies the axiom");
        }
    } else if (p == "twist_conditions") {
        if (!holds) {
            for (const auto &f : w.at("failures")) {
                std::optional<Elem> el;
                if (f.contains("element")) {
                    el = Elem(f.at("element").get<int>());
                }
                c.require(!twist_condition_holds(nv, f.at("condition"), nv.window(f.at("at")), el),
                          "witness satisfies " + f.at("condition").get<std::string>());
            }
        } else {
            const auto win = nv.window(cert.at("window"));
            for (const auto &x : win) {
                for (const auto &y : win) {
                    for (const auto &z : win) {
                        c.require(twist_condition_holds(nv, "standard_cocycle", {x, y, z}, {}), "cocycle fails");
                        c.require(twist_condition_holds(nv, "literal_i", {x, y, z}, {}), "condition (i) fails");
                    }
                }
            }
        }
    } else if (p == "associativity") {
        if (!holds) {
            const auto f = nv.terms(w.at("f")), g = nv.terms(w.at("g")), h = nv.terms(w.at("h"));
            c.require(nv.mul(nv.mul(f, g), h) != nv.mul(f, nv.mul(g, h)), "witness triple associates");
        }
    } else if (p == "ideal_lattice") {
        auto lists = [&](const char *key) {
            std::vector<Set> out;
            for (const auto &s : cert.at(key)) {
                out.push_back(nv.set(s));
            }
            return out;
        };
        for (auto [key, right, left] : {std::tuple{"right", true, false}, std::tuple{"left", false, true},
                                        std::tuple{"twosided", true, true}}) {
            const auto d = nv.lattice_defect(lists(key), right, left);
            c.require(d.empty(), std::string(key) + ": " + d);
        }
    } else if (p == "left_fusible") {
        if (holds) {
            std::set<Elem> covered;
            for (const auto &t : cert.at("decompositions")) {
                const auto a = Elem(t.at(0).get<int>()), z = Elem(t.at(1).get<int>()), r = Elem(t.at(2).get<int>());
                c.require(nv.r.add(z, r) == a, "z + r != a");
                c.require(nv.left_zero_divisor(z), "z is left regular");
                c.require(!nv.left_zero_divisor(r), "r is a left zero-divisor");
                covered.insert(a);
            }
            c.require(covered.size() + 1 == nv.n(), "not every nonzero element is decomposed");
        } else {
            const auto a = Elem(w.at("element").get<int>());
            c.require(a != 0, "witness is zero");
            for (std::size_t z = 0; z < nv.n(); ++z) {
                c.require(!(nv.left_zero_divisor(Elem(z)) && !nv.left_zero_divisor(nv.r.sub(a, Elem(z)))),
                          "witness element has a decomposition");
            }
        }
    } else if (p == "sigma_compatible") {
        auto violates = [&](const std::vector<Elem> &map, bool inv, Elem a, Elem b) {
            const Elem sb = inv ? nv.sigma_inverse(map, b) : map[b];
            return (nv.r.mul(a, b) == 0) != (nv.r.mul(a, sb) == 0);
        };
        const auto &gens = nv.twist.generators();
        if (!holds) {
            const auto i = w.at("generator").get<std::size_t>();
            c.require(i < gens.size() && violates(gens[i].map(), w.at("inverse").get<bool>(), Elem(w.at("a").get<int>()),
                                                  Elem(w.at("b").get<int>())),
                      "witness pair is compatible");
        } else {
            for (const auto &s : gens) {
                for (bool inv : {false, true}) {
                    for (std::size_t a = 0; a < nv.n(); ++a) {
                        for (std::size_t b = 0; b < nv.n(); ++b) {
                            c.require(!violates(s.map(), inv, Elem(a), Elem(b)), "incompatible pair found");
                        }
                    }
                }
            }
        }
    } else if (p == "right_nonsingular") {
        // I is essential iff it meets yR nontrivially for every y ≠ 0
        auto essential = [&](const Set &i) {
            for (std::size_t y = 1; y < nv.n(); ++y) {
                bool meets = false;
                for (std::size_t x = 0; x < nv.n(); ++x) {
                    const auto yx = nv.r.mul(Elem(y), Elem(x));
                    meets = meets || (yx != 0 && i.count(yx));
                }
                if (!meets) {
                    return false;
                }
            }
            return true;
        };
        Set sing;
        for (std::size_t x = 0; x < nv.n(); ++x) {
            if (essential(nv.right_ann({Elem(x)}))) {
                sing.insert(Elem(x));
            }
        }
        c.require(sing == nv.set(rep.stats.at("sing")), "Sing differs from the cyclic-ideal recomputation");
        if (!holds) {
            const auto x = Elem(w.at("element").get<int>());
            c.require(x != 0 && sing.count(x), "witness is not a nonzero singular element");
            c.require(nv.right_ann({x}) == nv.set(w.at("annihilator")), "annihilator mismatch");
        } else {
            c.require(sing == Set{0}, "Sing is not zero");
        }
    } else if (p == "IN") {
        auto identity = [&](const Set &i, const Set &j) {
            return nv.left_ann(nv.meet(i, j)) == nv.sum(nv.left_ann(i), nv.left_ann(j));
        };
        if (!holds) {
            const auto i = nv.set(w.at("I")), j = nv.set(w.at("J"));
            c.require(nv.right_ideal(i) && nv.right_ideal(j), "witness sets are not right ideals");
            c.require(!identity(i, j), "witness pair satisfies the identity");
        } else {
            std::vector<Set> list;
            for (const auto &s : cert.at("right_ideals")) {
                list.push_back(nv.set(s));
            }
            const auto d = nv.lattice_defect(list, true, false);
            c.require(d.empty(), d);
            for (const auto &i : list) {
                for (const auto &j : list) {
                    c.require(identity(i, j), "identity fails on a certified pair");
                }
            }
        }
    } else if (p == "SA") {
        const auto &src = holds ? cert : w;
        std::vector<Set> list;
        for (const auto &s : src.at("ideals")) {
            list.push_back(nv.set(s));
        }
        const auto d = nv.lattice_defect(list, true, true);
        c.require(d.empty(), d);
        if (holds) {
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (const auto &t : cert.at("k")) {
                const auto i = t.at(0).get<std::size_t>(), j = t.at(1).get<std::size_t>(), k = t.at(2).get<std::size_t>();
                c.require(nv.sum(nv.right_ann(list.at(i)), nv.right_ann(list.at(j))) == nv.right_ann(list.at(k)),
                          "r(I) + r(J) != r(K) for a certified triple");
                seen.insert({i, j});
            }
            c.require(seen.size() == list.size() * (list.size() + 1) / 2, "not every pair is certified");
        } else {
            const auto s = nv.sum(nv.right_ann(nv.set(w.at("I"))), nv.right_ann(nv.set(w.at("J"))));
            for (const auto &k : list) {
                c.require(nv.right_ann(k) != s, "a listed K satisfies r(K) = r(I) + r(J)");
            }
        }
    } else if (p == "G_armendariz") {
        if (!holds) {
            const auto f = nv.terms(w.at("f")), g = nv.terms(w.at("g"));
            c.require(nv.mul(f, g).empty(), "fg != 0");
            const auto x = nv.g.element_from_json(w.at("x")), y = nv.g.element_from_json(w.at("y"));
            c.require(nv.r.mul(f.at(x), g.at(y)) != 0, "a_x b_y = 0");
        } else {
            const auto window = nv.window(rep.bounds.at("window"));
            const auto max_support = rep.bounds.at("max_support").get<std::size_t>();
            std::vector<Terms> fs;
            for (auto &t : nv.universe(window)) {
                if (!t.empty() && t.size() <= max_support) {
                    fs.push_back(std::move(t));
                }
            }
            if (fs.size() * fs.size() > 4'000'000) {
                c.detail = "bounded fragment too large for the naive rescan";
                return;
            }
            for (const auto &f : fs) {
                for (const auto &g : fs) {
                    if (!nv.mul(f, g).empty()) {
                        continue;
                    }
                    for (const auto &[x, a] : f) {
                        for (const auto &[y, b] : g) {
                            c.require(nv.r.mul(a, b) == 0, "a zero product with a nonzero coefficient product");
                        }
                    }
                }
            }
        }
    } else if (p == "sigma_u_zip_witness") {
        check_zip_witness(c, rep);
    } else if (p == "sigma_u_zip") {
        const auto u = nv.set(cert.at("u"));
        for (const auto &s : cert.at("samples")) {
            const auto x = nv.set(s.at("x")), y = nv.set(s.at("y"));
            c.require(nv.quotient(u, x) == u && nv.quotient(u, y) == u, "sample quotient differs from U");
            c.require(std::includes(x.begin(), x.end(), y.begin(), y.end()), "sample Y not inside X");
        }
        for (const auto &s : rep.stats.at("divergence_examples")) {
            c.require(nv.quotient(u, nv.set(s.at("x"))) == nv.set(s.at("quotient")), "divergence quotient mismatch");
            c.require(nv.set(s.at("quotient")) != u, "divergence example has (U:X) = U");
        }
    } else if (p == "zip_specialization") {
        if (!holds) {
            c.require(w.at("sigma_u") != w.at("direct"), "reported profiles agree at X");
        }
    } else if (p == "fusible_lift") {
        if (holds) {
            check_fusible_lift(c, cert, rep.bounds);
        }
    } else if (p == "prop3.2") {
        if (holds) {
            for (const auto &s : cert.at("samples")) {
                check_fusible_lift(c, s, rep.bounds);
            }
        }
    } else if (p == "lifted_annihilator") {
        if (holds) {
            const auto i = nv.set(cert.at("I")), j = nv.set(cert.at("J"));
            const bool left = cert.at("side") == "left";
            for (const auto &[key, s] : {std::pair{"I", i}, std::pair{"J", j}}) {
                const auto base = left ? nv.left_ann(s) : nv.right_ann(s);
                c.require(base == nv.set(cert.at("lifted").at(key).at("base_annihilator")), "base annihilator mismatch");
            }
            const bool base_in = nv.left_ann(nv.meet(i, j)) == nv.sum(nv.left_ann(i), nv.left_ann(j));
            c.require(base_in == cert.at("base_in").get<bool>(), "base IN identity mismatch");
            c.require(cert.at("universe_in") == cert.at("base_in"), "base and universe disagree");
        }
    } else if (p == "sa_transfer") {
        if (holds) {
            const auto i0 = nv.set(cert.at("i0")), j0 = nv.set(cert.at("j0")), k = nv.set(cert.at("k"));
            const auto k0 = nv.set(cert.at("k0"));
            c.require(nv.twosided(i0) && nv.twosided(j0) && nv.twosided(k), "a certified set is not an ideal");
            const auto target = nv.sum(nv.right_ann(i0), nv.right_ann(j0));
            c.require(target == nv.right_ann(k), "r(I0) + r(J0) != r(K)");
            c.require(target == nv.right_ann(k0), "r(I0) + r(J0) != r(K0)");
        }
    } else if (p == "series_zip_witness") {
        if (holds) {
            const auto u = nv.set(cert.at("u")), cx0 = nv.set(cert.at("c_x0"));
            c.require(nv.quotient(u, cx0) == u, "(U:C_X0) != U");
            std::vector<Terms> x0;
            for (const auto &f : cert.at("x0")) {
                x0.push_back(nv.terms(f));
                const auto &t = x0.back();
                c.require(std::any_of(t.begin(), t.end(), [&](const auto &kv) { return cx0.count(kv.second) != 0; }),
                          "X0 member without a coefficient in C_X0");
            }
            check_universe_quotient(c, u, x0, rep.bounds);
        }
    } else if (p == "extraction") {
        const auto &src = holds ? cert : w;
        const auto u = nv.set(src.at("u"));
        if (holds) {
            for (const auto &s : cert.at("samples")) {
                check_extraction_trace(c, u, s.at("f"), s.at("g"), s.at("trace"));
            }
        } else if (w.contains("f")) {
            // a mismatch is real when the oracle finds a pair outside U although fg is a U-series
            const auto f = nv.terms(w.at("f")), g = nv.terms(w.at("g"));
            c.require(nv.coefficients_in(nv.mul(f, g), u), "fg is not a U-series");
        }
    } else if (p == "example") {
        if (cert.contains("quotient") || w.contains("quotient")) {
            const auto &src = holds ? cert : w;
            const auto q = nv.quotient(nv.set(src.at("u")), nv.set(src.at("x")));
            c.require(q == nv.set(src.at("quotient")), "(U:X) differs from the reported quotient");
        }
    } else {
        c.detail = "no re-verifier for " + p;
    }
}

} // namespace

Reverification reverify(const PropertyReport &report, const TwistSystem &twist)
{
    Checker c{Naive{twist, *twist.ring(), twist.group()}, {}, true};
    try {
        dispatch(c, report);
    } catch (const std::exception &e) {
        return {false, report.property + ": malformed witness or certificate: " + e.what()};
    }
    if (c.ok && c.detail.empty()) {
        c.detail = "re-verified";
    }
    return {c.ok, report.property + ": " + c.detail};
}

} // namespace mn
