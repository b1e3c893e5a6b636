#include <mn/series.hpp>

#include <algorithm>
#include <map>

#include <mn/error.hpp>

namespace mn
{

namespace
{

void same_twist(const Series &f, const Series &g)
{
    if (f.twist() != g.twist()) {
        fail(ErrorKind::twist_mismatch, "series over different twist systems");
    }
}

} // namespace

Series Series::make(TwistPtr twist, std::vector<Term> pairs)
{
    std::sort(pairs.begin(), pairs.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i].first == pairs[i - 1].first) {
            fail(ErrorKind::duplicate_key, "exponent " + twist->group().format(pairs[i].first) + " repeated");
        }
    }
    const auto n = twist->ring()->size();
    Series s(std::move(twist));
    for (auto &p : pairs) {
        if (p.second >= n) {
            fail(ErrorKind::malformed_spec, "coefficient id out of range");
        }
        if (p.second != 0) {
            s.m_terms.push_back(p);
        }
    }
    return s;
}

Elem Series::coeff(const GroupElement &x) const noexcept
{
    const auto it = std::lower_bound(m_terms.begin(), m_terms.end(), x,
                                     [](const Term &t, const GroupElement &k) { return t.first < k; });
    return (it != m_terms.end() && it->first == x) ? it->second : Elem{0};
}

std::vector<GroupElement> Series::support() const
{
    std::vector<GroupElement> out;
    out.reserve(m_terms.size());
    for (const auto &t : m_terms) {
        out.push_back(t.first);
    }
    return out;
}

ElementSet Series::content() const
{
    ElementSet out(m_twist->ring()->size());
    for (const auto &t : m_terms) {
        out.insert(t.second);
    }
    return out;
}

bool Series::coefficients_in(const ElementSet &s) const noexcept
{
    return std::all_of(m_terms.begin(), m_terms.end(), [&](const Term &t) { return s.contains(t.second); });
}

nlohmann::json Series::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto &t : m_terms) {
        arr.push_back({m_twist->group().element_to_json(t.first), t.second});
    }
    return arr;
}

Series Series::from_json(TwistPtr twist, const nlohmann::json &j)
{
    if (!j.is_array()) {
        fail(ErrorKind::malformed_spec, "series must be [[exponent, coefficient], ...]");
    }
    std::vector<Term> pairs;
    for (const auto &t : j) {
        if (!t.is_array() || t.size() != 2 || !t[1].is_number_integer()) {
            fail(ErrorKind::malformed_spec, "series term must be [exponent, coefficient]");
        }
        pairs.emplace_back(twist->group().element_from_json(t[0]), t[1].get<Elem>());
    }
    return make(std::move(twist), std::move(pairs));
}

std::string Series::format() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &t : m_terms) {
        if (!s.empty()) {
            s += " + ";
        }
        s += m_twist->ring()->name(t.second) + "*x^" + m_twist->group().format(t.first);
    }
    return s;
}

Series single_term(TwistPtr twist, const GroupElement &x, Elem r)
{
    Series s(std::move(twist));
    if (r != 0) {
        s.m_terms.emplace_back(x, r);
    }
    return s;
}

Series embed_scalar(TwistPtr twist, Elem r)
{
    if (!twist->normalized()) {
        fail(ErrorKind::not_normalized, "scalar embedding needs a normalized twist");
    }
    const auto id = twist->group().identity();
    return single_term(std::move(twist), id, r);
}

Series series_add(const Series &f, const Series &g)
{
    same_twist(f, g);
    const auto &r = *f.twist()->ring();
    Series out(f.twist());
    auto i = f.m_terms.begin(), j = g.m_terms.begin();
    while (i != f.m_terms.end() || j != g.m_terms.end()) {
        if (j == g.m_terms.end() || (i != f.m_terms.end() && i->first < j->first)) {
            out.m_terms.push_back(*i++);
        } else if (i == f.m_terms.end() || j->first < i->first) {
            out.m_terms.push_back(*j++);
        } else {
            if (const auto c = r.add(i->second, j->second); c != 0) {
                out.m_terms.emplace_back(i->first, c);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

Series series_neg(const Series &f)
{
    const auto &r = *f.twist()->ring();
    Series out(f.twist());
    out.m_terms = f.m_terms;
    for (auto &t : out.m_terms) {
        t.second = r.neg(t.second);
    }
    return out;
}

Series series_sub(const Series &f, const Series &g)
{
    return series_add(f, series_neg(g));
}

Series series_mul(const Series &f, const Series &g)
{
    same_twist(f, g);
    const auto &t = *f.twist();
    const auto &r = *t.ring();
    const auto &grp = t.group();
    std::map<GroupElement, Elem> acc;
    for (const auto &[x, a] : f.m_terms) {
        for (const auto &[y, b] : g.m_terms) {
            const auto term = r.mul(r.mul(a, t.sigma(x, b)), t.tau(x, y));
            auto [it, inserted] = acc.try_emplace(grp.op(x, y), term);
            if (!inserted) {
                it->second = r.add(it->second, term);
            }
        }
    }
    Series out(f.twist());
    for (const auto &[z, c] : acc) {
        if (c != 0) {
            out.m_terms.emplace_back(z, c);
        }
    }
    return out;
}

std::vector<std::pair<GroupElement, GroupElement>> x_w_pairs(const Series &f, const Series &g,
                                                             const GroupElement &w)
{
    same_twist(f, g);
    const auto &grp = f.twist()->group();
    std::vector<std::pair<GroupElement, GroupElement>> out;
    for (const auto &[x, a] : f.terms()) {
        // y = x⁻¹w is the only candidate partner.
        const auto y = grp.op(grp.inverse(x), w);
        if (g.coeff(y) != 0) {
            out.emplace_back(x, y);
        }
    }
    return out;
}

SupportStats support_stats(const Series &f)
{
    if (f.is_zero()) {
        fail(ErrorKind::zero_series, "support statistics of the zero series");
    }
    return SupportStats{f.support(), f.terms().front().first, f.terms().front().second, f.content()};
}

AssociativityReport check_associativity(const std::vector<std::array<Series, 3>> &triples)
{
    AssociativityReport report;
    for (const auto &tr : triples) {
        ++report.checked;
        if ((tr[0] * tr[1]) * tr[2] != tr[0] * (tr[1] * tr[2])) {
            report.pass = false;
            report.witness = tr;
            break;
        }
    }
    return report;
}

AssociativityReport check_associativity_exhaustive(const TwistPtr &twist, const std::vector<GroupElement> &window)
{
    const auto n = twist->ring()->size();
    std::vector<Series> singles;
    for (const auto &x : window) {
        for (std::size_t c = 1; c < n; ++c) {
            singles.push_back(single_term(twist, x, Elem(c)));
        }
    }
    AssociativityReport report;
    for (const auto &f : singles) {
        for (const auto &g : singles) {
            const auto fg = f * g;
            for (const auto &h : singles) {
                ++report.checked;
                if (fg * h != f * (g * h)) {
                    report.pass = false;
                    report.witness = std::array<Series, 3>{f, g, h};
                    return report;
                }
            }
        }
    }
    return report;
}

Series random_series(const TwistPtr &twist, const std::vector<GroupElement> &window, std::size_t min_support,
                     std::size_t max_support, std::mt19937_64 &rng)
{
    const auto n = twist->ring()->size();
    max_support = std::min(max_support, window.size());
    min_support = std::min(min_support, max_support);
    std::uniform_int_distribution<std::size_t> size_dist(min_support, max_support);
    std::uniform_int_distribution<std::size_t> coeff_dist(1, n - 1);
    const auto k = size_dist(rng);
    std::vector<std::size_t> idx(window.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    // Partial Fisher-Yates for k distinct exponents.
    std::vector<Series::Term> terms;
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
        std::swap(idx[i], idx[pick(rng)]);
        terms.emplace_back(window[idx[i]], Elem(coeff_dist(rng)));
    }
    return Series::make(twist, std::move(terms));
}

AssociativityReport check_associativity_sampled(const TwistPtr &twist, const std::vector<GroupElement> &window,
                                                std::size_t max_support, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::array<Series, 3>> triples;
    triples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        triples.push_back({random_series(twist, window, 1, max_support, rng),
                           random_series(twist, window, 1, max_support, rng),
                           random_series(twist, window, 1, max_support, rng)});
    }
    return check_associativity(triples);
}

} // namespace mn
