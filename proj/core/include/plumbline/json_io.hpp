#pragma once

// JSON encodings of the library's values. Vertex indices are 1-based on the
// wire and 0-based in memory. Exact scalars are written as "p/q" strings,
// float scalars as numbers; readers accept either.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plumbline/alkanes.hpp"
#include "plumbline/curve_periods.hpp"
#include "plumbline/elliptic.hpp"
#include "plumbline/field.hpp"
#include "plumbline/jet.hpp"
#include "plumbline/relations.hpp"

namespace plumbline::io {

using nlohmann::json;

/// Exact rational from a JSON integer, float literal or "p/q" string.
mpq_class rational_from_json(const json& j);

/// [re, im] pair, or a bare real.
template <CoefficientField F>
F scalar_from_json(const json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) throw DomainError("complex value must be [re, im]");
        return FieldTraits<F>::make(rational_from_json(j[0]), rational_from_json(j[1]));
    }
    return FieldTraits<F>::make(rational_from_json(j), 0);
}

json part_to_json(const mpq_class& x);
json part_to_json(double x);

template <CoefficientField F>
json scalar_to_json(const F& z)
{
    return json::array({part_to_json(FieldTraits<F>::real(z)), part_to_json(FieldTraits<F>::imag(z))});
}

/// { "vars": [...], "order": n, "terms": [ { "exp": [...], "re": ..., "im": ... } ] }
template <CoefficientField F>
json jet_to_json(const Jet<F>& a)
{
    json terms = json::array();
    for (const auto& [mono, c] : a.terms())
        terms.push_back({{"exp", mono.exponents},
                         {"re", part_to_json(FieldTraits<F>::real(c))},
                         {"im", part_to_json(FieldTraits<F>::imag(c))}});
    return {{"vars", a.ring().variables()}, {"order", a.ring().truncation_order()}, {"terms", std::move(terms)}};
}

template <CoefficientField F>
Jet<F> jet_from_json(const json& j)
{
    JetRing<F> ring(j.at("vars").get<std::vector<std::string>>(), j.at("order").get<int>());
    Jet<F> out = ring.zero();
    for (const auto& t : j.at("terms")) {
        const F c = FieldTraits<F>::make(rational_from_json(t.at("re")), rational_from_json(t.at("im")));
        out += ring.monomial(t.at("exp").get<std::vector<int>>(), c);
    }
    return out;
}

/// { "genus", "edges" (1-based), "code", "valency", "hydrogens" }
json alkane_to_json(const Alkane& a);
/// Reads "genus" and 1-based "edges"; other keys are ignored.
Alkane alkane_from_json(const json& j);

json edges_to_json(const std::set<Edge>& support);

/// { "point": "O|Half|TauHalf|HalfPlusTauHalf" | [re, im], "c": [re, im] }
template <CoefficientField F>
Mark<F> mark_from_json(const json& j)
{
    const json& p = j.at("point");
    MarkPoint<F> point = p.is_string() ? MarkPoint<F>(parse_two_torsion_label(p.get<std::string>()))
                                       : MarkPoint<F>(scalar_from_json<F>(p));
    return {point, scalar_from_json<F>(j.at("c"))};
}

template <CoefficientField F>
json mark_to_json(const Mark<F>& m)
{
    json point = std::holds_alternative<TwoTorsionLabel>(m.point)
                     ? json(to_string(std::get<TwoTorsionLabel>(m.point)))
                     : scalar_to_json(std::get<F>(m.point));
    return {{"point", std::move(point)}, {"c", scalar_to_json(m.coord_leading_coeff)}};
}

/// { "tau": [re, im], "marks": [ mark, ... ] }
template <CoefficientField F>
MarkedEllipticCurve<F> curve_from_json(const json& j)
{
    std::vector<Mark<F>> marks;
    for (const auto& m : j.value("marks", json::array())) marks.push_back(mark_from_json<F>(m));
    return MarkedEllipticCurve<F>(TauPoint<F>(scalar_from_json<F>(j.at("tau"))), std::move(marks));
}

template <CoefficientField F>
json curve_to_json(const MarkedEllipticCurve<F>& c)
{
    json marks = json::array();
    for (const auto& m : c.marks()) marks.push_back(mark_to_json(m));
    return {{"tau", scalar_to_json(c.tau().value())}, {"marks", std::move(marks)}};
}

template <CoefficientField F>
Matrix<F> scalar_matrix_from_json(const json& j)
{
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    Matrix<F> m(rows, cols, F(0));
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw ShapeMismatch("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<F>(j[r][c]);
    }
    return m;
}

/// Pair config: { "var": "t", "a": side, "b": side } where a side is either
/// { "curve": curve, "mark": k } or { "block": [[z..]..], "omega": [z..] }.
template <CoefficientField F>
PairPlumbing<F> pair_from_json(const json& j)
{
    auto side = [](const json& s) {
        if (s.contains("curve")) {
            const auto curve = curve_from_json<F>(s.at("curve"));
            const std::size_t k = s.value("mark", 0);
            return PlumbingSide<F>{Matrix<F>(1, 1, curve.tau().value()), {curve.form_value(k)}};
        }
        PlumbingSide<F> out{scalar_matrix_from_json<F>(s.at("block")), {}};
        for (const auto& w : s.at("omega")) out.omega.push_back(scalar_from_json<F>(w));
        return out;
    };
    PairPlumbing<F> p{side(j.at("a")), side(j.at("b")), j.value("var", std::string("t"))};
    return p;
}

/// Star config: { "curves": [curve..], "b": [z..], "vars": [..] (optional) }.
template <CoefficientField F>
StarConfig<F> star_from_json(const json& j)
{
    StarConfig<F> s;
    for (const auto& c : j.at("curves")) s.curves.push_back(curve_from_json<F>(c));
    for (const auto& b : j.at("b")) s.attach.push_back(scalar_from_json<F>(b));
    s.vars = j.contains("vars") ? j.at("vars").get<std::vector<std::string>>()
                                : star_variables(static_cast<int>(s.curves.size()));
    s.validate();
    return s;
}

/// Tree config: { "alkane": {genus, edges}, "taus": [z..],
///   "edges": [ { "edge": [i, j], "var": "t1_2", "marks": [mark_i, mark_j] } ] }.
template <CoefficientField F>
TreeConfig<F> tree_from_json(const json& j)
{
    TreeConfig<F> c{alkane_from_json(j.at("alkane")), {}, {}};
    for (const auto& t : j.at("taus")) c.taus.emplace_back(scalar_from_json<F>(t));
    const auto default_vars = edge_variables(c.alkane);
    std::size_t k = 0;
    for (const auto& e : j.at("edges")) {
        const auto ends = e.at("edge").get<std::vector<int>>();
        if (ends.size() != 2) throw InvalidConfiguration("edge must be [i, j]");
        const int a = ends[0] - 1, b = ends[1] - 1;
        const auto& marks = e.at("marks");
        if (marks.size() != 2) throw InvalidConfiguration("edge needs two marks");
        Mark<F> first = mark_from_json<F>(marks[0]);
        Mark<F> second = mark_from_json<F>(marks[1]);
        if (a > b) std::swap(first, second);
        std::string var = e.contains("var") ? e.at("var").get<std::string>()
                                            : (k < default_vars.size() ? default_vars[k] : "t" + std::to_string(k));
        c.edges.push_back({Edge(a, b), std::move(var), std::move(first), std::move(second)});
        ++k;
    }
    c.validate();
    return c;
}

template <CoefficientField F>
json tree_to_json(const TreeConfig<F>& c)
{
    json edges = json::array();
    for (const auto& e : c.edges)
        edges.push_back({{"edge", {e.edge.u + 1, e.edge.v + 1}},
                         {"var", e.var},
                         {"marks", {mark_to_json(e.at_u), mark_to_json(e.at_v)}}});
    json taus = json::array();
    for (const auto& t : c.taus) taus.push_back(scalar_to_json(t.value()));
    return {{"alkane", alkane_to_json(c.alkane)}, {"taus", std::move(taus)}, {"edges", std::move(edges)}};
}

/// { "genus", "mode", "entries", "support", "alkane_code" }
template <CoefficientField F>
json period_matrix_to_json(const PeriodMatrixJet<F>& m, const std::optional<std::string>& alkane_code = std::nullopt,
                           double tol = kDefaultTolerance)
{
    json entries = json::array();
    for (std::size_t i = 0; i < m.genus(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.genus(); ++j) row.push_back(jet_to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    json out = {{"genus", m.genus()},
                {"mode", to_string(m.mode)},
                {"entries", std::move(entries)},
                {"support", edges_to_json(offdiag_support(m, tol))},
                {"alkane_code", alkane_code ? json(*alkane_code) : json(nullptr)}};
    if (!m.notes.empty()) out["notes"] = m.notes;
    return out;
}

/// { "g", "mode", "octics_checked", "all_vanish_through", "min_surviving_degree" }
json asymptotic_report_to_json(const AsymptoticReport& r);

} // namespace plumbline::io
