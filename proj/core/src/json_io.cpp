#include "plumbline/json_io.hpp"

namespace plumbline::io {

mpq_class rational_from_json(const json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return parse_rational(j.dump()); // shortest round-trip text, read exactly
    throw DomainError("expected a number or a \"p/q\" string, got " + j.dump());
}

json part_to_json(const mpq_class& x) { return rational_to_string(x); }
json part_to_json(double x) { return x; }

json alkane_to_json(const Alkane& a)
{
    json edges = json::array();
    for (const Edge& e : a.edges()) edges.push_back({e.u + 1, e.v + 1});
    const auto p = valency_profile(a);
    return {{"genus", a.genus()},
            {"edges", std::move(edges)},
            {"code", canonical_code(a).code},
            {"valency", p.gamma},
            {"hydrogens", hydrogen_count(a)}};
}

Alkane alkane_from_json(const json& j)
{
    const int genus = j.at("genus").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", json::array())) {
        const auto ends = e.get<std::vector<int>>();
        if (ends.size() != 2) throw InvalidAlkane("edge must be [i, j]");
        edges.emplace_back(ends[0] - 1, ends[1] - 1);
    }
    return Alkane(genus, std::move(edges));
}

json edges_to_json(const std::set<Edge>& support)
{
    json out = json::array();
    for (const Edge& e : support) out.push_back({e.u + 1, e.v + 1});
    return out;
}

json asymptotic_report_to_json(const AsymptoticReport& r)
{
    return {{"g", r.genus},
            {"mode", to_string(r.mode)},
            {"octics_checked", r.octics_checked},
            {"all_vanish_through", r.vanish_through},
            {"min_surviving_degree", r.min_surviving_degree ? json(*r.min_surviving_degree) : json(nullptr)},
            {"pass", r.pass}};
}

} // namespace plumbline::io
