#include <algorithm>
#include <array>
#include <fstream>
#include <limits>

#include "cli.hpp"
#include "plumbline/alkanes.hpp"
#include "plumbline/curve_periods.hpp"
#include "plumbline/json_io.hpp"
#include "plumbline/relations.hpp"
#include "plumbline/surfaces.hpp"

namespace plumbline::cli {

using nlohmann::json;

namespace {

// OEIS A000602, genus 1..16.
constexpr std::array<int, 16> kAlkaneCounts = {1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355, 802, 1858, 4347, 10359};

json read_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file '" + path + "'");
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
}

const char* mode_name(bool exact) { return exact ? "exact" : "numeric"; }

template <class Fn>
auto with_field(bool exact, Fn&& fn)
{
    if (exact) return fn(GaussianRational{}, ScaleMode::ExactUnits);
    return fn(Complex{}, ScaleMode::Numeric);
}

// ---------------------------------------------------------------------------

template <CoefficientField F>
Report pair_impl(const RunConfig& cfg, ScaleMode mode)
{
    Report r("periods pair");
    const auto p = io::pair_from_json<F>(read_config(cfg.config_path));
    const int order = cfg.order < 0 ? 1 : cfg.order;
    r.set_config({{"config", cfg.config_path}, {"order", order}, {"mode", to_string(mode)}});
    const JetRing<F> ring({p.var}, order);
    const auto m = pair_period_first_order(p, ring, mode);
    r.set_result(io::period_matrix_to_json(m, std::nullopt, cfg.tol));
    r.add("symmetric", m.is_symmetric());
    r.add("rank_one_derivative", derivative_rank_one_check(m, p.var, cfg.tol), {{"var", p.var}});
    return r;
}

template <CoefficientField F>
Report star_impl(const RunConfig& cfg, ScaleMode mode)
{
    Report r("periods star");
    const auto s = io::star_from_json<F>(read_config(cfg.config_path));
    const int order = cfg.order < 0 ? 2 : cfg.order;
    r.set_config({{"config", cfg.config_path}, {"order", order}, {"mode", to_string(mode)}});
    const JetRing<F> ring(s.vars, order);
    const auto m = star_period_leading(s, ring, mode);
    r.set_result(io::period_matrix_to_json(m, std::nullopt, cfg.tol));
    r.add("symmetric", m.is_symmetric());
    const auto cone = leading_cone_point(m, s.vars);
    bool all = true;
    std::size_t checked = 0;
    for (const auto& q : octic_indices(static_cast<int>(s.genus()))) {
        all = all && octic_vanishes(cone.tau_bar, q, OcticVariant::Corrected, cfg.tol);
        ++checked;
    }
    r.add("leading_terms_satisfy_octics", all, {{"octics_checked", checked}});
    return r;
}

template <CoefficientField F>
Report tree_impl(const RunConfig& cfg, ScaleMode mode)
{
    Report r("periods tree");
    const auto c = io::tree_from_json<F>(read_config(cfg.config_path));
    const int order = cfg.order < 0 ? 1 : cfg.order;
    r.set_config({{"config", cfg.config_path}, {"order", order}, {"mode", to_string(mode)}});
    std::vector<std::string> vars;
    for (const auto& e : c.edges) vars.push_back(e.var);
    const JetRing<F> ring(vars, order);
    const auto m = tree_period_first_order(c, ring, mode);
    json result = io::period_matrix_to_json(m, canonical_code(c.alkane).code, cfg.tol);
    result["tridiagonal"] = is_banded(m, 2, cfg.tol);
    r.set_result(std::move(result));

    r.add("symmetric", m.is_symmetric());
    const auto support = offdiag_support(m, cfg.tol);
    const std::set<Edge> edges(c.alkane.edges().begin(), c.alkane.edges().end());
    r.add("support_equals_edges", support == edges);
    bool rank_one = true;
    for (const auto& v : vars) rank_one = rank_one && derivative_rank_one_check(m, v, cfg.tol);
    r.add("rank_one_derivatives", rank_one, {{"edges", vars.size()}});
    return r;
}

// ---------------------------------------------------------------------------

template <CoefficientField F>
Report relations_impl(const RunConfig& cfg, ScaleMode mode)
{
    Report r("relations verify");
    const int g = cfg.genus;
    const int order = cfg.order < 0 ? kMinAsymptoticOrder : cfg.order;
    if (g < 4) throw UsageError("relations verify needs --genus >= 4");
    if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
    if (order < kMinAsymptoticOrder) throw UsageError("--order must be >= 17");
    const OcticVariant variant = cfg.inject_corrupt_octic ? OcticVariant::Printed : OcticVariant::Corrected;
    r.set_config({{"genus", g},
                  {"trials", cfg.trials},
                  {"order", order},
                  {"seed", cfg.seed},
                  {"mode", to_string(mode)},
                  {"octic", to_string(variant)}});

    const Rng base(cfg.seed);
    bool cone_ok = true, star_ok = true, asym_ok = true, negative_ok = true;
    std::size_t octics = 0;
    std::optional<int> min_surviving;
    json trials = json::array();
    for (int t = 0; t < cfg.trials; ++t) {
        Rng frame_rng = base.substream("relations.frame", t);
        const auto cone = plucker_to_cone(plucker_coordinates(random_frame<F>(g, frame_rng), cfg.tol));
        for (const auto& q : octic_indices(g))
            cone_ok = cone_ok && octic_vanishes(cone.tau_bar, q, variant, cfg.tol);

        Rng star_rng = base.substream("relations.star", t);
        const auto star = random_star_config<F>(g, star_rng);
        const JetRing<F> ring(star.vars, 2);
        const auto leading = leading_cone_point(star_period_leading(star, ring, mode), star.vars);
        for (const auto& q : octic_indices(g))
            star_ok = star_ok && octic_vanishes(leading.tau_bar, q, variant, cfg.tol);

        const std::uint64_t perturb_seed = base.substream("relations.perturb", t).next();
        AsymptoticOptions opt;
        opt.order = order;
        opt.variant = variant;
        opt.tol = cfg.tol;
        const auto rep = verify_asymptotic_vanishing(star, mode, perturb_seed, opt);
        asym_ok = asym_ok && rep.pass;
        octics += rep.octics_checked;
        if (rep.min_surviving_degree && (!min_surviving || *rep.min_surviving_degree < *min_surviving))
            min_surviving = rep.min_surviving_degree;

        opt.off_cone_shift = Edge(0, 1);
        const auto neg = verify_asymptotic_vanishing(star, mode, perturb_seed, opt);
        negative_ok = negative_ok && !neg.pass;
        json entry = io::asymptotic_report_to_json(rep);
        entry["trial"] = t;
        entry["negative_control"] = io::asymptotic_report_to_json(neg);
        trials.push_back(std::move(entry));
    }
    r.set_result({{"g", g},
                  {"mode", to_string(mode)},
                  {"octics_checked", octics},
                  {"all_vanish_through", kOcticVanishingDegree},
                  {"min_surviving_degree", min_surviving ? json(*min_surviving) : json(nullptr)},
                  {"trials", std::move(trials)}});
    r.add("cone_vanishing", cone_ok, {{"frames", cfg.trials}});
    r.add("star_leading_on_cone", star_ok, {{"configs", cfg.trials}});
    r.add("asymptotic_vanishing_mod_T9", asym_ok, {{"through_degree", kOcticVanishingDegree}});
    r.add("negative_control_off_cone", negative_ok);
    return r;
}

// ---------------------------------------------------------------------------

json dims_json(const Alkane& a)
{
    const int h = a.genus();
    json dims = {{"V_h", dim_period_domain(h)},
                 {"V_Gamma", dim_V_Gamma_closed_form(h)},
                 {"W_1h", dim_W(std::vector<int>(h, 1))}};
    const SurfaceBlockShape s(1);
    json shapes = json::array();
    for (int v = 0; v < h; ++v) shapes.push_back({s.rows, s.cols()});
    return {{"alkane", io::alkane_to_json(a)}, {"h", h}, {"dims", std::move(dims)}, {"shapes", std::move(shapes)}};
}

template <CoefficientField F>
Report egamma_impl(const RunConfig& cfg, ScaleMode mode)
{
    Report r("surfaces egamma");
    const int h = cfg.genus;
    if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
    r.set_config({{"genus", h}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"mode", to_string(mode)}});
    const auto alkanes = enumerate_alkanes(h);
    const Rng base(cfg.seed);
    bool span_ok = true, negative_ok = true, trailing_ok = true;
    json entries = json::array();
    for (std::size_t k = 0; k < alkanes.size(); ++k) {
        const Alkane& a = alkanes[k];
        std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
        for (int t = 0; t < cfg.trials; ++t) {
            Rng rng = base.substream("surfaces.egamma." + canonical_code(a).code, t);
            auto model = random_surface_model<F>(a, rng);
            const std::size_t d = span_dimension_E_Gamma(model, cfg.tol);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            span_ok = span_ok && d == static_cast<std::size_t>(h - 1);
            for (const auto& e : model.edges) {
                const auto pi = build_Pi(e, model.shapes);
                for (int v : {e.edge().u, e.edge().v})
                    trailing_ok = trailing_ok && skew_block_rank_one_vanishing(pi, skew_block(model.shapes, v), cfg.tol);
            }
            if (h >= 3) {
                model.edges[1] = model.edges[0];
                negative_ok = negative_ok && span_dimension_E_Gamma(model, cfg.tol) < static_cast<std::size_t>(h - 1);
            }
        }
        json entry = dims_json(a);
        entry["span_dim"] = lo;
        entry["span_dim_max"] = hi;
        entries.push_back(std::move(entry));
    }
    r.set_result({{"h", h}, {"mode", to_string(mode)}, {"alkanes", std::move(entries)}});
    r.add("span_dimension_is_h_minus_1", span_ok, {{"expected", h - 1}});
    r.add("skew_blocks_vanish", trailing_ok);
    if (h >= 3) r.add("duplicate_edge_data_drops_span", negative_ok);
    return r;
}

} // namespace

// ---------------------------------------------------------------------------

Report alkanes_enum(const RunConfig& cfg)
{
    Report r("alkanes enum");
    r.set_config({{"genus", cfg.genus}});
    const auto list = enumerate_alkanes(cfg.genus);
    json arr = json::array();
    bool hydrogens = true;
    for (const auto& a : list) {
        arr.push_back(io::alkane_to_json(a));
        hydrogens = hydrogens && hydrogen_count(a) == 2 * cfg.genus + 2;
    }
    r.set_result({{"genus", cfg.genus}, {"count", list.size()}, {"alkanes", std::move(arr)}});
    r.add("hydrogen_count_2g_plus_2", hydrogens);
    const int expected = kAlkaneCounts.at(cfg.genus - 1);
    r.add("count_matches_A000602", static_cast<int>(list.size()) == expected,
          {{"expected", expected}, {"got", list.size()}});
    return r;
}

Report alkanes_count(const RunConfig& cfg)
{
    Report r("alkanes count");
    r.set_config({{"max", cfg.max_genus}});
    if (cfg.max_genus < 1 || cfg.max_genus > kDefaultGenusCap)
        throw RangeError("--max must lie in [1, " + std::to_string(kDefaultGenusCap) + "]");
    std::vector<int> counts;
    bool ok = true;
    for (int g = 1; g <= cfg.max_genus; ++g) {
        counts.push_back(static_cast<int>(enumerate_alkanes(g).size()));
        ok = ok && counts.back() == kAlkaneCounts.at(g - 1);
    }
    r.set_result({{"max", cfg.max_genus}, {"counts", counts}});
    r.add("counts_match_A000602", ok);
    return r;
}

Report periods_pair(const RunConfig& cfg)
{
    return with_field(cfg.exact, [&](auto f, ScaleMode m) { return pair_impl<decltype(f)>(cfg, m); });
}

Report periods_star(const RunConfig& cfg)
{
    return with_field(cfg.exact, [&](auto f, ScaleMode m) { return star_impl<decltype(f)>(cfg, m); });
}

Report periods_tree(const RunConfig& cfg)
{
    return with_field(cfg.exact, [&](auto f, ScaleMode m) { return tree_impl<decltype(f)>(cfg, m); });
}

Report relations_verify(const RunConfig& cfg)
{
    return with_field(cfg.exact, [&](auto f, ScaleMode m) { return relations_impl<decltype(f)>(cfg, m); });
}

Report surfaces_dims(const RunConfig& cfg)
{
    Report r("surfaces dims");
    const int h = cfg.genus;
    r.set_config({{"genus", h}});
    const auto alkanes = enumerate_alkanes(h);
    json entries = json::array();
    bool v_gamma = true;
    for (const auto& a : alkanes) {
        json entry = dims_json(a);
        try {
            entry["dims"]["V_Gamma_by_valency"] = dim_V_Gamma(a);
        } catch (const FormulaViolation& e) {
            v_gamma = false;
            entry["dims"]["V_Gamma_by_valency"] = e.what();
        }
        entries.push_back(std::move(entry));
    }
    json k = json::array();
    for (int j = 0; j <= 4; ++j) k.push_back(dim_K(j));
    r.set_result({{"h", h}, {"K", std::move(k)}, {"alkanes", std::move(entries)}});
    r.add("V_Gamma_valency_count_is_9h_plus_9", v_gamma);
    r.add("W_1h_is_h_plus_1", dim_W(std::vector<int>(h, 1)) == h + 1);
    return r;
}

Report surfaces_egamma(const RunConfig& cfg)
{
    return with_field(cfg.exact, [&](auto f, ScaleMode m) { return egamma_impl<decltype(f)>(cfg, m); });
}

} // namespace plumbline::cli
