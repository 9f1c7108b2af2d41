#include <array>

#include "cli.hpp"
#include "plumbline/alkanes.hpp"
#include "plumbline/curve_periods.hpp"
#include "plumbline/linalg.hpp"
#include "plumbline/relations.hpp"
#include "plumbline/surfaces.hpp"

namespace plumbline::cli {

using nlohmann::json;
using Q = GaussianRational;

namespace {

constexpr std::array<int, 12> kCounts = {1, 1, 1, 2, 3, 5, 9, 18, 35, 75, 159, 355};

void alkane_counts(Report& r, json& out)
{
    bool ok = true, hydrogens = true;
    json counts = json::array();
    for (int g = 1; g <= 12; ++g) {
        const auto list = enumerate_alkanes(g);
        counts.push_back(list.size());
        ok = ok && static_cast<int>(list.size()) == kCounts[g - 1];
        for (const auto& a : list) hydrogens = hydrogens && hydrogen_count(a) == 2 * g + 2;
    }
    out["alkane_counts"] = counts;
    r.add("AC1_alkane_counts_g1_12", ok && hydrogens);
}

void cone_vanishing(Report& r, json& out, const Rng& base, OcticVariant variant)
{
    bool frames = true, stars = true;
    std::size_t evaluated = 0;
    for (int g : {4, 5, 6}) {
        const auto octics = octic_indices(g);
        for (int t = 0; t < 100; ++t) {
            Rng fr = base.substream("selftest.frame." + std::to_string(g), t);
            const auto cone = plucker_to_cone(plucker_coordinates(random_frame<Q>(g, fr)));
            Rng sr = base.substream("selftest.star." + std::to_string(g), t);
            const auto star = random_star_config<Q>(g, sr);
            const JetRing<Q> ring(star.vars, 2);
            const auto lead = leading_cone_point(star_period_leading(star, ring, ScaleMode::ExactUnits), star.vars);
            for (const auto& q : octics) {
                frames = frames && octic_eval(cone.tau_bar, q, variant).is_zero();
                stars = stars && octic_eval(lead.tau_bar, q, variant).is_zero();
                evaluated += 2;
            }
        }
    }
    out["cone_octic_evaluations"] = evaluated;
    r.add("AC2_cone_vanishing_frames", frames);
    r.add("AC2_cone_vanishing_star_leading", stars);
}

void asymptotic(Report& r, json& out, const Rng& base, OcticVariant variant)
{
    bool ok = true, negative = true;
    json degrees = json::array();
    for (int t = 0; t < 5; ++t) {
        Rng sr = base.substream("selftest.asymptotic", t);
        const auto star = random_star_config<Q>(4, sr);
        const std::uint64_t seed = base.substream("selftest.perturb", t).next();
        AsymptoticOptions opt;
        opt.variant = variant;
        const auto rep = verify_asymptotic_vanishing(star, ScaleMode::ExactUnits, seed, opt);
        ok = ok && rep.pass;
        degrees.push_back(rep.min_surviving_degree ? json(*rep.min_surviving_degree) : json(nullptr));
        opt.off_cone_shift = Edge(0, 1);
        negative = negative && !verify_asymptotic_vanishing(star, ScaleMode::ExactUnits, seed, opt).pass;
    }
    out["mod_T9_min_surviving_degree"] = degrees;
    r.add("AC3_octics_vanish_mod_T9", ok);
    r.add("AC3_off_cone_negative_control", negative);
}

void branch_patterns(Report& r, const Rng& base)
{
    bool support = true, chain = true, dims = true;
    for (int g = 1; g <= 8; ++g)
        for (const auto& a : enumerate_alkanes(g)) {
            Rng rng = base.substream("selftest.tree." + canonical_code(a).code);
            const auto c = random_tree_config<Q>(a, rng);
            const JetRing<Q> ring(edge_variables(a), 1);
            const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
            const std::set<Edge> edges(a.edges().begin(), a.edges().end());
            support = support && offdiag_support(m) == edges;
            if (is_chain(a)) chain = chain && is_banded(m, 2);
        }
    for (int g = 2; g <= 10; ++g)
        dims = dims && banded_locus_dimension(g, 2) == 2 * g - 1 && banded_locus_dimension(g, 3) == 3 * g - 3;
    r.add("AC4_support_equals_edges", support);
    r.add("AC4_chain_is_tridiagonal", chain);
    r.add("AC4_banded_locus_dimensions", dims);
}

void rank_one(Report& r, const Rng& base)
{
    bool tree = true, pair = true;
    for (int g = 1; g <= 6; ++g)
        for (const auto& a : enumerate_alkanes(g))
            for (int t = 0; t < 20; ++t) {
                Rng rng = base.substream("selftest.rank1." + canonical_code(a).code, t);
                const auto c = random_tree_config<Q>(a, rng);
                const auto vars = edge_variables(a);
                const JetRing<Q> ring(vars, 1);
                const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
                for (const auto& v : vars) tree = tree && derivative_rank_one_check(m, v);

                if (c.edges.empty()) continue;
                const auto& e = c.edges.front();
                const JetRing<Q> pring({"t"}, 1);
                const PairPlumbing<Q> p{{Matrix<Q>(1, 1, c.taus[e.edge.u].value()), {normalized_form_value(e.at_u)}},
                                        {Matrix<Q>(1, 1, c.taus[e.edge.v].value()), {normalized_form_value(e.at_v)}},
                                        "t"};
                pair = pair && derivative_rank_one_check(pair_period_first_order(p, pring, ScaleMode::ExactUnits), "t");
            }
    r.add("AC5_tree_derivatives_rank_one", tree);
    r.add("AC5_pair_derivatives_rank_one", pair);
}

void surface_dims(Report& r)
{
    bool ok = true;
    for (int h = 1; h <= 12; ++h)
        for (const auto& a : enumerate_alkanes(h)) ok = ok && dim_V_Gamma(a) == 9 * h + 9;
    for (int h = 1; h <= 12; ++h) ok = ok && dim_W(std::vector<int>(h, 1)) == h + 1;
    ok = ok && dim_period_domain(1) == 18 && dim_K(4) == 2;
    r.add("AC6_surface_dimensions", ok);
}

void egamma(Report& r, const Rng& base)
{
    bool span = true, negative = true;
    for (int h = 1; h <= 7; ++h)
        for (const auto& a : enumerate_alkanes(h))
            for (int t = 0; t < 50; ++t) {
                Rng rng = base.substream("selftest.egamma." + canonical_code(a).code, t);
                auto model = random_surface_model<Q>(a, rng);
                span = span && span_dimension_E_Gamma(model) == static_cast<std::size_t>(h - 1);
                if (h >= 3) {
                    model.edges[1] = model.edges[0];
                    negative = negative && span_dimension_E_Gamma(model) < static_cast<std::size_t>(h - 1);
                }
            }
    r.add("AC7_E_Gamma_span_h_minus_1", span);
    r.add("AC7_duplicate_edge_negative_control", negative);
}

void skew_blocks(Report& r, json& out, const Rng& base)
{
    std::size_t counterexamples = 0, skew_seen = 0;
    Rng rng = base.substream("selftest.skew");
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        const int lead = static_cast<int>(rng.uniform_int(0, 3));
        // Sparse draws make skew and near-skew blocks common.
        auto draw = [&](int len) {
            std::vector<Q> v(len);
            for (auto& x : v) x = rng.coin() ? Q() : rng.scalar<Q>();
            return v;
        };
        const auto x = draw(n);
        auto y = draw(lead + n);
        if (rng.coin())
            for (int k = 0; k < n; ++k) y[lead + k] = -x[k];
        Matrix<Q> m(n, lead + n, Q());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < lead + n; ++j) m(i, j) = x[i] * y[j];
        const BlockRange block{0, static_cast<std::size_t>(lead), static_cast<std::size_t>(n)};
        bool skew = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) skew = skew && (m(i, lead + j) + m(j, lead + i)).is_zero();
        if (skew) ++skew_seen;
        if (!skew_block_rank_one_vanishing(m, block)) ++counterexamples;
    }

    bool pi_zero = true;
    for (int h = 2; h <= 6; ++h)
        for (const auto& a : enumerate_alkanes(h)) {
            Rng mr = base.substream("selftest.pi." + canonical_code(a).code);
            std::vector<int> parts(h);
            for (auto& p : parts) p = static_cast<int>(mr.uniform_int(1, 2));
            const auto model = random_surface_model<Q>(a, mr, parts);
            for (const auto& e : model.edges) {
                const auto pi = build_Pi(e, model.shapes);
                for (int v = 0; v < h; ++v) {
                    const BlockRange b = skew_block(model.shapes, v);
                    for (std::size_t i = 0; i < b.size; ++i)
                        for (std::size_t j = 0; j < b.size; ++j) pi_zero = pi_zero && pi(b.row0 + i, b.col0 + j).is_zero();
                }
            }
        }
    out["skew_search"] = {{"trials", 1000}, {"skew_blocks", skew_seen}, {"counterexamples", counterexamples}};
    r.add("AC8_rank_one_skew_is_zero", counterexamples == 0);
    r.add("AC8_Pi_trailing_blocks_zero", pi_zero);
}

} // namespace

Report selftest(const RunConfig& cfg)
{
    Report r("selftest");
    const OcticVariant variant = cfg.inject_corrupt_octic ? OcticVariant::Printed : OcticVariant::Corrected;
    r.set_config({{"seed", cfg.seed}, {"octic", to_string(variant)}});
    const Rng base(cfg.seed);
    json out = json::object();
    alkane_counts(r, out);
    cone_vanishing(r, out, base, variant);
    asymptotic(r, out, base, variant);
    branch_patterns(r, base);
    rank_one(r, base);
    surface_dims(r);
    egamma(r, base);
    skew_blocks(r, out, base);
    r.set_result(std::move(out));
    return r;
}

} // namespace plumbline::cli
