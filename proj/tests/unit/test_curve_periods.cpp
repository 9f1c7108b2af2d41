#include <gtest/gtest.h>

#include <algorithm>

#include "plumbline/curve_periods.hpp"

using namespace plumbline;
using Q = GaussianRational;
using Marks = std::vector<Mark<Q>>;

namespace {

Q frac(long n, long d) { return Q(mpq_class(mpz_class(n), mpz_class(d))); }

MarkedEllipticCurve<Q> curve(const Q& tau, const Q& c)
{
    return MarkedEllipticCurve<Q>(TauPoint<Q>(tau), Marks{{TwoTorsionLabel::O, c}});
}

StarConfig<Q> unit_star(int g)
{
    StarConfig<Q> s;
    for (int i = 0; i < g; ++i) {
        s.curves.push_back(curve(Q(mpq_class(0), mpq_class(i + 1)), Q(1)));
        s.attach.push_back(Q(i));
    }
    s.vars = star_variables(g);
    return s;
}

TreeConfig<Q> unit_tree(const Alkane& a)
{
    TreeConfig<Q> c{a, {}, {}};
    std::vector<int> used(a.genus(), 0);
    for (int v = 0; v < a.genus(); ++v) c.taus.emplace_back(Q(mpq_class(v), mpq_class(1)));
    const auto vars = edge_variables(a);
    for (std::size_t k = 0; k < a.edges().size(); ++k) {
        const Edge& e = a.edges()[k];
        c.edges.push_back({e, vars[k], {kTwoTorsionLabels[used[e.u]++], Q(1)}, {kTwoTorsionLabels[used[e.v]++], Q(1)}});
    }
    return c;
}

} // namespace

TEST(PlumbingConstant, Modes)
{
    EXPECT_EQ(plumbing_constant<Q>(ScaleMode::ExactUnits, 4), frac(1, 4));
    EXPECT_THROW(plumbing_constant<Q>(ScaleMode::Numeric, 4), InvalidConfiguration);
    const Complex c = plumbing_constant<Complex>(ScaleMode::Numeric, 4);
    EXPECT_NEAR(c.real(), 0.0, 1e-15);
    EXPECT_NEAR(c.imag(), std::numbers::pi / 2, 1e-15);
}

TEST(PairPeriod, PaperExample)
{
    const auto p = PairPlumbing<Q>::from_curves(curve(Q::i(), Q(1)), 0, curve(Q(mpq_class(0), mpq_class(2)), Q(1)), 0);
    const JetRing<Q> ring({"t"}, 1);
    const auto m = pair_period_first_order(p, ring, ScaleMode::ExactUnits);
    const auto t = ring.variable("t");
    EXPECT_EQ(m(0, 0), ring.constant(Q::i()) + t * frac(1, 4));
    EXPECT_EQ(m(0, 1), t * frac(-1, 4));
    EXPECT_EQ(m(1, 0), t * frac(-1, 4));
    EXPECT_EQ(m(1, 1), ring.constant(Q(mpq_class(0), mpq_class(2))) + t * frac(1, 4));
    EXPECT_TRUE(derivative_rank_one_check(m, "t"));
    EXPECT_TRUE(m.is_symmetric());
}

TEST(PairPeriod, FormValuesEnterTheOffDiagonal)
{
    // v = 2 and v = 3 come from c = 1/2 and c = 1/3.
    const auto p = PairPlumbing<Q>::from_curves(curve(Q::i(), frac(1, 2)), 0, curve(Q::i(), frac(1, 3)), 0);
    const JetRing<Q> ring({"t"}, 1);
    const auto m = pair_period_first_order(p, ring, ScaleMode::ExactUnits);
    EXPECT_EQ(m(0, 1).coefficient({1}), frac(-3, 2));
}

TEST(PairPeriod, HigherGenusBlocks)
{
    Matrix<Q> a(2, 2, Q(0));
    a(0, 0) = Q::i();
    a(1, 1) = Q(mpq_class(1), mpq_class(3));
    a(0, 1) = a(1, 0) = frac(1, 5);
    PairPlumbing<Q> p{{a, {Q(1), Q(2)}}, {Matrix<Q>(1, 1, Q::i()), {Q(3)}}, "s"};
    const JetRing<Q> ring({"s"}, 1);
    const auto m = pair_period_first_order(p, ring, ScaleMode::ExactUnits);
    ASSERT_EQ(m.genus(), 3u);
    EXPECT_EQ(m(0, 1).coefficient({0}), frac(1, 5));
    EXPECT_EQ(m(1, 2).coefficient({1}), frac(-6, 4));
    EXPECT_TRUE(derivative_rank_one_check(m, "s"));
    PairPlumbing<Q> bad{{a, {Q(1)}}, {Matrix<Q>(1, 1, Q::i()), {Q(3)}}, "s"};
    EXPECT_THROW(pair_period_first_order(bad, ring, ScaleMode::ExactUnits), ShapeMismatch);
}

TEST(StarPeriod, PaperExamples)
{
    auto s2 = unit_star(2);
    const JetRing<Q> r2(s2.vars, 2);
    const auto m2 = star_period_leading(s2, r2, ScaleMode::ExactUnits);
    EXPECT_EQ(m2(0, 1).coefficient({1, 1}), frac(1, 16));
    EXPECT_FALSE(m2.notes.empty());

    const auto s4 = unit_star(4);
    const JetRing<Q> r4(s4.vars, 2);
    const auto m4 = star_period_leading(s4, r4, ScaleMode::ExactUnits);
    EXPECT_EQ(m4(0, 2).coefficient({1, 0, 1, 0}), frac(1, 64));
    EXPECT_TRUE(m4.is_symmetric());
    EXPECT_THROW(star_period_leading(s4, JetRing<Q>(s4.vars, 1), ScaleMode::ExactUnits), RangeError);
}

TEST(StarPeriod, ScalingAllParametersScalesOffDiagonalQuadratically)
{
    Rng rng(31);
    const auto s = random_star_config<Q>(4, rng);
    const JetRing<Q> ring(s.vars, 2);
    const auto m = star_period_leading(s, ring, ScaleMode::ExactUnits);
    const Q sc = frac(3, 7);
    std::vector<Q> at(4, Q(1)), scaled(4, sc);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) EXPECT_EQ(m(i, j).evaluate(scaled), sc * sc * m(i, j).evaluate(at));
}

TEST(StarPeriod, RejectsBadConfigs)
{
    auto s = unit_star(3);
    s.attach[2] = s.attach[0];
    EXPECT_THROW(s.validate(), InvalidConfiguration);
    s = unit_star(3);
    s.vars = {"t1", "t1", "t2"};
    EXPECT_THROW(s.validate(), InvalidConfiguration);
    s = unit_star(3);
    s.vars.pop_back();
    EXPECT_THROW(s.validate(), InvalidConfiguration);
}

TEST(TreePeriod, ChainExample)
{
    const auto c = unit_tree(chain_alkane(3));
    const JetRing<Q> ring(edge_variables(c.alkane), 1);
    const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
    EXPECT_EQ(offdiag_support(m), (std::set<Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(m(0, 2).is_zero());
    EXPECT_EQ(m(0, 1), ring.variable("t1_2") * frac(-1, 4));
    EXPECT_TRUE(is_banded(m, 2));
}

TEST(TreePeriod, StarPattern)
{
    const auto c = unit_tree(star_alkane(5));
    const JetRing<Q> ring(edge_variables(c.alkane), 1);
    const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
    for (int j = 1; j < 5; ++j) EXPECT_FALSE(m(0, j).is_zero());
    for (int i = 1; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) EXPECT_TRUE(m(i, j).is_zero());
    EXPECT_FALSE(is_banded(m, 2));
}

TEST(TreePeriod, MatchesEntrywiseFormula)
{
    Rng rng(77);
    for (int g = 2; g <= 7; ++g)
        for (const auto& a : enumerate_alkanes(g)) {
            const auto c = random_tree_config<Q>(a, rng);
            const JetRing<Q> ring(edge_variables(a), 1);
            const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
            // Expected entry by entry: -v_u v_v t_e / 4 off the diagonal,
            // tau_i + sum over incident edges v^2 t_e / 4 on it.
            Matrix<ExactJet> expect(g, g, ring.zero());
            for (int v = 0; v < g; ++v) expect(v, v) = ring.constant(c.taus[v].value());
            for (const auto& e : c.edges) {
                const Q vu = Q(1) / e.at_u.coord_leading_coeff, vv = Q(1) / e.at_v.coord_leading_coeff;
                const auto t = ring.variable(e.var);
                expect(e.edge.u, e.edge.v) += t * (-vu * vv * frac(1, 4));
                expect(e.edge.v, e.edge.u) += t * (-vu * vv * frac(1, 4));
                expect(e.edge.u, e.edge.u) += t * (vu * vu * frac(1, 4));
                expect(e.edge.v, e.edge.v) += t * (vv * vv * frac(1, 4));
            }
            EXPECT_EQ(m.entries, expect);
        }
}

TEST(TreePeriod, SupportEqualsEdgesForAllSmallAlkanes)
{
    Rng rng(8);
    for (int g = 1; g <= 8; ++g)
        for (const auto& a : enumerate_alkanes(g)) {
            const auto c = random_tree_config<Q>(a, rng);
            const JetRing<Q> ring(edge_variables(a), 1);
            const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
            const std::set<Edge> edges(a.edges().begin(), a.edges().end());
            EXPECT_EQ(offdiag_support(m), edges);
            EXPECT_EQ(is_banded(m, 2), is_chain(a));
            EXPECT_TRUE(m.is_symmetric());
            for (const auto& v : edge_variables(a)) EXPECT_TRUE(derivative_rank_one_check(m, v));
        }
}

TEST(TreePeriod, EdgeOrderIndependence)
{
    Rng rng(12);
    for (const auto& a : enumerate_alkanes(7)) {
        auto c = random_tree_config<Q>(a, rng);
        const JetRing<Q> ring(edge_variables(a), 1);
        const auto m = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
        std::reverse(c.edges.begin(), c.edges.end());
        EXPECT_EQ(tree_period_first_order(c, ring, ScaleMode::ExactUnits).entries, m.entries);
    }
}

TEST(TreePeriod, ScalingCovariance)
{
    Rng rng(21);
    const Alkane a = enumerate_alkanes(5).front();
    auto c = random_tree_config<Q>(a, rng);
    const JetRing<Q> ring(edge_variables(a), 1);
    const auto before = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
    const Q s = frac(5, 3);
    c.edges[0].at_u.coord_leading_coeff *= s;
    const auto after = tree_period_first_order(c, ring, ScaleMode::ExactUnits);
    const Edge e = c.edges[0].edge;
    const std::string& var = c.edges[0].var;
    const auto cb = coefficient_matrix(before, var), ca = coefficient_matrix(after, var);
    EXPECT_EQ(ca(e.u, e.v) * s, cb(e.u, e.v));
    EXPECT_EQ(ca(e.u, e.u) * s * s, cb(e.u, e.u));
    EXPECT_EQ(ca(e.v, e.v), cb(e.v, e.v));
}

TEST(TreePeriod, RejectsBadConfigs)
{
    auto c = unit_tree(chain_alkane(3));
    c.edges[1].at_v.point = Q(mpq_class(1, 3));
    EXPECT_THROW(c.validate(), InvalidConfiguration);
    c = unit_tree(chain_alkane(3));
    c.edges[1].at_u = c.edges[0].at_v;
    EXPECT_THROW(c.validate(), InvalidMark);
    c = unit_tree(chain_alkane(3));
    c.edges[1].var = c.edges[0].var;
    EXPECT_THROW(c.validate(), InvalidConfiguration);
    c = unit_tree(chain_alkane(3));
    c.taus.pop_back();
    EXPECT_THROW(c.validate(), InvalidConfiguration);
}

TEST(TreePeriod, NumericModeIsSymmetricAndRankOne)
{
    Rng rng(6);
    for (const auto& a : enumerate_alkanes(6)) {
        const auto c = random_tree_config<Complex>(a, rng);
        const JetRing<Complex> ring(edge_variables(a), 1);
        const auto m = tree_period_first_order(c, ring, ScaleMode::Numeric);
        EXPECT_TRUE(m.is_symmetric());
        const std::set<Edge> edges(a.edges().begin(), a.edges().end());
        EXPECT_EQ(offdiag_support(m), edges);
        for (const auto& v : edge_variables(a)) EXPECT_TRUE(derivative_rank_one_check(m, v));
    }
}

TEST(Banded, Examples)
{
    EXPECT_EQ(banded_locus_dimension(4, 2), 7);
    EXPECT_EQ(banded_locus_dimension(4, 3), 9);
    EXPECT_EQ(banded_locus_dimension(1, 3), 1);
    for (int g = 2; g <= 10; ++g) {
        EXPECT_EQ(banded_locus_dimension(g, 2), 2 * g - 1);
        EXPECT_EQ(banded_locus_dimension(g, 3), 3 * g - 3);
    }
    EXPECT_TRUE(is_banded(std::set<Edge>{}, 1));
    EXPECT_FALSE(is_banded(std::set<Edge>{{0, 1}}, 1));
    EXPECT_TRUE(is_banded(std::set<Edge>{{0, 2}}, 3));
}

TEST(RankOne, IdentityDerivativeFails)
{
    const JetRing<Q> ring({"t"}, 1);
    PeriodMatrixJet<Q> m = constant_period_matrix<Q>({Q::i(), Q::i()}, ring, ScaleMode::ExactUnits);
    m.entries(0, 0) += ring.variable("t");
    m.entries(1, 1) += ring.variable("t");
    EXPECT_FALSE(derivative_rank_one_check(m, "t"));
    EXPECT_TRUE(offdiag_support(m).empty());
}
