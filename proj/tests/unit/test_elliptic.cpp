#include <gtest/gtest.h>

#include "plumbline/elliptic.hpp"
#include "plumbline/rng.hpp"

using namespace plumbline;
using Q = GaussianRational;

namespace {

Q gq(long re_num, long re_den, long im_num, long im_den)
{
    return Q(mpq_class(mpz_class(re_num), mpz_class(re_den)), mpq_class(mpz_class(im_num), mpz_class(im_den)));
}

bool in_closed_domain(const Q& z)
{
    const mpq_class half(1, 2);
    return abs(z.real()) <= half && z.norm() >= 1;
}

} // namespace

TEST(TauPoint, RequiresUpperHalfPlane)
{
    EXPECT_THROW(TauPoint<Q>(Q(1)), DomainError);
    EXPECT_THROW(TauPoint<Complex>(Complex(0, -1)), DomainError);
    EXPECT_NO_THROW(TauPoint<Q>(Q::i()));
}

TEST(NormalizedForm, Examples)
{
    EXPECT_EQ(normalized_form_value(Mark<Q>{TwoTorsionLabel::O, Q(1)}), Q(1));
    EXPECT_EQ(normalized_form_value(Mark<Q>{TwoTorsionLabel::O, Q(2)}), gq(1, 2, 0, 1));
    EXPECT_EQ(normalized_form_value(Mark<Q>{TwoTorsionLabel::Half, Q(-1)}), Q(-1));
    EXPECT_THROW(normalized_form_value(Mark<Q>{TwoTorsionLabel::O, Q(0)}), InvalidMark);
}

TEST(NormalizedForm, ReciprocalProperty)
{
    Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const Q c = rng.nonzero_gaussian();
        EXPECT_EQ(normalized_form_value(Mark<Q>{TwoTorsionLabel::O, c}) * c, Q(1));
    }
}

TEST(TwoTorsion, RepresentativesAtI)
{
    const auto r = two_torsion_representatives(TauPoint<Q>(Q::i()));
    EXPECT_EQ(r[0], Q(0));
    EXPECT_EQ(r[1], gq(1, 2, 0, 1));
    EXPECT_EQ(r[2], gq(0, 1, 1, 2));
    EXPECT_EQ(r[3], gq(1, 2, 1, 2));
    const TauPoint<Q> tau(gq(1, 3, 2, 1));
    const auto s = two_torsion_representatives(tau);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) EXPECT_FALSE(in_lattice(Q(s[a] - s[b]), tau));
}

TEST(TwoTorsion, LabelText)
{
    for (auto label : kTwoTorsionLabels) EXPECT_EQ(parse_two_torsion_label(to_string(label)), label);
    EXPECT_THROW(parse_two_torsion_label("Quarter"), DomainError);
}

TEST(MarkedCurve, RejectsCoincidentMarks)
{
    const TauPoint<Q> tau(Q::i());
    using Marks = std::vector<Mark<Q>>;
    EXPECT_NO_THROW(MarkedEllipticCurve<Q>(tau, Marks{{TwoTorsionLabel::O, Q(1)}, {TwoTorsionLabel::Half, Q(1)}}));
    EXPECT_THROW(MarkedEllipticCurve<Q>(tau, Marks{{TwoTorsionLabel::O, Q(1)}, {Q(1), Q(2)}}), InvalidMark);
    EXPECT_THROW(MarkedEllipticCurve<Q>(tau, Marks{{TwoTorsionLabel::TauHalf, Q(1)}, {gq(0, 1, -1, 2), Q(2)}}),
                 InvalidMark);
    EXPECT_THROW(MarkedEllipticCurve<Q>(tau, Marks{{TwoTorsionLabel::O, Q(0)}}), InvalidMark);
    const MarkedEllipticCurve<Q> c(tau, Marks{{TwoTorsionLabel::O, Q(4)}});
    EXPECT_EQ(c.form_value(0), gq(1, 4, 0, 1));
    EXPECT_THROW(c.mark(1), InvalidMark);
}

TEST(Reduce, Examples)
{
    const auto [a, ma] = reduce_to_fundamental_domain(TauPoint<Q>(gq(5, 1, 1, 1)));
    EXPECT_EQ(a.value(), Q::i());
    EXPECT_EQ(ma, (SL2Z{1, -5, 0, 1}));

    const auto [b, mb] = reduce_to_fundamental_domain(TauPoint<Q>(gq(0, 1, 1, 2)));
    EXPECT_EQ(b.value(), gq(0, 1, 2, 1));
    EXPECT_EQ(mb, (SL2Z{0, -1, 1, 0}));

    const TauPoint<Complex> c(Complex(0.3, 0.01));
    const auto [rc, mc] = reduce_to_fundamental_domain(c);
    EXPECT_LE(std::abs(rc.value().real()), 0.5 + 1e-12);
    EXPECT_GE(std::abs(rc.value()), 1.0 - 1e-12);
    EXPECT_EQ(mc.det(), 1);
    EXPECT_LT(std::abs(mc.apply(c.value()) - rc.value()), 1e-9);
}

TEST(Reduce, BoundaryConventions)
{
    EXPECT_EQ(reduce_to_fundamental_domain(TauPoint<Q>(gq(1, 2, 1, 1))).first.value(), gq(-1, 2, 1, 1));
    // 5/13 + 12/13 i lies on the unit arc with positive real part.
    EXPECT_EQ(reduce_to_fundamental_domain(TauPoint<Q>(gq(5, 13, 12, 13))).first.value(), gq(-5, 13, 12, 13));
    // 3/5 + 4/5 i: T^-1 then S lands on 1/2 + i, which folds to -1/2 + i.
    EXPECT_EQ(reduce_to_fundamental_domain(TauPoint<Q>(gq(3, 5, 4, 5))).first.value(), gq(-1, 2, 1, 1));
}

TEST(Reduce, PropertiesOnRandomPoints)
{
    Rng rng(99);
    for (int k = 0; k < 300; ++k) {
        const Q z(rng.rational(40, 9), mpq_class(mpz_class(rng.uniform_int(1, 30)), mpz_class(rng.uniform_int(1, 40))));
        const TauPoint<Q> tau(z);
        const auto [r, m] = reduce_to_fundamental_domain(tau);
        EXPECT_TRUE(in_closed_domain(r.value()));
        EXPECT_EQ(m.det(), 1);
        EXPECT_EQ(m.apply(z), r.value());
        const auto [r2, m2] = reduce_to_fundamental_domain(r);
        EXPECT_EQ(r2, r);
        EXPECT_EQ(m2, SL2Z{});
    }
}

TEST(Isomorphic, Examples)
{
    const TauPoint<Q> i(Q::i());
    const Q z = Q::i();
    EXPECT_TRUE(are_isomorphic(i, TauPoint<Q>(SL2Z{2, 1, 1, 1}.apply(z))));
    EXPECT_FALSE(are_isomorphic(i, TauPoint<Q>(gq(0, 1, 2, 1))));
    const Q t = gq(1, 7, 3, 2);
    EXPECT_TRUE(are_isomorphic(TauPoint<Q>(t), TauPoint<Q>(t + Q(1))));
}

TEST(Isomorphic, EquivalenceRelationOnSamples)
{
    Rng rng(4);
    const std::vector<SL2Z> moves = {{1, 1, 0, 1}, {0, -1, 1, 0}, {2, 1, 1, 1}, {1, 0, 3, 1}};
    std::vector<TauPoint<Q>> pts;
    for (int k = 0; k < 12; ++k) {
        const Q base(rng.rational(3, 4), mpq_class(mpz_class(rng.uniform_int(1, 3)), mpz_class(2)));
        pts.emplace_back(base);
        pts.emplace_back(moves[k % moves.size()].apply(base));
    }
    for (const auto& x : pts) {
        EXPECT_TRUE(are_isomorphic(x, x));
        for (const auto& y : pts) {
            EXPECT_EQ(are_isomorphic(x, y), are_isomorphic(y, x));
            for (const auto& z : pts)
                if (are_isomorphic(x, y) && are_isomorphic(y, z)) EXPECT_TRUE(are_isomorphic(x, z));
        }
    }
    for (std::size_t k = 0; k < pts.size(); k += 2) EXPECT_TRUE(are_isomorphic(pts[k], pts[k + 1]));
}

TEST(Isomorphic, FloatPathAgreesWithExact)
{
    const Complex z(0.25, 1.5);
    EXPECT_TRUE(are_isomorphic(TauPoint<Complex>(z), TauPoint<Complex>(SL2Z{3, 2, 1, 1}.apply(z))));
    EXPECT_FALSE(are_isomorphic(TauPoint<Complex>(z), TauPoint<Complex>(z * 2.0)));
}
